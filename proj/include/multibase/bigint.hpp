#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace multibase {

// Exact integer/rational types. cpp_int keeps values up to two 64-bit limbs
// inline, so the big DP tables stay allocation-free for every n this tool
// targets while still being arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Natural log of a positive BigInt, exact bit-length plus mantissa correction.
double log_big(const BigInt& x);

// Decimal rendering of an exact rational to `digits` significant digits.
std::string decimal_string(const BigRational& q, int digits = 12);

// Uniform draw from [0, bound) by rejection on the bit width; exact, no
// floating-point probabilities involved.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound);

} // namespace multibase
