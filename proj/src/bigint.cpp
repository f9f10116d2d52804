#include "multibase/bigint.hpp"

#include "multibase/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <sstream>

namespace multibase {

double log_big(const BigInt& x) {
    if (x <= 0) throw domain_error("log_big: argument must be positive");
    const auto bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
    if (bits <= 512) return std::log(x.convert_to<double>());
    // top 64 bits carry the mantissa, the rest is an exact power of two
    const long shift = bits - 64;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

std::string decimal_string(const BigRational& q, int digits) {
    using float50 = boost::multiprecision::cpp_bin_float_50;
    const float50 v = static_cast<float50>(numerator(q)) / static_cast<float50>(denominator(q));
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 0) throw domain_error("uniform_below: bound must be positive");
    if (bound == 1) return 0;
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
        BigInt x = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t word = rng();
            if (w + 1 == words) word &= top_mask;
            x |= BigInt(word) << (64 * w);
        }
        if (x < bound) return x;
    }
}

} // namespace multibase
