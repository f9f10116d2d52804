#pragma once

#include "multibase/base_system.hpp"
#include "multibase/bigint.hpp"

#include <cstdint>
#include <vector>

namespace multibase {

// The sorted prefix S ∩ [1, limit] of the Hardy-Littlewood-Polya sequence
// generated by the system's bases.
struct SPrefix {
    BaseSystem system;
    std::uint64_t limit;
    std::vector<std::uint64_t> elements; // sorted, starts with 1
};

// All elements of S up to x, by an m-pointer merge (the generalized Hamming
// sequence algorithm). O(|S(1/x)| * m), duplicate-free.
SPrefix generate_upto(const BaseSystem& system, std::uint64_t x);

// |S ∩ [1,x]| without materializing the sequence: recursion over the exponent
// of the last base. Exact for arbitrary-precision x.
std::uint64_t count_upto(const BaseSystem& system, const BigInt& x);
std::uint64_t count_upto(const BaseSystem& system, std::uint64_t x);

// Leading term (log 1/r)^m / (m! prod_j log p_j) of |S(r)|, 0 < r < 1.
double cardinality_estimate(const BaseSystem& system, double r);

} // namespace multibase
