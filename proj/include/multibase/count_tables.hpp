#pragma once

#include "multibase/base_system.hpp"
#include "multibase/bigint.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace multibase {

// Memory cap for DP tables, in MiB. Default 8192, overridable through the
// MULTIBASE_TABLE_MEMORY_MB environment variable. Builders throw
// resource_error("OutOfMemory...") when their layers would exceed it.
std::size_t table_memory_limit_bytes();

// Exact representation counts P(0..N).
struct CountTable {
    BaseSystem system;
    std::int64_t limit;
    std::vector<BigInt> counts; // counts[n] = P(n), counts[0] = 1
};

// Exact per-n moment accumulators over all representations of n:
//   A[n] = P(n),  B[n] = sum of stat,  C[n] = sum of stat^2.
struct MomentTable {
    BaseSystem system;
    Statistic statistic;
    std::int64_t limit;
    std::vector<BigInt> A, B, C;

    BigRational mean(std::int64_t n) const;     // B/A, exact
    BigRational variance(std::int64_t n) const; // (C*A - B^2)/A^2, exact
};

// Exact distribution of a statistic over the representations of one n.
struct Distribution {
    BaseSystem system;
    Statistic statistic;
    std::int64_t n;
    std::map<std::int64_t, BigInt> counts; // stat value -> #representations

    BigInt total() const;          // = P(n)
    BigRational mean() const;
    BigRational variance() const;
};

// OpenMP kernels (the default build path). Bounded-multiplicity partition DP
// over the items of S ∩ [1,N]; the count kernel uses the O(1)-per-cell
// sliding recurrence c'(v) = c'(v-h) + c(v) - c(v-d*h), parallel across the
// residue chains mod h.
CountTable build_count_table(const BaseSystem& system, std::int64_t N);
MomentTable build_moment_tables(const BaseSystem& system, std::int64_t N, const Statistic& stat);
Distribution exact_distribution(const BaseSystem& system, std::int64_t n, const Statistic& stat);

// Serial reference implementations: the naive digit-loop recurrence
// c'(v) = sum_{a=0}^{d-1} c(v - a*h). Kept for testing and benchmarking
// against the kernels above.
namespace reference {
CountTable build_count_table(const BaseSystem& system, std::int64_t N);
MomentTable build_moment_tables(const BaseSystem& system, std::int64_t N, const Statistic& stat);
Distribution exact_distribution(const BaseSystem& system, std::int64_t n, const Statistic& stat);
} // namespace reference

// Independent oracle: exhaustive digit assignment over S ∩ [1,n] with
// suffix-sum pruning. No shared machinery with the DP builders.
BigInt count_brute_force(const BaseSystem& system, std::int64_t n, std::int64_t oracle_limit = 500);

// All representations of n, lexicographically by increasing element list.
// Same exhaustive search as count_brute_force; for small n only.
std::vector<Representation> enumerate_representations(const BaseSystem& system, std::int64_t n,
                                                      std::int64_t oracle_limit = 500);

// c(0..N) with c(n) = c(n-1) + [p|n] c(n/p): partitions of n into powers of p
// with unlimited multiplicity. By the grouping bijection this equals P(n) for
// the two-base system {q,p} with digit bound d = q.
std::vector<BigInt> count_via_power_partition(std::int64_t q, std::int64_t p, std::int64_t N);

} // namespace multibase
