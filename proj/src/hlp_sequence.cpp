#include "multibase/hlp_sequence.hpp"

#include "multibase/errors.hpp"

#include <cmath>
#include <limits>

namespace multibase {

SPrefix generate_upto(const BaseSystem& system, std::uint64_t x) {
    if (x < 1) throw domain_error("generate_upto: limit must be >= 1");
    if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw resource_error("LimitOverflow: limit exceeds the supported integer width");

    const auto& bases = system.bases();
    const int m = system.num_bases();
    std::vector<std::uint64_t> elems{1};
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
        // next candidate along each base direction; skip those past x
        std::uint64_t next = 0;
        for (int j = 0; j < m; ++j) {
            const std::uint64_t e = elems[idx[j]];
            if (e > x / bases[j]) continue; // would exceed x (also overflow-safe)
            const std::uint64_t cand = e * bases[j];
            if (next == 0 || cand < next) next = cand;
        }
        if (next == 0) break;
        elems.push_back(next);
        for (int j = 0; j < m; ++j) {
            const std::uint64_t e = elems[idx[j]];
            if (e <= x / bases[j] && e * bases[j] == next) ++idx[j];
        }
    }
    return SPrefix{system, x, std::move(elems)};
}

namespace {

std::uint64_t count_rec(const std::vector<std::uint64_t>& bases, BigInt x, int j) {
    if (j == 0) return 1; // only the empty product
    const std::uint64_t p = bases[j - 1];
    std::uint64_t total = 0;
    while (x >= 1) {
        total += count_rec(bases, x, j - 1);
        x /= p;
    }
    return total;
}

} // namespace

std::uint64_t count_upto(const BaseSystem& system, const BigInt& x) {
    if (x < 1) throw domain_error("count_upto: limit must be >= 1");
    return count_rec(system.bases(), x, system.num_bases());
}

std::uint64_t count_upto(const BaseSystem& system, std::uint64_t x) {
    return count_upto(system, BigInt(x));
}

double cardinality_estimate(const BaseSystem& system, double r) {
    if (!(r > 0.0 && r < 1.0)) throw domain_error("cardinality_estimate: r must be in (0,1)");
    const int m = system.num_bases();
    double denom = 1.0;
    for (std::uint64_t p : system.bases()) denom *= std::log(static_cast<double>(p));
    for (int k = 2; k <= m; ++k) denom *= k;
    return std::pow(std::log(1.0 / r), m) / denom;
}

} // namespace multibase
