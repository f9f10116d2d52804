#include "multibase/count_tables.hpp"

#include "multibase/errors.hpp"
#include "multibase/hlp_sequence.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace multibase {

std::size_t table_memory_limit_bytes() {
    static const std::size_t limit = [] {
        std::size_t mb = 8192;
        if (const char* env = std::getenv("MULTIBASE_TABLE_MEMORY_MB")) {
            const long v = std::atol(env);
            if (v > 0) mb = static_cast<std::size_t>(v);
        }
        return mb * 1024 * 1024;
    }();
    return limit;
}

namespace {

void check_table_memory(std::size_t cells, const char* what) {
    if (cells * sizeof(BigInt) > table_memory_limit_bytes())
        throw resource_error(std::string("OutOfMemory: ") + what + " needs " +
                             std::to_string(cells * sizeof(BigInt) / (1024 * 1024)) +
                             " MiB of table cells (limit " +
                             std::to_string(table_memory_limit_bytes() / (1024 * 1024)) +
                             " MiB, override with MULTIBASE_TABLE_MEMORY_MB)");
}

std::vector<std::uint64_t> dp_items(const BaseSystem& system, std::int64_t N) {
    if (N < 1) return {};
    return generate_upto(system, static_cast<std::uint64_t>(N)).elements;
}

// One bounded-multiplicity pass for item h, O(1) big-int work per cell:
// nw(v) = nw(v-h) + old(v) - old(v-d*h). The recurrence chains only through
// v - h, so the h residue classes are independent.
void count_pass_sliding(std::vector<BigInt>& nw, const std::vector<BigInt>& old, std::int64_t h,
                        int d, std::int64_t N) {
    const std::int64_t dh = static_cast<std::int64_t>(d) * h;
#pragma omp parallel for schedule(static)
    for (std::int64_t res = 0; res < h; ++res) {
        for (std::int64_t v = res; v <= N; v += h) {
            nw[v] = old[v];
            if (v >= h) nw[v] += nw[v - h];
            if (v >= dh) nw[v] -= old[v - dh];
        }
    }
}

// Naive digit-loop pass: nw(v) = sum_{a=0}^{d-1} old(v - a*h).
void count_pass_digit_loop(std::vector<BigInt>& nw, const std::vector<BigInt>& old, std::int64_t h,
                           int d, std::int64_t N) {
    for (std::int64_t v = 0; v <= N; ++v) {
        nw[v] = old[v];
        const std::int64_t amax = std::min<std::int64_t>(d - 1, v / h);
        for (std::int64_t a = 1; a <= amax; ++a) nw[v] += old[v - a * h];
    }
}

template <typename Pass>
CountTable build_count_table_impl(const BaseSystem& system, std::int64_t N, Pass pass) {
    if (N < 0) throw domain_error("build_count_table: N must be >= 0");
    check_table_memory(2 * static_cast<std::size_t>(N + 1), "count table");
    std::vector<BigInt> cur(N + 1), nxt(N + 1);
    cur[0] = 1;
    for (std::uint64_t h : dp_items(system, N)) {
        pass(nxt, cur, static_cast<std::int64_t>(h), system.digit_bound(), N);
        cur.swap(nxt);
    }
    return CountTable{system, N, std::move(cur)};
}

} // namespace

CountTable build_count_table(const BaseSystem& system, std::int64_t N) {
    return build_count_table_impl(system, N, count_pass_sliding);
}

CountTable reference::build_count_table(const BaseSystem& system, std::int64_t N) {
    return build_count_table_impl(system, N, count_pass_digit_loop);
}

// ---------------------------------------------------------------------------
// moment tables

namespace {

// Joint pass for (A, B, C). Adding digit a of item h to a representation with
// statistic x contributes (x + s)^2 = x^2 + 2sx + s^2 to C, with s = w(a).
template <bool Parallel>
void moment_pass(std::vector<BigInt>& A2, std::vector<BigInt>& B2, std::vector<BigInt>& C2,
                 const std::vector<BigInt>& A, const std::vector<BigInt>& B,
                 const std::vector<BigInt>& C, std::int64_t h, int d, const Statistic& stat,
                 std::int64_t N) {
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t v = 0; v <= N; ++v) {
        A2[v] = A[v];
        B2[v] = B[v];
        C2[v] = C[v];
        const std::int64_t amax = std::min<std::int64_t>(d - 1, v / h);
        for (std::int64_t a = 1; a <= amax; ++a) {
            const std::int64_t i = v - a * h;
            const std::int64_t s = stat.weight(static_cast<int>(a));
            A2[v] += A[i];
            B2[v] += B[i];
            C2[v] += C[i];
            if (s != 0) {
                B2[v] += s * A[i];
                C2[v] += 2 * s * B[i] + s * s * A[i];
            }
        }
    }
}

template <bool Parallel>
MomentTable build_moment_tables_impl(const BaseSystem& system, std::int64_t N,
                                     const Statistic& stat) {
    if (N < 0) throw domain_error("build_moment_tables: N must be >= 0");
    stat.check_against(system);
    check_table_memory(6 * static_cast<std::size_t>(N + 1), "moment tables");
    std::vector<BigInt> A(N + 1), B(N + 1), C(N + 1), A2(N + 1), B2(N + 1), C2(N + 1);
    A[0] = 1;
    for (std::uint64_t h : dp_items(system, N)) {
        moment_pass<Parallel>(A2, B2, C2, A, B, C, static_cast<std::int64_t>(h),
                              system.digit_bound(), stat, N);
        A.swap(A2);
        B.swap(B2);
        C.swap(C2);
    }
    return MomentTable{system, stat, N, std::move(A), std::move(B), std::move(C)};
}

} // namespace

MomentTable build_moment_tables(const BaseSystem& system, std::int64_t N, const Statistic& stat) {
    return build_moment_tables_impl<true>(system, N, stat);
}

MomentTable reference::build_moment_tables(const BaseSystem& system, std::int64_t N,
                                           const Statistic& stat) {
    return build_moment_tables_impl<false>(system, N, stat);
}

BigRational MomentTable::mean(std::int64_t n) const {
    return BigRational(B[n], A[n]);
}

BigRational MomentTable::variance(std::int64_t n) const {
    return BigRational(C[n] * A[n] - B[n] * B[n], A[n] * A[n]);
}

// ---------------------------------------------------------------------------
// exact distribution

namespace {

// Largest achievable statistic total among digit vectors with
// sum a_l * h_l <= n: smallest elements have the best weight per cost, so the
// greedy fill is the maximum for all three statistic kinds.
std::int64_t max_statistic_value(const Statistic& stat, const std::vector<std::uint64_t>& items,
                                 std::int64_t n, int d) {
    std::int64_t rem = n, smax = 0;
    for (std::uint64_t hu : items) {
        const auto h = static_cast<std::int64_t>(hu);
        if (h > rem) break;
        switch (stat.kind()) {
            case Statistic::Kind::SumOfDigits: {
                const std::int64_t a = std::min<std::int64_t>(d - 1, rem / h);
                smax += a;
                rem -= a * h;
                break;
            }
            case Statistic::Kind::HammingWeight:
                smax += 1;
                rem -= h;
                break;
            case Statistic::Kind::DigitCount: {
                const std::int64_t cost = static_cast<std::int64_t>(stat.digit()) * h;
                if (rem >= cost) {
                    smax += 1;
                    rem -= cost;
                }
                break;
            }
        }
    }
    return smax;
}

template <bool Parallel>
Distribution exact_distribution_impl(const BaseSystem& system, std::int64_t n,
                                     const Statistic& stat, std::int64_t distribution_limit) {
    if (n < 1) throw domain_error("exact_distribution: n must be >= 1");
    if (n > distribution_limit)
        throw resource_error("OutOfMemory: n exceeds the distribution limit " +
                             std::to_string(distribution_limit));
    stat.check_against(system);

    const auto items = dp_items(system, n);
    const int d = system.digit_bound();
    const std::int64_t smax = max_statistic_value(stat, items, n, d);
    const auto rows = static_cast<std::size_t>(smax + 1);
    check_table_memory(2 * rows * static_cast<std::size_t>(n + 1), "distribution table");

    // layer[s][v] = #representations of v with statistic total s
    std::vector<std::vector<BigInt>> cur(rows), nxt(rows);
    for (auto& row : cur) row.assign(n + 1, BigInt(0));
    for (auto& row : nxt) row.assign(n + 1, BigInt(0));
    cur[0][0] = 1;

    for (std::uint64_t hu : items) {
        const auto h = static_cast<std::int64_t>(hu);
#pragma omp parallel for schedule(dynamic, 4) if (Parallel)
        for (std::int64_t s = 0; s <= smax; ++s) {
            auto& out = nxt[s];
            out = cur[s]; // a = 0; w(0) = 0 for every statistic
            const std::int64_t amax = std::min<std::int64_t>(d - 1, n / h);
            for (std::int64_t a = 1; a <= amax; ++a) {
                const std::int64_t sw = stat.weight(static_cast<int>(a));
                if (sw > s) continue;
                const auto& src = cur[s - sw];
                for (std::int64_t v = a * h; v <= n; ++v) out[v] += src[v - a * h];
            }
        }
        cur.swap(nxt);
    }

    Distribution dist{system, stat, n, {}};
    for (std::int64_t s = 0; s <= smax; ++s)
        if (cur[s][n] != 0) dist.counts.emplace(s, cur[s][n]);
    return dist;
}

} // namespace

Distribution exact_distribution(const BaseSystem& system, std::int64_t n, const Statistic& stat) {
    return exact_distribution_impl<true>(system, n, stat, 1000000);
}

Distribution reference::exact_distribution(const BaseSystem& system, std::int64_t n,
                                           const Statistic& stat) {
    return exact_distribution_impl<false>(system, n, stat, 1000000);
}

BigInt Distribution::total() const {
    BigInt t = 0;
    for (const auto& [s, c] : counts) t += c;
    return t;
}

BigRational Distribution::mean() const {
    BigInt b = 0;
    for (const auto& [s, c] : counts) b += s * c;
    return BigRational(b, total());
}

BigRational Distribution::variance() const {
    BigInt b = 0, c2 = 0;
    for (const auto& [s, c] : counts) {
        b += s * c;
        c2 += s * s * c;
    }
    const BigInt tot = total();
    return BigRational(c2 * tot - b * b, tot * tot);
}

// ---------------------------------------------------------------------------
// oracle

namespace {

struct OracleItems {
    std::vector<std::int64_t> items;  // decreasing
    std::vector<std::int64_t> suffix; // suffix[i] = (d-1) * sum of items[i..]
};

OracleItems oracle_items(const BaseSystem& system, std::int64_t n) {
    OracleItems o;
    for (std::uint64_t h : dp_items(system, n)) o.items.push_back(static_cast<std::int64_t>(h));
    std::reverse(o.items.begin(), o.items.end());
    o.suffix.assign(o.items.size() + 1, 0);
    for (std::size_t i = o.items.size(); i-- > 0;)
        o.suffix[i] = o.suffix[i + 1] + (system.digit_bound() - 1) * o.items[i];
    return o;
}

std::uint64_t count_rec_u64(const OracleItems& o, int d, std::size_t i, std::int64_t rem) {
    if (rem == 0) return 1;
    while (i < o.items.size() && o.items[i] > rem) ++i;
    if (i == o.items.size() || rem > o.suffix[i]) return 0;
    const std::int64_t h = o.items[i];
    std::uint64_t total = 0;
    const std::int64_t amax = std::min<std::int64_t>(d - 1, rem / h);
    for (std::int64_t a = 0; a <= amax; ++a) total += count_rec_u64(o, d, i + 1, rem - a * h);
    return total;
}

BigInt count_rec_big(const OracleItems& o, int d, std::size_t i, std::int64_t rem) {
    if (rem == 0) return 1;
    while (i < o.items.size() && o.items[i] > rem) ++i;
    if (i == o.items.size() || rem > o.suffix[i]) return 0;
    const std::int64_t h = o.items[i];
    BigInt total = 0;
    const std::int64_t amax = std::min<std::int64_t>(d - 1, rem / h);
    for (std::int64_t a = 0; a <= amax; ++a) total += count_rec_big(o, d, i + 1, rem - a * h);
    return total;
}

} // namespace

BigInt count_brute_force(const BaseSystem& system, std::int64_t n, std::int64_t oracle_limit) {
    if (n < 0) throw domain_error("count_brute_force: n must be >= 0");
    if (n > oracle_limit)
        throw resource_error("OracleLimitExceeded: n = " + std::to_string(n) + " > " +
                             std::to_string(oracle_limit));
    const OracleItems o = oracle_items(system, n);
    // u64 is enough when even d^|items| cannot overflow; otherwise go big
    const double log2_max = static_cast<double>(o.items.size()) *
                            std::log2(static_cast<double>(system.digit_bound()));
    if (log2_max <= 62.0) return BigInt(count_rec_u64(o, system.digit_bound(), 0, n));
    return count_rec_big(o, system.digit_bound(), 0, n);
}

namespace {

void enum_rec(const OracleItems& o, const BaseSystem& system, std::size_t i, std::int64_t rem,
              std::vector<Representation::Term>& acc, std::vector<Representation>& out) {
    if (rem == 0) {
        auto terms = acc;
        std::reverse(terms.begin(), terms.end()); // stored decreasing, emit increasing
        out.push_back(Representation::from_terms(system, std::move(terms)));
        return;
    }
    while (i < o.items.size() && o.items[i] > rem) ++i;
    if (i == o.items.size() || rem > o.suffix[i]) return;
    const std::int64_t h = o.items[i];
    const std::int64_t amax = std::min<std::int64_t>(system.digit_bound() - 1, rem / h);
    for (std::int64_t a = 0; a <= amax; ++a) {
        if (a > 0) acc.push_back({static_cast<std::uint64_t>(h), static_cast<int>(a)});
        enum_rec(o, system, i + 1, rem - a * h, acc, out);
        if (a > 0) acc.pop_back();
    }
}

} // namespace

std::vector<Representation> enumerate_representations(const BaseSystem& system, std::int64_t n,
                                                      std::int64_t oracle_limit) {
    if (n < 0) throw domain_error("enumerate_representations: n must be >= 0");
    if (n > oracle_limit)
        throw resource_error("OracleLimitExceeded: n = " + std::to_string(n) + " > " +
                             std::to_string(oracle_limit));
    const OracleItems o = oracle_items(system, n);
    std::vector<Representation> out;
    std::vector<Representation::Term> acc;
    enum_rec(o, system, 0, n, acc, out);
    return out;
}

std::vector<BigInt> count_via_power_partition(std::int64_t q, std::int64_t p, std::int64_t N) {
    if (q < 2 || p < 2) throw domain_error("count_via_power_partition: q and p must be >= 2");
    if (std::gcd(q, p) != 1)
        throw domain_error("count_via_power_partition: gcd(q,p) must be 1");
    if (N < 0) throw domain_error("count_via_power_partition: N must be >= 0");
    check_table_memory(static_cast<std::size_t>(N + 1), "power partition table");
    std::vector<BigInt> c(N + 1);
    c[0] = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        c[n] = c[n - 1];
        if (n % p == 0) c[n] += c[n / p];
    }
    return c;
}

} // namespace multibase
