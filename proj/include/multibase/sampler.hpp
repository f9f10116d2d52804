#pragma once

#include "multibase/base_system.hpp"
#include "multibase/bigint.hpp"
#include "multibase/count_tables.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace multibase {

// Exact uniform sampler over the representations of n. Layered suffix count
// tables over the items of S ∩ [1,n] in decreasing order:
//   layers[k][v] = #representations of v using items k..K-1,
//   layers[K][0] = 1, layers[K][v>0] = 0, layers[0][n] = P(n).
class Sampler {
public:
    static Sampler build(const BaseSystem& system, std::int64_t n,
                         std::int64_t sampler_limit = 100000);

    Representation sample(std::mt19937_64& rng) const;

    const BaseSystem& system() const { return system_; }
    std::int64_t n() const { return n_; }
    const std::vector<std::uint64_t>& items() const { return items_; } // decreasing
    const BigInt& total() const { return layers_[0][n_]; }             // = P(n)
    const std::vector<std::vector<BigInt>>& layers() const { return layers_; }

private:
    Sampler(BaseSystem system, std::int64_t n) : system_(std::move(system)), n_(n) {}

    BaseSystem system_;
    std::int64_t n_;
    std::vector<std::uint64_t> items_;
    std::vector<std::vector<BigInt>> layers_;
};

// Gaussian-comparison report for one digit statistic.
struct StatReport {
    Statistic statistic;
    std::int64_t n = 0;
    bool exact = false;
    std::int64_t sample_count = 0; // 0 in exact mode
    std::uint64_t seed = 0;        // sampled mode only

    double mean = 0, variance = 0;
    double skewness = 0;        // standardized third moment
    double excess_kurtosis = 0;
    double tv_distance = 0;     // to the unit-interval-discretized Gaussian
    double predicted_mean = 0;  // CLT leading term
    double predicted_variance = 0;

    // exact mode: the same rationals as the moment tables
    std::optional<BigRational> mean_exact;
    std::optional<BigRational> variance_exact;

    // sampled mode: digit frequencies observed at a fixed element of S
    std::uint64_t position_element = 1;
    std::vector<double> position_digit_freq; // index = digit value
};

struct SampledMode {
    std::int64_t samples;
    std::uint64_t seed;
};

// mode == nullopt: exact distribution (moments match the moment tables
// exactly). Otherwise seeded empirical moments from `samples` draws.
StatReport normality_report(const BaseSystem& system, std::int64_t n, const Statistic& stat,
                            std::optional<SampledMode> mode,
                            std::int64_t distribution_limit = 1000000);

// Mass the unit-discretized Gaussian N(mu, sigma^2) puts on integer j.
double gaussian_cell_mass(std::int64_t j, double mu, double sigma);

} // namespace multibase
