#pragma once

#include "multibase/base_system.hpp"
#include "multibase/bigint.hpp"

#include <cstdint>

namespace multibase {

// kappa = (log d) / (m! prod_j log p_j)
double kappa(const BaseSystem& system);

// log P(n) = C0 (log n)^m + C1 (log n)^{m-1} log log n + C2 (log n)^{m-1} + ...
// Strictly valid for m >= 3; also computed for m = 2, where the first two
// terms agree with the sharper two-base expansion (reduced_validity is set).
struct Theorem1Constants {
    double kappa = 0;
    double C0 = 0; // = kappa
    double C1 = 0; // = -m(m-1) kappa
    double C2 = 0;
    bool reduced_validity = false; // true when m == 2
};
Theorem1Constants theorem1_constants(const BaseSystem& system);
double theorem1_log_estimate(const BaseSystem& system, std::int64_t n);

// m = 2 only: P(n) = K(n) (log n)^{K0} n^{K1} exp(kappa log^2(n / log n)).
struct Theorem2Constants {
    double kappa = 0;
    double K0 = 0;
    double K1 = 0;
};
Theorem2Constants theorem2_constants(const BaseSystem& system);

// The bounded fluctuating factor K(n), extracted in log space from the exact
// count P(n).
double fluctuation_K(const BaseSystem& system, std::int64_t n, const BigInt& P_n);

// Leading-order predictor of log P(p*n) for the system {2,p}, d = 2.
double mahler_log_estimate(std::int64_t p, std::int64_t n);

// Three-term refinement of the same quantity; remainder is O(1) with a
// periodic fluctuation. Requires n >= 16 so that log log n > 0.
double pennington_log_estimate(std::int64_t p, std::int64_t n);

// Leading coefficients of (log n)^m in the Gaussian limit laws for the three
// digit statistics.
struct CLTPrediction {
    Statistic statistic;
    double mean_coeff = 0;
    double var_coeff = 0;

    double predicted_mean(std::int64_t n, int m) const;
    double predicted_variance(std::int64_t n, int m) const;
};
CLTPrediction clt_prediction(const BaseSystem& system, const Statistic& stat);

} // namespace multibase
