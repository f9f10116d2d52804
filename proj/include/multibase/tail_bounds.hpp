#pragma once

#include "multibase/base_system.hpp"
#include "multibase/saddle.hpp"

#include <cstdint>
#include <vector>

namespace multibase {

// Constant from the termwise tail estimate |F(z,u)| / F(|z|,u) <= exp(-C*Sigma).
inline constexpr double tail_constant_C = 4.0 / (25.0 * 2.718281828459045235360287);

// Sigma(r,y) = sum over h in S ∩ [1, 1/r] of ||h y||^2, where ||.|| is the
// distance to the nearest integer.
double sigma_sum(const BaseSystem& system, double r, double y);

// |F(e^{-r+2*pi*i*y}, u)| / F(e^{-r}, u), complex product in log space over
// h with h*r <= T (same certified truncation as evaluate_f).
double tail_ratio(const BaseSystem& system, const GFKind& kind, double r, double y, double u,
                  double tol = 1e-10);

struct TailReport {
    std::vector<double> r_values;
    int y_resolution = 0;
    std::size_t points_checked = 0;
    double C = tail_constant_C;
    double fitted_A1 = 0; // largest constant with Sigma >= A1 (y/r)^2 (log 1/r)^{m-1} on |y| <= r/2
    double fitted_A2 = 0; // largest constant with Sigma >= A2 (log 1/r)^{m-1} on |y| >= r/2
    std::int64_t violations = 0; // ratio > exp(-C*Sigma) occurrences; must be 0

    struct PerR {
        double r = 0;
        double A1 = 0, A2 = 0;
        double max_ratio_slack = 0; // max of ratio - exp(-C*Sigma) over the grid
        std::int64_t violations = 0;
    };
    std::vector<PerR> per_r;
};

// Grid check of the tail estimates: uniform y grid of y_resolution points over
// [-1/2, 1/2], plus the rationals a/q with q <= 64, plus points inside
// |y| <= r/2 where the quadratic lower bound applies. The ratio inequality is
// checked at u in {1/2, 1, 2}; grid points are evaluated in parallel.
TailReport verify_tail_bounds(const BaseSystem& system, const std::vector<double>& r_list,
                              int y_resolution);

} // namespace multibase
