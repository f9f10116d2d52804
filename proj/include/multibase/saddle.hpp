#pragma once

#include "multibase/base_system.hpp"

#include <cstdint>

namespace multibase {

// Which generating function: F marks the digit sum, G the Hamming weight,
// H(b) the occurrences of digit b.
struct GFKind {
    enum class Family { F, G, H };
    Family family = Family::F;
    int digit_b = 1; // only for H

    static GFKind F() { return {Family::F, 0}; }
    static GFKind G() { return {Family::G, 0}; }
    static GFKind H(int b) { return {Family::H, b}; }
    static GFKind for_statistic(const Statistic& stat);

    const char* name() const;
};

// f(t,u) = log F(e^{-t},u) and its partial derivatives at one point, with a
// certified truncation-error bound for the dropped terms h*t > cutoff.
struct SaddleEvaluation {
    double t = 0, u = 1;
    double value = 0;
    double f_t = 0, f_tt = 0, f_ttt = 0;
    double f_u = 0, f_uu = 0, f_tu = 0, f_ttu = 0;
    double truncation_cutoff = 0; // T: series summed over h with h*t <= T
    double tail_bound = 0;        // certified |error| bound, value and all
                                  // partials except f_ttt
    double tail_bound_ttt = 0;    // f_ttt bound (relaxed: 1e-6 relative)
};

struct SaddleResult {
    std::int64_t n = 0;
    double u = 1;
    double r = 0;            // saddle point: n = -f_t(r,u)
    double log_estimate = 0; // n*r + f(r,u) - log(2*pi*f_tt(r,u))/2
    double estimate = 0;     // exp(log_estimate); +inf when out of range
    double residual = 0;     // |n + f_t(r,u)| / n
    double tail_bound = 0;
    double chernoff_log_upper = 0; // n*r + f(r,u) >= log [z^n] always
};

struct MomentEstimate {
    double mean = 0;
    double variance = 0;
    double r0 = 0;
};

// Sums the series term-by-term in the polynomial form sum_a c_a(u) w^a
// (w = e^{-ht}); the cutoff T is grown until the certified tail bound is
// below tol for the value and each partial (f_ttt relaxed to 1e-6 relative).
// u outside [1/2, 2] requires widen_u.
SaddleEvaluation evaluate_f(const BaseSystem& system, const GFKind& kind, double t, double u,
                            double tol = 1e-10, bool widen_u = false);

// Unique positive root of n = -f_t(r,u): bracketing bisection on [1e-15, 10]
// followed by safeguarded Newton polish with f_tt. Residual <= tol * n.
SaddleResult solve_saddle(const BaseSystem& system, const GFKind& kind, std::int64_t n, double u,
                          double tol = 1e-9);

// Saddle-point estimate of P(n) = [z^n] F(z,1).
SaddleResult estimate_count(const BaseSystem& system, std::int64_t n, double tol = 1e-9);

// Saddle-point mean/variance of a digit statistic at u = 1:
//   mean = f_u + (f_tu f_ttt - f_tt f_ttu)/f_tt^2,  var = f_uu + f_u,
// with f replaced by the statistic's series (F, G or H_b).
MomentEstimate estimate_moments(const BaseSystem& system, std::int64_t n, const Statistic& stat,
                                double tol = 1e-9);

} // namespace multibase
