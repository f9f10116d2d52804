#include "multibase/asymptotics.hpp"

#include "multibase/errors.hpp"

#include <cmath>

namespace multibase {

namespace {

double log_base_product(const BaseSystem& system) {
    double prod = 1.0;
    for (std::uint64_t p : system.bases()) prod *= std::log(static_cast<double>(p));
    return prod;
}

double sum_log_bases(const BaseSystem& system) {
    double s = 0.0;
    for (std::uint64_t p : system.bases()) s += std::log(static_cast<double>(p));
    return s;
}

double factorial(int m) {
    double f = 1.0;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

} // namespace

double kappa(const BaseSystem& system) {
    const int m = system.num_bases();
    return std::log(static_cast<double>(system.digit_bound())) /
           (factorial(m) * log_base_product(system));
}

Theorem1Constants theorem1_constants(const BaseSystem& system) {
    const int m = system.num_bases();
    const double k = kappa(system);
    Theorem1Constants c;
    c.kappa = k;
    c.C0 = k;
    c.C1 = -static_cast<double>(m) * (m - 1) * k;
    c.C2 = k * m *
           (1.0 + 0.5 * sum_log_bases(system) -
            0.5 * std::log(static_cast<double>(system.digit_bound())) - std::log(k * m));
    c.reduced_validity = (m == 2);
    return c;
}

double theorem1_log_estimate(const BaseSystem& system, std::int64_t n) {
    if (n < 3) throw domain_error("theorem1_log_estimate: n must be >= 3");
    const Theorem1Constants c = theorem1_constants(system);
    const int m = system.num_bases();
    const double ln = std::log(static_cast<double>(n));
    const double lln = std::log(ln);
    return c.C0 * std::pow(ln, m) + c.C1 * std::pow(ln, m - 1) * lln + c.C2 * std::pow(ln, m - 1);
}

Theorem2Constants theorem2_constants(const BaseSystem& system) {
    if (system.num_bases() != 2)
        throw domain_error("WrongArity: the two-base expansion requires m = 2");
    const double k = kappa(system);
    const double lp1 = std::log(static_cast<double>(system.bases()[0]));
    const double lp2 = std::log(static_cast<double>(system.bases()[1]));
    const double ld = std::log(static_cast<double>(system.digit_bound()));
    Theorem2Constants c;
    c.kappa = k;
    c.K0 = 0.5 + 2.0 * k * (std::log(2.0 * k) - 0.5 * (lp1 + lp2 - ld));
    c.K1 = 2.0 * k * (1.0 - std::log(2.0 * k) + 0.5 * (lp1 + lp2 - ld)) - 1.0;
    return c;
}

double fluctuation_K(const BaseSystem& system, std::int64_t n, const BigInt& P_n) {
    const Theorem2Constants c = theorem2_constants(system);
    if (n < 3) throw domain_error("fluctuation_K: n must be >= 3");
    if (P_n <= 0) throw domain_error("fluctuation_K: P(n) must be positive");
    const double ln = std::log(static_cast<double>(n));
    const double lg = std::log(static_cast<double>(n) / ln);
    // all factors in log space; P(n) overflows double early
    const double log_K = log_big(P_n) - c.K0 * std::log(ln) - c.K1 * ln - c.kappa * lg * lg;
    return std::exp(log_K);
}

double mahler_log_estimate(std::int64_t p, std::int64_t n) {
    if (p < 3) throw domain_error("mahler_log_estimate: p must be >= 3");
    if (n < 1) throw domain_error("mahler_log_estimate: n must be >= 1");
    const double ln = std::log(static_cast<double>(n));
    return ln * ln / (2.0 * std::log(static_cast<double>(p)));
}

double pennington_log_estimate(std::int64_t p, std::int64_t n) {
    if (p < 3) throw domain_error("pennington_log_estimate: p must be >= 3");
    if (n < 16) throw domain_error("pennington_log_estimate: n must be >= 16");
    const double lp = std::log(static_cast<double>(p));
    const double llp = std::log(lp);
    const double ln = std::log(static_cast<double>(n));
    const double lln = std::log(ln);
    const double core = std::log(static_cast<double>(n) / ln);
    return core * core / (2.0 * lp) + (0.5 + 1.0 / lp + llp / lp) * ln - (1.0 + llp / lp) * lln;
}

CLTPrediction clt_prediction(const BaseSystem& system, const Statistic& stat) {
    stat.check_against(system);
    const double k = kappa(system);
    const double d = system.digit_bound();
    const double ld = std::log(d);
    CLTPrediction p{stat, 0, 0};
    switch (stat.kind()) {
        case Statistic::Kind::SumOfDigits:
            p.mean_coeff = k * (d - 1) / (2.0 * ld);
            p.var_coeff = k * (d - 1) * (d + 1) / (12.0 * ld);
            break;
        case Statistic::Kind::HammingWeight:
            p.mean_coeff = k * (d - 1) / (d * ld);
            p.var_coeff = k * (d - 1) / (d * d * ld);
            break;
        case Statistic::Kind::DigitCount:
            p.mean_coeff = k / (d * ld);
            p.var_coeff = k * (d - 1) / (d * d * ld);
            break;
    }
    return p;
}

double CLTPrediction::predicted_mean(std::int64_t n, int m) const {
    return mean_coeff * std::pow(std::log(static_cast<double>(n)), m);
}

double CLTPrediction::predicted_variance(std::int64_t n, int m) const {
    return var_coeff * std::pow(std::log(static_cast<double>(n)), m);
}

} // namespace multibase
