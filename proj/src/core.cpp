#include "casimir/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir {

namespace {

double cube(double x) { return x * x * x; }

// n d^2 / l^2, the argument of the contraction map.
double contraction_argument(double n, const PlateConfig& cfg, const Constants& k) {
    const double l = mode_scale_l(cfg.lateral_extension, k);
    const double d_over_l = cfg.separation / l;
    return n * d_over_l * d_over_l;
}

} // namespace

PlateConfig::PlateConfig(double lateral_extension_m, double separation_m)
    : lateral_extension(lateral_extension_m), separation(separation_m) {
    if (!(lateral_extension > 0.0))
        throw std::domain_error("lateral extension must be positive");
    if (!(separation > 0.0))
        throw std::domain_error("separation must be positive");
    if (!(separation < lateral_extension))
        throw std::domain_error("separation must be smaller than the lateral extension");
}

Mode make_mode(double n, double separation) {
    if (!(n > 0.0))
        throw std::domain_error("mode index must be positive");
    if (!(separation > 0.0))
        throw std::domain_error("separation must be positive");
    return Mode{n, separation / n};
}

double casimir_energy(const PlateConfig& cfg, const Constants& k) {
    // -C hbar c (L/d)^2 / d, ratio form to keep exponents small
    const double aspect_inv = cfg.lateral_extension / cfg.separation;
    return -k.casimir_coefficient * k.hbar * k.c * aspect_inv * aspect_inv / cfg.separation;
}

double mode_frequency(double n, double separation, const Constants& k) {
    if (!(n > 0.0))
        throw std::domain_error("mode index must be positive");
    if (!(separation > 0.0))
        throw std::domain_error("separation must be positive");
    return 2.0 * std::numbers::pi * n * k.c / separation;
}

double fluctuation_energy(const PlateConfig& cfg, double d_prime, const Constants& k) {
    const double d = cfg.separation;
    if (!(d_prime > 0.0))
        throw std::domain_error("contracted separation must be positive");
    if (d_prime > d)
        throw std::domain_error("contracted separation must not exceed the initial one");
    const double r = d_prime / d;
    // C hbar c L^2 (1/d'^3 - 1/d^3) = K (1-r)(1+r+r^2)/r^3, K = C hbar c L^2/d^3.
    // (1-r) is exact for r in [1/2, 1]; no cancellation for r near 1.
    const double aspect_inv = cfg.lateral_extension / d;
    const double scale = k.casimir_coefficient * k.hbar * k.c * aspect_inv * aspect_inv / d;
    return scale * (1.0 - r) * (1.0 + r + r * r) / cube(r);
}

double contraction_ratio_exact(double n, const PlateConfig& cfg, const Constants& k) {
    if (n < 0.0)
        throw std::domain_error("mode index must be non-negative");
    if (n == 0.0)
        return 1.0;
    const double x = contraction_argument(n, cfg, k);
    return std::exp(-std::log1p(x) / 3.0);
}

double contraction_deficit_exact(double n, const PlateConfig& cfg, const Constants& k) {
    if (n < 0.0)
        throw std::domain_error("mode index must be non-negative");
    if (n == 0.0)
        return 0.0;
    const double x = contraction_argument(n, cfg, k);
    return -std::expm1(-std::log1p(x) / 3.0);
}

double fluctuation_lifetime(double n, const PlateConfig& cfg, const Constants& k) {
    if (!(n > 0.0))
        throw std::domain_error("mode index must be positive");
    return cfg.separation / (n * k.c);
}

double fluctuation_lifetime_generalized(double n, const PlateConfig& cfg, const Constants& k) {
    if (!(n > 0.0))
        throw std::domain_error("mode index must be positive");
    const double x = contraction_argument(n, cfg, k); // = n/n_1
    const double log1px = std::log1p(x);
    const double ratio = std::exp(-log1px / 3.0);
    const double d_prime = ratio * cfg.separation;
    return d_prime / (n * k.c) * std::exp(log1px / 3.0);
}

double lifetime_lower_bound(double n, double separation, const Constants& k) {
    return 1.0 / (2.0 * mode_frequency(n, separation, k));
}

} // namespace casimir
