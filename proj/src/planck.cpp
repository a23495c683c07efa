#include "casimir/planck.hpp"

#include "casimir/regimes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {

double planck_wavenumber(double separation, const Constants& k) {
    if (!(separation > 0.0))
        throw std::domain_error("separation must be positive");
    return 2.0 * separation / k.planck_length;
}

double minimum_separation(const PlateConfig& cfg, const Constants& k, PrefactorMode mode) {
    if (mode == PrefactorMode::PaperOrderOfMagnitude) {
        const double L = cfg.lateral_extension;
        return std::cbrt(L * L * k.planck_length);
    }
    // d (n_1/n_P)^(1/3); algebraically (l^2 L_P/2)^(1/3), independent of d
    const double n_1 = critical_wavenumber_n1(cfg, k);
    const double n_p = planck_wavenumber(cfg.separation, k);
    return cfg.separation * std::cbrt(n_1 / n_p);
}

double minimum_time(double d_min, const Constants& k) {
    if (!(d_min > 0.0))
        throw std::domain_error("minimum separation must be positive");
    return d_min / k.c;
}

PlanckLifetime lifetime_at_planck_mode(const PlateConfig& cfg, const Constants& k) {
    const double n_p = planck_wavenumber(cfg.separation, k);
    PlanckLifetime lt{};
    lt.exact = cfg.separation / (n_p * k.c);
    lt.paper_chain = std::cbrt(critical_wavenumber_n1(cfg, k)) * k.planck_time;
    return lt;
}

double minimum_energy(const PlateConfig& cfg, const Constants& k, PrefactorMode mode) {
    if (mode == PrefactorMode::PaperOrderOfMagnitude) {
        // -hbar c L^2 / d_min^3 with d_min^3 = L^2 L_P collapses to -E_P
        return -k.planck_energy;
    }
    const double d_min = minimum_separation(cfg, k, mode);
    const double aspect_inv = cfg.lateral_extension / d_min;
    return -k.casimir_coefficient * k.hbar * k.c * aspect_inv * aspect_inv / d_min;
}

double energy_at_planck_separation(const PlateConfig& cfg, const Constants& k) {
    const double scale = cfg.lateral_extension / k.planck_length;
    return -k.planck_energy * (scale * scale);
}

PlanckReport make_planck_report(const PlateConfig& cfg, const Constants& k, PrefactorMode mode) {
    PlanckReport rep{};
    rep.mode = mode;
    rep.n_planck = planck_wavenumber(cfg.separation, k);
    rep.d_min = minimum_separation(cfg, k, mode);
    rep.t_min = minimum_time(rep.d_min, k);
    rep.lifetime = lifetime_at_planck_mode(cfg, k);
    rep.e_min = minimum_energy(cfg, k, mode);
    rep.e_at_planck_sep = energy_at_planck_separation(cfg, k);
    const double L = cfg.lateral_extension;
    rep.holographic_length = std::cbrt(k.planck_length * k.planck_length * L);
    rep.initial_energy_non_negligible =
        std::fabs(casimir_energy(cfg, k)) / k.planck_energy > 1e-3;
    rep.sub_planck_geometry = L <= k.planck_length;
    return rep;
}

const char* to_string(PrefactorMode m) {
    return m == PrefactorMode::PaperOrderOfMagnitude ? "paper-order-of-magnitude"
                                                     : "exact-coefficients";
}

PrefactorMode parse_prefactor_mode(std::string_view name) {
    if (name == "exact") return PrefactorMode::ExactCoefficients;
    if (name == "paper") return PrefactorMode::PaperOrderOfMagnitude;
    throw std::domain_error("unknown prefactor mode: " + std::string(name));
}

} // namespace casimir
