#pragma once

#include "casimir/core.hpp"

// Planck-scale limit suite.
//
// Pushing the fluctuation map to the most energetic admissible mode
// (the Planck wavenumber n_P = 2d/L_P) yields a floor on the contracted
// separation, d_min ~ L^(2/3) L_P^(1/3), far above the Planck length
// itself, and a matching minimum time and energy. Two prefactor modes
// are kept: PaperOrderOfMagnitude drops every O(1) coefficient the way
// the back-of-envelope chain does (making identities like E_min = -E_P
// exact), ExactCoefficients keeps C, the factor 2 in n_P, and the mode
// scale, giving E_min = -4 pi E_P independent of geometry.

namespace casimir {

enum class PrefactorMode { PaperOrderOfMagnitude, ExactCoefficients };

/// Lifetime of the Planck mode, both evaluation routes.
/// `exact` follows the d/(n c) identity and equals t_P/2 for every
/// geometry. `paper_chain` is the intermediate order-of-magnitude chain
/// value n_1^(1/3) t_P; the two differ by a factor ~n_1^(1/3) (about 28
/// at d/L = 1e-3) and are both reported rather than reconciled.
struct PlanckLifetime {
    double exact;       // d / (n_P c) = t_P / 2 [s]
    double paper_chain; // n_1^(1/3) t_P [s]
};

/// The full Planck-scale report for one geometry and prefactor mode.
struct PlanckReport {
    PrefactorMode mode;
    double n_planck;              // n_P = 2d/L_P
    double d_min;                 // minimum contracted separation [m]
    double t_min;                 // d_min / c [s]
    PlanckLifetime lifetime;      // at n = n_P
    double e_min;                 // energy at d_min [J], negative
    double e_at_planck_sep;       // energy at d = L_P [J], negative
    double holographic_length;    // comparison scalar L_P^(2/3) L^(1/3) [m]
    bool initial_energy_non_negligible; // |E(d)|/E_P > 1e-3: the dropped
                                        // initial-state term matters
    bool sub_planck_geometry;     // L <= L_P: report is formal only
};

/// Planck wavenumber n_P = 2 d / L_P, the mode whose wavelength is L_P.
/// Throws std::domain_error for non-positive d.
double planck_wavenumber(double separation, const Constants& k);

/// Smallest separation reachable by any single-mode fluctuation.
/// ExactCoefficients evaluates d * (n_1/n_P)^(1/3), which collapses to
/// (l^2 L_P / 2)^(1/3) and is therefore independent of d;
/// PaperOrderOfMagnitude returns L^(2/3) L_P^(1/3).
double minimum_separation(const PlateConfig& cfg, const Constants& k, PrefactorMode mode);

/// Smallest supported time interval, t_min = d_min / c.
/// Throws std::domain_error for non-positive d_min.
double minimum_time(double d_min, const Constants& k);

PlanckLifetime lifetime_at_planck_mode(const PlateConfig& cfg, const Constants& k);

/// Energy at the minimum separation. PaperOrderOfMagnitude applies the
/// dropped-coefficient algebra symbolically and returns exactly -E_P;
/// ExactCoefficients evaluates -C hbar c L^2 / d_min^3 numerically,
/// which lands on -4 pi E_P for every geometry.
double minimum_energy(const PlateConfig& cfg, const Constants& k, PrefactorMode mode);

/// Energy if the gap were pushed all the way to d = L_P, with C = 1:
/// -E_P (L/L_P)^2. Its magnitude exceeds |e_min| by (L/L_P)^2-ish:
/// reaching the Planck separation would cost far more than E_P, which
/// is why the approach to d_min is only asymptotic.
double energy_at_planck_separation(const PlateConfig& cfg, const Constants& k);

PlanckReport make_planck_report(const PlateConfig& cfg, const Constants& k, PrefactorMode mode);

const char* to_string(PrefactorMode m);

/// Parse "exact" / "paper". Throws std::domain_error otherwise.
PrefactorMode parse_prefactor_mode(std::string_view name);

} // namespace casimir
