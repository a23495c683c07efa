#pragma once

#include "casimir/quantities.hpp"

// Parallel-plate vacuum energy and the single-mode fluctuation map.
//
// Two perfectly conducting plates of lateral extension L a distance d
// apart (d << L) confine a negative energy E = -C hbar c L^2 / d^3.
// A single quantized mode n borrowing Delta E = hbar omega_n from the
// vacuum momentarily contracts the gap to d' with
//
//   d'/d = (1 + n d^2/l^2)^(-1/3),   l = mode_scale_l(L)
//
// and must return it within the lifetime Delta t ~ d/(n c).

namespace casimir {

/// Contraction regime of a mode relative to the critical wavenumber n_1.
/// Classification thresholds live in regimes.hpp.
enum class Regime { Slow, Transition, Fast };

/// Plate geometry. Hard requirements: L > 0, d > 0, d < L.
/// The parallel-plate energy formula additionally wants d/L << 1;
/// casimir_valid() reports whether d/L <= 1e-2 (larger ratios are
/// computable but flagged).
struct PlateConfig {
    double lateral_extension; // L [m]
    double separation;        // d [m]

    PlateConfig(double lateral_extension_m, double separation_m);

    double aspect() const { return separation / lateral_extension; }
    bool casimir_valid() const { return aspect() <= 1e-2; }
};

/// A quantized mode between the plates. The index is kept as a positive
/// real: the Planck wavenumber n_P = 2d/L_P (~1.2e29 at d = 1 um)
/// overflows any 64-bit integer. Integer semantics are physical, not
/// enforced.
struct Mode {
    double n;          // wavenumber index
    double wavelength; // d / n [m]
};

/// Throws std::domain_error unless n > 0 and separation > 0.
Mode make_mode(double n, double separation);

/// One hypothetical fluctuation, fully evaluated.
/// Built by evaluate_fluctuation() in regimes.hpp (the regime tag needs
/// the classifier).
struct FluctuationOutcome {
    double n;       // wavenumber of the borrowed mode
    double d_prime; // contracted separation [m]
    double ratio;   // d'/d, in (0, 1)
    double delta_e; // borrowed energy [J], > 0
    double delta_t; // fluctuation lifetime [s], > 0
    Regime regime;
};

/// Confined energy E = -C hbar c L^2 / d^3. Always negative.
double casimir_energy(const PlateConfig& cfg, const Constants& k);

/// Angular frequency of mode n: omega_n = 2 pi n c / d.
/// Throws std::domain_error unless n > 0 and separation > 0.
double mode_frequency(double n, double separation, const Constants& k);

/// Energy cost of contracting the gap from d to d':
///   Delta E = C hbar c L^2 (1/d'^3 - 1/d^3) >= 0.
/// Requires 0 < d' <= d (the fluctuation only contracts); d' > d throws.
/// Computed in the factored form (d-d')(d^2+dd'+d'^2)/(d'^3 d^3) so the
/// near-identity case d' -> d does not cancel.
double fluctuation_energy(const PlateConfig& cfg, double d_prime, const Constants& k);

/// Exact contraction ratio d'/d = (1 + n d^2/l^2)^(-1/3).
/// n = 0 gives 1; strictly decreasing in n and in d at fixed L.
/// Throws std::domain_error for negative n.
double contraction_ratio_exact(double n, const PlateConfig& cfg, const Constants& k);

/// 1 - d'/d evaluated without cancellation (expm1/log1p route).
/// Accurate even when the contraction is a few parts in 1e9, where the
/// ratio itself saturates to 1 in double precision.
double contraction_deficit_exact(double n, const PlateConfig& cfg, const Constants& k);

/// Fluctuation lifetime Delta t = d / (n c).
/// Throws std::domain_error unless n > 0.
double fluctuation_lifetime(double n, const PlateConfig& cfg, const Constants& k);

/// The generalized lifetime form Delta t = (d'/(n c)) (1 + n/n_1)^(1/3).
/// Algebraically identical to d/(n c); kept as an independent evaluation
/// path so the identity is testable.
double fluctuation_lifetime_generalized(double n, const PlateConfig& cfg, const Constants& k);

/// Strict uncertainty-relation lower bound Delta t >= 1/(2 omega_n),
/// for callers who want the bound itself rather than the d/(nc)
/// estimate (the two differ by a factor 4 pi).
double lifetime_lower_bound(double n, double separation, const Constants& k);

} // namespace casimir
