#pragma once

#include <string_view>

// Physical constants and unit conventions.
//
// Everything is SI (m, s, J); there is no unit-conversion layer. All
// arithmetic is IEEE-754 double. Extreme magnitudes appearing in the
// Planck-scale suite (~1e67 J down to ~1e-44 s) are comfortably inside
// the double range, and ratio-based forms (d/L, L/L_P) are used
// internally to keep intermediate exponents tame.

namespace casimir {

/// Which constant bundle to compute with.
///
/// Codata carries CODATA-2018 values and the exact mode-scale factor
/// sqrt(C/2pi) = 1/sqrt(48). PaperRounded quarantines the common
/// back-of-envelope roundings (c ~ 1e8 m/s, mode scale L/7) so that
/// order-of-magnitude estimates can be reproduced without contaminating
/// exact results.
enum class ConstantsProfile { Codata, PaperRounded };

/// Immutable bundle of physical constants, fixed by a profile.
///
/// Derived members always satisfy
///   planck_time * c == planck_length      (rel 1e-12)
///   planck_energy * planck_length == hbar * c   (rel 1e-12)
/// in every profile, because they are computed from the base values.
struct Constants {
    double hbar;                // reduced Planck constant [J s]
    double c;                   // speed of light [m/s]
    double planck_length;       // L_P [m]
    double planck_time;         // t_P = L_P / c [s]
    double planck_energy;       // E_P = hbar c / L_P [J]
    double casimir_coefficient; // C = pi/24 in the parallel-plate energy
    ConstantsProfile profile;
    std::string_view profile_name;
};

/// Build the constant bundle for a profile. Deterministic: the same
/// profile always yields a bit-identical bundle.
Constants make_constants(ConstantsProfile profile);

/// Parse "codata" / "paper" (also accepts "paper-rounded").
/// Throws std::domain_error on anything else.
ConstantsProfile parse_profile(std::string_view name);

/// Lateral mode scale l entering the contraction map.
///
/// Codata:       l = sqrt(C / 2pi) * L = L / sqrt(48)  (~ 0.14434 L)
/// PaperRounded: l = L / 7 exactly
///
/// Throws std::domain_error for non-positive L.
double mode_scale_l(double lateral_extension, const Constants& k);

} // namespace casimir
