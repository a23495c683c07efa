#pragma once

#include "casimir/core.hpp"

// Slow-mode / fast-mode machinery.
//
// The critical wavenumber n_1 = (l/d)^2 splits modes into a slow regime
// (n << n_1, contraction just below 1) and a fast regime (n >> n_1,
// cube-root decay). The asymptotic formulas carry certified error
// bounds against the exact map:
//
//   slow, x = n/n_1 <= 0.3 :  |(1 - x/3) - (1+x)^(-1/3)|     <= (2/9) x^2
//   fast, y = n/n_1 >= 10  :  |y^(-1/3) / (1+y)^(-1/3) - 1|  <= 0.4 / y

namespace casimir {

enum class Measurability { PlausiblyMeasurable, BeyondCurrentTechnology };

// Classification thresholds on n/n_1. A decade of margin on each side
// keeps both asymptotic error bounds valid at the boundary (2.3e-3
// absolute for slow, 4.1e-2 relative for fast).
inline constexpr double kSlowThreshold = 0.1;
inline constexpr double kFastThreshold = 10.0;

// Soft validity limits of the asymptotic formulas; outside these the
// result is still returned but reports flag it as extrapolated.
inline constexpr double kSlowSoftLimit = 0.3;
inline constexpr double kFastSoftLimit = 10.0;

// Attosecond frontier of ultrafast measurement; boundary inclusive.
inline constexpr double kDefaultMeasurabilityThreshold = 1e-18; // s

/// Critical wavenumber n_1 = l^2 / d^2. Scale-invariant in d/L.
double critical_wavenumber_n1(const PlateConfig& cfg, const Constants& k);

/// Slow iff n/n_1 <= 0.1, Fast iff n/n_1 >= 10, Transition between.
/// Throws std::domain_error unless n > 0 and n_1 > 0.
Regime classify_regime(double n, double n_1);

/// Slow-mode asymptote d'/d = 1 - (1/3)(n/n_1).
/// Meaningful for n/n_1 <= 0.3; callers going beyond get the raw
/// extrapolation (see RegimeReport::asymptote_extrapolated).
double contraction_ratio_slow(double n, double n_1);

/// Fast-mode asymptote d'/d = (n_1/n)^(1/3), the large-n limit of the
/// exact map. Meaningful for n/n_1 >= 10.
double contraction_ratio_fast(double n, double n_1);

/// The rounded fast-mode estimate 10 * n^(-1/3), i.e. the cube root of
/// n_1 = 1e4 rounded to a decade. Kept solely for comparing against
/// order-of-magnitude quotes; not used by any other operation.
double contraction_ratio_fast_rounded(double n);

/// (d'-d)/d in the slow regime: -(1/3)(n/n_1). Negative.
/// contraction_ratio_slow() is defined as 1 + relative_contraction(),
/// so the two agree bit-exactly.
double relative_contraction(double n, double n_1);

/// A lifetime at or above the threshold (default 1e-18 s, the
/// attosecond frontier) counts as plausibly measurable.
Measurability measurability_assessment(double delta_t,
                                       double threshold = kDefaultMeasurabilityThreshold);

/// Side-by-side exact vs asymptotic view of one mode.
struct RegimeReport {
    double n;
    double n_1;
    Regime classification;
    double ratio_exact;
    double ratio_asymptotic;      // slow formula for n <= n_1, fast above
    double asymptotic_abs_error;  // |ratio_exact - ratio_asymptotic|, recomputed
    bool asymptote_extrapolated;  // asymptote used outside its soft range
    double delta_t;               // s
    Measurability measurable;
};

RegimeReport assess_regime(double n, const PlateConfig& cfg, const Constants& k,
                           double measurability_threshold = kDefaultMeasurabilityThreshold);

/// Evaluate one full fluctuation: exact contraction, borrowed energy,
/// lifetime, regime tag. The energy is the plate-energy difference
/// evaluated in deficit form, so it stays accurate when the contraction
/// is only a few parts in 1e9.
FluctuationOutcome evaluate_fluctuation(double n, const PlateConfig& cfg, const Constants& k);

const char* to_string(Regime r);
const char* to_string(Measurability m);

} // namespace casimir
