#pragma once

#include "casimir/planck.hpp"
#include "casimir/regimes.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

// Deterministic parameter sweeps and their serialization.
//
// Output contract: CSV is the canonical format — scientific notation
// with exactly 12 significant digits, LF line endings, no trailing
// whitespace, rows in grid order. Repeated runs on the same spec are
// byte-identical. JSON and SVG derive from the same formatting rules.

namespace casimir {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sweep of the contraction ratio over the reduced separation d/L,
/// one curve per wavenumber. The grid is logarithmic. d/L alone fixes
/// the ratio; lateral_extension supplies the absolute scale needed for
/// the lifetime column (d = (d/L) * lateral_extension).
struct SweepSpec {
    double d_over_L_min = 1e-5;
    double d_over_L_max = 1e-1;
    int points_per_decade = 20;
    std::vector<double> n_values = default_n_values();
    ConstantsProfile profile = ConstantsProfile::Codata;
    PrefactorMode prefactor_mode = PrefactorMode::ExactCoefficients;
    double lateral_extension = 1e-6; // m

    /// n = 10^1 .. 10^8.
    static std::vector<double> default_n_values();
};

struct CurvePoint {
    double d_over_L;
    double ratio;   // d'/d
    double delta_t; // s
};

struct Curve {
    double n;
    std::vector<CurvePoint> points; // ascending d/L, ratio strictly decreasing
};

/// One curve per n value, evaluated with the exact contraction map on a
/// shared log grid. Curves never cross: larger n sits pointwise below.
/// Throws std::domain_error on an invalid spec.
std::vector<Curve> figure2_sweep(const SweepSpec& spec);

struct NSweepRow {
    double n;
    double ratio;   // d'/d
    double delta_e; // J
    double delta_t; // s
    Regime regime;
};

/// Tabulate ratio, borrowed energy, lifetime and regime against n on a
/// log grid. Every row is recomputed from the core operations, never
/// interpolated.
std::vector<NSweepRow> n_sweep(const PlateConfig& cfg, double n_min, double n_max,
                               int points_per_decade, const Constants& k);

/// Header `d_over_L,n,dprime_over_d,delta_t_s`; one row per point,
/// curves in ascending n.
std::string to_csv(const std::vector<Curve>& curves);

/// Header `n,dprime_over_d,delta_E_J,delta_t_s,regime`.
std::string n_sweep_csv(const std::vector<NSweepRow>& rows);

/// Array of {"n": ..., "points": [[d_over_L, ratio, delta_t_s], ...]}.
std::string to_json(const std::vector<Curve>& curves);

struct SvgAxes {
    bool log_x = true;  // x = log10(d/L)
    bool log_y = false; // ratio axis linear in [0, 1] by default
};

/// Standalone SVG (viewBox 0 0 1000 700), one polyline per curve with a
/// legend keyed by n. Throws std::domain_error on empty input or a
/// degenerate axis range.
std::string to_svg(const std::vector<Curve>& curves, SvgAxes axes = {});

/// Write helpers; return the byte count written. Throw io_error when
/// the destination cannot be opened or written.
std::size_t write_csv(const std::vector<Curve>& curves, const std::filesystem::path& destination);
std::size_t render_svg(const std::vector<Curve>& curves, const std::filesystem::path& destination,
                       SvgAxes axes = {});

/// Scientific notation with exactly 12 significant digits, the shared
/// numeric formatting of every serializer here.
std::string format_sci12(double value);

} // namespace casimir
