#include "casimir/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>

namespace casimir {

namespace {

// Inclusive log10 grid: round(decades * ppd) + 1 points, equally spaced
// in log10.
std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
    const double llo = std::log10(lo);
    const double lhi = std::log10(hi);
    const int intervals = std::max(1, static_cast<int>(std::lround((lhi - llo) * points_per_decade)));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i)
        grid.push_back(std::pow(10.0, llo + (lhi - llo) * i / intervals));
    return grid;
}

void validate(const SweepSpec& spec) {
    if (!(spec.d_over_L_min > 0.0) || !(spec.d_over_L_min < spec.d_over_L_max) ||
        !(spec.d_over_L_max <= 0.5))
        throw std::domain_error("d/L bounds must satisfy 0 < min < max <= 0.5");
    if (spec.points_per_decade < 1)
        throw std::domain_error("points per decade must be at least 1");
    if (spec.n_values.empty())
        throw std::domain_error("at least one wavenumber is required");
    double prev = 0.0;
    for (double n : spec.n_values) {
        if (!(n > prev))
            throw std::domain_error("wavenumbers must be positive and strictly increasing");
        prev = n;
    }
    if (!(spec.lateral_extension > 0.0))
        throw std::domain_error("lateral extension must be positive");
}

std::size_t write_string(const std::string& text, const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot open for writing: " + destination.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw io_error("write failed: " + destination.string());
    return text.size();
}

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

void append_fmt(std::string& out, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    const int len = std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out.append(buf, static_cast<std::size_t>(len));
}

} // namespace

std::vector<double> SweepSpec::default_n_values() {
    return {1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8};
}

std::vector<Curve> figure2_sweep(const SweepSpec& spec) {
    validate(spec);
    const Constants k = make_constants(spec.profile);
    const std::vector<double> grid =
        log_grid(spec.d_over_L_min, spec.d_over_L_max, spec.points_per_decade);

    std::vector<Curve> curves;
    curves.reserve(spec.n_values.size());
    for (double n : spec.n_values) {
        Curve c{n, {}};
        c.points.reserve(grid.size());
        for (double d_over_L : grid) {
            const PlateConfig cfg(spec.lateral_extension, d_over_L * spec.lateral_extension);
            c.points.push_back({d_over_L, contraction_ratio_exact(n, cfg, k),
                                fluctuation_lifetime(n, cfg, k)});
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

std::vector<NSweepRow> n_sweep(const PlateConfig& cfg, double n_min, double n_max,
                               int points_per_decade, const Constants& k) {
    if (!(n_min > 0.0) || !(n_min < n_max))
        throw std::domain_error("wavenumber range must satisfy 0 < min < max");
    if (points_per_decade < 1)
        throw std::domain_error("points per decade must be at least 1");
    std::vector<NSweepRow> rows;
    for (double n : log_grid(n_min, n_max, points_per_decade)) {
        const FluctuationOutcome f = evaluate_fluctuation(n, cfg, k);
        rows.push_back({n, f.ratio, f.delta_e, f.delta_t, f.regime});
    }
    return rows;
}

std::string format_sci12(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", value);
    return buf;
}

std::string to_csv(const std::vector<Curve>& curves) {
    if (curves.empty())
        throw std::domain_error("no curves to serialize");
    std::string out = "d_over_L,n,dprime_over_d,delta_t_s\n";
    for (const Curve& c : curves)
        for (const CurvePoint& p : c.points)
            out += format_sci12(p.d_over_L) + ',' + format_sci12(c.n) + ',' +
                   format_sci12(p.ratio) + ',' + format_sci12(p.delta_t) + '\n';
    return out;
}

std::string n_sweep_csv(const std::vector<NSweepRow>& rows) {
    std::string out = "n,dprime_over_d,delta_E_J,delta_t_s,regime\n";
    for (const NSweepRow& r : rows)
        out += format_sci12(r.n) + ',' + format_sci12(r.ratio) + ',' + format_sci12(r.delta_e) +
               ',' + format_sci12(r.delta_t) + ',' + to_string(r.regime) + '\n';
    return out;
}

std::string to_json(const std::vector<Curve>& curves) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        out += "  {\"n\": " + format_sci12(curves[i].n) + ", \"points\": [";
        const auto& pts = curves[i].points;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            out += '[' + format_sci12(pts[j].d_over_L) + ", " + format_sci12(pts[j].ratio) +
                   ", " + format_sci12(pts[j].delta_t) + ']';
            if (j + 1 < pts.size()) out += ", ";
        }
        out += "]}";
        if (i + 1 < curves.size()) out += ',';
        out += '\n';
    }
    out += "]\n";
    return out;
}

std::string to_svg(const std::vector<Curve>& curves, SvgAxes axes) {
    if (curves.empty())
        throw std::domain_error("no curves to render");

    double x_min = 0.0, x_max = 0.0, y_min = 1.0;
    bool first = true;
    for (const Curve& c : curves)
        for (const CurvePoint& p : c.points) {
            if ((axes.log_x && !(p.d_over_L > 0.0)) || (axes.log_y && !(p.ratio > 0.0)))
                throw std::domain_error("log axis requires positive values");
            x_min = first ? p.d_over_L : std::min(x_min, p.d_over_L);
            x_max = first ? p.d_over_L : std::max(x_max, p.d_over_L);
            y_min = std::min(y_min, p.ratio);
            first = false;
        }
    if (first || !(x_min < x_max))
        throw std::domain_error("degenerate axis range");

    const double left = 90, top = 40, width = 740, height = 580;
    const double lx_min = axes.log_x ? std::log10(x_min) : x_min;
    const double lx_max = axes.log_x ? std::log10(x_max) : x_max;
    const double ly_min = axes.log_y ? std::log10(y_min) : 0.0;
    const double ly_max = 0.0; // ratio <= 1 always; linear axis spans [0,1]

    const auto px = [&](double v) {
        const double t = ((axes.log_x ? std::log10(v) : v) - lx_min) / (lx_max - lx_min);
        return left + t * width;
    };
    const auto py = [&](double v) {
        double t;
        if (axes.log_y)
            t = (std::log10(v) - ly_min) / (ly_max - ly_min);
        else
            t = v; // [0, 1]
        return top + (1.0 - t) * height;
    };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 700\" "
        "font-family=\"monospace\" font-size=\"14\">\n"
        "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"700\" fill=\"white\"/>\n";

    // frame
    append_fmt(svg, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                    "fill=\"none\" stroke=\"black\"/>\n",
               left, top, width, height);

    // x ticks at integer decades (log) or five even steps (linear)
    if (axes.log_x) {
        for (int e = static_cast<int>(std::ceil(lx_min - 1e-9));
             e <= static_cast<int>(std::floor(lx_max + 1e-9)); ++e) {
            const double x = left + (e - lx_min) / (lx_max - lx_min) * width;
            append_fmt(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                            "stroke=\"black\"/>\n",
                       x, top + height, x, top + height + 6);
            append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">1e%+03d</text>\n",
                       x, top + height + 24, e);
        }
    } else {
        for (int i = 0; i <= 5; ++i) {
            const double x = left + width * i / 5.0;
            append_fmt(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                            "stroke=\"black\"/>\n",
                       x, top + height, x, top + height + 6);
            append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%.3g</text>\n", x,
                       top + height + 24, x_min + (x_max - x_min) * i / 5.0);
        }
    }
    // y ticks
    if (axes.log_y) {
        for (int e = static_cast<int>(std::ceil(ly_min - 1e-9)); e <= 0; ++e) {
            const double y = top + (1.0 - (e - ly_min) / (ly_max - ly_min)) * height;
            append_fmt(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                            "stroke=\"black\"/>\n",
                       left - 6, y, left, y);
            append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">1e%+03d</text>\n",
                       left - 10, y + 5, e);
        }
    } else {
        for (int i = 0; i <= 5; ++i) {
            const double v = i / 5.0;
            const double y = py(v);
            append_fmt(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                            "stroke=\"black\"/>\n",
                       left - 6, y, left, y);
            append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.1f</text>\n",
                       left - 10, y + 5, v);
        }
    }
    append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">d / L</text>\n",
               left + width / 2, top + height + 52);
    append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
                    "transform=\"rotate(-90 %.2f %.2f)\">d' / d</text>\n",
               left - 60, top + height / 2, left - 60, top + height / 2);

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = kPalette[i % kPalette.size()];
        std::string pts;
        for (const CurvePoint& p : curves[i].points)
            append_fmt(pts, "%.2f,%.2f ", px(p.d_over_L), py(p.ratio));
        if (!pts.empty()) pts.pop_back();
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";

        // legend entry
        const double ly = top + 10 + 22.0 * static_cast<double>(i);
        append_fmt(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                        "stroke-width=\"2\"/>\n",
                   left + width + 14, ly, left + width + 44, ly, color);
        append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\">n = %.0e</text>\n", left + width + 50,
                   ly + 5, curves[i].n);
    }
    svg += "</svg>\n";
    return svg;
}

std::size_t write_csv(const std::vector<Curve>& curves, const std::filesystem::path& destination) {
    return write_string(to_csv(curves), destination);
}

std::size_t render_svg(const std::vector<Curve>& curves, const std::filesystem::path& destination,
                       SvgAxes axes) {
    return write_string(to_svg(curves, axes), destination);
}

} // namespace casimir
