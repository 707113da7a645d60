#ifndef POLARZEROS_REPRODUCE_HPP
#define POLARZEROS_REPRODUCE_HPP

/**
 * @file reproduce.hpp
 * @brief Sweeps over degrees: critical-point distance tables and zero
 *        scatter datasets, plus the named parameter presets.
 */

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "polarzeros/errors.hpp"
#include "polarzeros/localize.hpp"
#include "polarzeros/opuc.hpp"
#include "polarzeros/output.hpp"
#include "polarzeros/polar.hpp"
#include "polarzeros/rootfind.hpp"

namespace polarzeros {

enum class DistanceMetric { farthest, nearest };

struct RunConfig {
    MeasureSpec measure = MeasureSpec::geometric();
    int k = 1;
    Complex xi{};
    std::vector<int> degrees;
    std::string format = "json";
    std::string output_path;
    double tol = 1e-12;
    int max_iter = 500;
    int quad_points = 512;
    DistanceMetric metric = DistanceMetric::farthest;
    std::optional<PlotWindow> window;
};

inline void validate(const RunConfig& cfg)
{
    detail::require(!cfg.degrees.empty(), "degree list must be nonempty");
    detail::require(cfg.k >= 0, "k must be nonnegative");
    detail::require(cfg.tol > 0.0, "tolerance must be positive");
    detail::require(cfg.max_iter >= 1, "max_iter must be positive");
}

inline std::vector<int> degree_range(int first, int last, int step = 1)
{
    detail::require(step >= 1 && first <= last, "degree range must be nonempty");
    std::vector<int> out;
    for (int n = first; n <= last; n += step)
        out.push_back(n);
    return out;
}

/// Q_{n;k}(z; xi) of the configured family.
inline ComplexPoly polar_of(const RunConfig& cfg, int n)
{
    return polar_polynomial(build_family(cfg.measure, n), PolarParams{cfg.xi, cfg.k});
}

/// find_roots, with the failing degree named in the error.
inline RootSet polar_roots(const RunConfig& cfg, int n, const ComplexPoly& q)
{
    try {
        return find_roots(q, cfg.tol, cfg.max_iter);
    } catch (const RootFinderError& e) {
        throw RootFinderError(std::string(e.what()) + " at n = " + std::to_string(n), e.best());
    }
}

// ---------------------------------------------------------------------------

struct SendovRow {
    int n = 0;
    Complex witness;
    double distance = 0.0;
};

inline std::vector<SendovRow> reproduce_sendov_table(const RunConfig& cfg)
{
    validate(cfg);
    for (int n : cfg.degrees)
        detail::require(n >= 2 && n <= 64, "sendov table degrees must lie in [2, 64]");
    const RootFinderOptions options{cfg.tol, cfg.max_iter};
    std::vector<SendovRow> rows;
    for (int n : cfg.degrees) {
        const ComplexPoly q = polar_of(cfg, n);
        const RootSet rs = polar_roots(cfg, n, q);
        SendovReport s;
        try {
            s = sendov_report(q, rs, options);
        } catch (const RootFinderError& e) {
            throw RootFinderError(std::string(e.what()) + " (critical points) at n = " + std::to_string(n),
                                  e.best());
        }
        if (cfg.metric == DistanceMetric::farthest)
            rows.push_back({n, s.farthest_witness, s.max_farthest_distance});
        else
            rows.push_back({n, s.witness, s.max_distance});
    }
    return rows;
}

struct ScatterEntry {
    int degree = 0;
    RootSet roots;
};

inline std::vector<ScatterEntry> zero_scatter_dataset(const RunConfig& cfg)
{
    validate(cfg);
    for (int n : cfg.degrees)
        detail::require(n >= 1, "scatter degrees must be positive");
    std::vector<ScatterEntry> out;
    for (int n : cfg.degrees)
        out.push_back({n, polar_roots(cfg, n, polar_of(cfg, n))});
    return out;
}

inline std::string sendov_csv(const std::vector<SendovRow>& rows)
{
    CsvWriter csv({"n", "zero_re", "zero_im", "distance"});
    for (const SendovRow& r : rows)
        csv.row({csv_number(r.n), csv_number(r.witness.real()), csv_number(r.witness.imag()),
                 csv_number(r.distance)});
    return csv.str();
}

inline std::string scatter_csv(const std::vector<ScatterEntry>& data)
{
    CsvWriter csv({"degree", "re", "im"});
    for (const ScatterEntry& e : data)
        for (const Complex& z : e.roots.roots)
            csv.row({csv_number(e.degree), csv_number(z.real()), csv_number(z.imag())});
    return csv.str();
}

/// Scatter plot with the unit circle and the polar disk as guides.
inline std::string scatter_svg(const RunConfig& cfg, const std::vector<ScatterEntry>& data)
{
    std::vector<LabeledPoint> points;
    for (const ScatterEntry& e : data)
        for (const Complex& z : e.roots.roots)
            points.push_back({"n=" + std::to_string(e.degree), z});
    const std::vector<GuideCircle> guides = {
        {Complex{}, 1.0, "unit circle"},
        {Complex{}, polar_disk_radius(cfg.xi, cfg.k), "polar disk"},
    };
    const PlotWindow window = cfg.window ? *cfg.window : fit_window(points, guides);
    return render_svg_scatter(points, window, guides);
}

// ---------------------------------------------------------------------------
// Presets

enum class Panel { left, right };

/// Named parameter sets. Tables run n = 2..20; figures run degrees
/// 10, 20, 30, 40, with `panel` choosing between the two plots of a figure.
inline RunConfig preset_config(const std::string& name, Panel panel = Panel::left)
{
    using std::numbers::pi;
    const Complex beta = std::polar(0.5, pi / 3);
    const Complex xi_rot = std::polar(1.0 / 3.0, pi / 3);
    RunConfig cfg;
    if (name == "table1" || name == "table2") {
        cfg.measure = MeasureSpec::bernstein_szego(beta);
        cfg.xi = xi_rot;
        cfg.k = name == "table1" ? 1 : 2;
        cfg.degrees = degree_range(2, 20);
    } else if (name == "table3" || name == "table4") {
        cfg.measure = MeasureSpec::mass_point(2.0 / 3.0);
        cfg.xi = name == "table3" ? 1.0 / 3.0 : 4.0 / 3.0;
        cfg.degrees = degree_range(2, 20);
    } else if (name == "fig1") {
        cfg.measure = MeasureSpec::bernstein_szego(beta);
        cfg.xi = xi_rot;
        cfg.k = panel == Panel::left ? 1 : 2;
        cfg.degrees = {10, 20, 30, 40};
        cfg.window = PlotWindow{-0.5, 0.7, -0.5, 0.7};
    } else if (name == "fig2") {
        cfg.measure = MeasureSpec::mass_point(2.0 / 3.0);
        cfg.xi = panel == Panel::left ? 1.0 / 3.0 : 4.0 / 3.0;
        cfg.degrees = {10, 20, 30, 40};
        cfg.window = panel == Panel::left ? PlotWindow{-1.0, 1.2, -1.0, 1.0}
                                          : PlotWindow{-1.5, 1.5, -1.5, 1.5};
    } else {
        throw InvalidArgument("unknown preset: " + name);
    }
    return cfg;
}

} // namespace polarzeros

#endif
