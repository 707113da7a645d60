// polarzeros: build orthogonal polynomials on the unit circle and their
// k-polar polynomials, find zeros, check localization bounds, and produce
// critical-point distance tables and zero scatter data.
//
// Exit codes: 0 success, 1 I/O error, 2 invalid flags, 3 numerical failure,
// 4 bound violation (bounds --assert).

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarzeros/polarzeros.hpp"

using namespace polarzeros;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitViolation = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string preset;
    std::string panel = "left";
    std::string measure;
    std::string beta;
    double mass = 0.0;
    std::string alphas_file;
    std::string roots_file;
    std::string xi;
    int k = 1;
    int n = 0;
    std::string degrees;
    std::string format = "json";
    std::string output;
    double tol = 1e-12;
    int max_iter = 500;
    int quad_points = 512;
    std::string metric = "farthest";
    bool assert_bounds = false;

    // to tell explicit flags from defaults
    CLI::Option* measure_opt = nullptr;
    CLI::Option* xi_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* degrees_opt = nullptr;
};

double parse_double(const std::string& s, const std::string& what)
{
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw InvalidArgument("cannot parse " + what + ": '" + s + "'");
    return v;
}

int parse_int(const std::string& s, const std::string& what)
{
    int v = 0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw InvalidArgument("cannot parse " + what + ": '" + s + "'");
    return v;
}

/// "re,im" or a bare real number.
Complex parse_complex(const std::string& s, const std::string& what)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        return parse_double(s, what);
    return {parse_double(s.substr(0, comma), what), parse_double(s.substr(comma + 1), what)};
}

/// "a:b", "a:b:step" or "n1,n2,...".
std::vector<int> parse_degrees(const std::string& s)
{
    if (s.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        for (std::string p; std::getline(ss, p, ':');)
            parts.push_back(p);
        if (parts.size() < 2 || parts.size() > 3)
            throw InvalidArgument("degree range must be first:last or first:last:step");
        const int step = parts.size() == 3 ? parse_int(parts[2], "degree step") : 1;
        return degree_range(parse_int(parts[0], "degree"), parse_int(parts[1], "degree"), step);
    }
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ',');)
        out.push_back(parse_int(p, "degree"));
    if (out.empty())
        throw InvalidArgument("degree list must be nonempty");
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Flags& f, const std::string& text)
{
    if (f.output.empty() || f.output == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(f.output, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + f.output);
    out << text;
}

MeasureSpec measure_from_flags(const Flags& f)
{
    if (f.measure == "bs") {
        if (f.beta.empty())
            throw InvalidArgument("--measure bs needs --beta");
        return MeasureSpec::bernstein_szego(parse_complex(f.beta, "--beta"));
    }
    if (f.measure == "masspoint")
        return MeasureSpec::mass_point(f.mass);
    if (f.measure == "geometric")
        return MeasureSpec::geometric();
    if (f.measure == "verblunsky") {
        if (f.alphas_file.empty())
            throw InvalidArgument("--measure verblunsky needs --alphas-file");
        Json j;
        try {
            j = Json::parse(read_file(f.alphas_file));
        } catch (const Json::parse_error& e) {
            throw InvalidArgument(std::string("--alphas-file is not valid JSON: ") + e.what());
        }
        if (j.is_object() && j.contains("alphas"))
            j = j["alphas"];
        return MeasureSpec::verblunsky(complex_list_from_json(j));
    }
    throw InvalidArgument("--measure is required (bs, masspoint, geometric or verblunsky)");
}

/// Preset values first, then any explicitly given flags on top.
RunConfig config_from_flags(const Flags& f, bool need_degrees)
{
    RunConfig cfg;
    bool have_measure = false;
    if (!f.preset.empty()) {
        cfg = preset_config(f.preset, f.panel == "right" ? Panel::right : Panel::left);
        have_measure = true;
    }
    if (f.measure_opt->count() > 0 || !have_measure)
        cfg.measure = measure_from_flags(f);
    if (f.xi_opt->count() > 0)
        cfg.xi = parse_complex(f.xi, "--xi");
    if (f.k_opt->count() > 0)
        cfg.k = f.k;
    if (f.degrees_opt->count() > 0)
        cfg.degrees = parse_degrees(f.degrees);
    else if (f.n_opt->count() > 0)
        cfg.degrees = {f.n};
    if (need_degrees && cfg.degrees.empty())
        throw InvalidArgument("a degree is required (--n or --degrees)");
    cfg.format = f.format;
    cfg.output_path = f.output;
    cfg.tol = f.tol;
    cfg.max_iter = f.max_iter;
    cfg.quad_points = f.quad_points;
    cfg.metric = f.metric == "nearest" ? DistanceMetric::nearest : DistanceMetric::farthest;
    validate(cfg);
    return cfg;
}

int single_degree(const RunConfig& cfg)
{
    if (cfg.degrees.size() != 1)
        throw InvalidArgument("this command takes a single degree (--n)");
    return cfg.degrees.front();
}

std::string coefficient_csv(const ComplexPoly& p)
{
    CsvWriter csv({"power", "re", "im"});
    for (int l = 0; l <= p.degree(); ++l)
        csv.row({csv_number(l), csv_number(p[static_cast<std::size_t>(l)].real()),
                 csv_number(p[static_cast<std::size_t>(l)].imag())});
    return csv.str();
}

void reject_svg(const RunConfig& cfg, const char* command)
{
    if (cfg.format == "svg")
        throw InvalidArgument(std::string(command) + " has no SVG output; use json or csv");
}

// ---------------------------------------------------------------------------
// Commands

void run_family(const Flags& f)
{
    const RunConfig cfg = config_from_flags(f, true);
    reject_svg(cfg, "family");
    const int n = single_degree(cfg);
    const ComplexPoly L = build_family(cfg.measure, n);
    if (cfg.format == "csv")
        return emit(f, coefficient_csv(L));
    double orth = 0.0;
    for (int j = 0; j < n; ++j)
        orth = std::max(orth, orthogonality_residual(cfg.measure, n, j, cfg.quad_points));
    Json j;
    j["measure"] = to_json(cfg.measure);
    j["n"] = n;
    j["polynomial"] = to_json(L);
    j["orthogonality_residual"] = orth;
    emit(f, write_json(j) + "\n");
}

void run_polar(const Flags& f)
{
    const RunConfig cfg = config_from_flags(f, true);
    reject_svg(cfg, "polar");
    const int n = single_degree(cfg);
    const ComplexPoly L = build_family(cfg.measure, n);
    const ComplexPoly Q = polar_polynomial(L, {cfg.xi, cfg.k});
    if (cfg.format == "csv")
        return emit(f, coefficient_csv(Q));
    Json j;
    j["measure"] = to_json(cfg.measure);
    j["n"] = n;
    j["k"] = cfg.k;
    j["xi"] = complex_to_json(cfg.xi);
    j["polynomial"] = to_json(Q);
    j["ode_residual"] = ode_residual(L, Q, {cfg.xi, cfg.k});
    emit(f, write_json(j) + "\n");
}

void run_roots(const Flags& f)
{
    RunConfig cfg = config_from_flags(f, true);
    const int n = single_degree(cfg);
    const RootSet rs = polar_roots(cfg, n, polar_of(cfg, n));
    if (cfg.format == "csv") {
        CsvWriter csv({"re", "im"});
        for (const Complex& z : rs.roots)
            csv.row({csv_number(z.real()), csv_number(z.imag())});
        return emit(f, csv.str());
    }
    if (cfg.format == "svg")
        return emit(f, scatter_svg(cfg, {{n, rs}}));
    emit(f, write_json(to_json(rs)) + "\n");
}

int run_bounds(const Flags& f)
{
    const RunConfig cfg = config_from_flags(f, true);
    reject_svg(cfg, "bounds");
    const int n = single_degree(cfg);
    const ComplexPoly q = polar_of(cfg, n);
    RootSet rs;
    if (f.roots_file.empty()) {
        rs = polar_roots(cfg, n, q);
    } else {
        try {
            rs = root_set_from_json(Json::parse(read_file(f.roots_file)));
        } catch (const Json::parse_error& e) {
            throw InvalidArgument(std::string("--roots-file is not valid JSON: ") + e.what());
        }
        if (static_cast<int>(rs.roots.size()) != n)
            throw InvalidArgument("--roots-file must list exactly n roots");
        std::sort(rs.roots.begin(), rs.roots.end(), detail::root_order);
        rs.max_residual = max_residual(q, rs.roots);
    }
    const BoundReport report = bound_report(q, rs, cfg.xi, cfg.k, {cfg.tol, cfg.max_iter});
    if (cfg.format == "csv") {
        CsvWriter csv({"re", "im", "inside_disk", "inside_ring"});
        for (const RootVerdict& v : report.per_root_verdicts)
            csv.row({csv_number(v.root.real()), csv_number(v.root.imag()), v.inside_disk ? "1" : "0",
                     v.inside_ring ? "1" : "0"});
        emit(f, csv.str());
    } else {
        emit(f, write_json(to_json(report)) + "\n");
    }
    if (f.assert_bounds && !(report.all_inside_disk && report.all_inside_ring)) {
        std::cerr << "bound violation: " << (report.all_inside_disk ? "" : "polar disk ")
                  << (report.all_inside_ring ? "" : "ring") << "\n";
        return kExitViolation;
    }
    return 0;
}

void run_table_sendov(const Flags& f)
{
    const RunConfig cfg = config_from_flags(f, true);
    reject_svg(cfg, "table sendov");
    const auto rows = reproduce_sendov_table(cfg);
    if (cfg.format == "csv")
        return emit(f, sendov_csv(rows));
    Json j;
    j["measure"] = to_json(cfg.measure);
    j["k"] = cfg.k;
    j["xi"] = complex_to_json(cfg.xi);
    j["metric"] = cfg.metric == DistanceMetric::farthest ? "farthest" : "nearest";
    Json arr = Json::array();
    for (const SendovRow& r : rows) {
        Json row;
        row["n"] = r.n;
        row["zero"] = complex_to_json(r.witness);
        row["distance"] = r.distance;
        arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    emit(f, write_json(j) + "\n");
}

void run_figure_zeros(const Flags& f)
{
    const RunConfig cfg = config_from_flags(f, true);
    const auto data = zero_scatter_dataset(cfg);
    if (cfg.format == "csv")
        return emit(f, scatter_csv(data));
    if (cfg.format == "svg")
        return emit(f, scatter_svg(cfg, data));
    Json j;
    j["measure"] = to_json(cfg.measure);
    j["k"] = cfg.k;
    j["xi"] = complex_to_json(cfg.xi);
    Json arr = Json::array();
    for (const ScatterEntry& e : data) {
        Json entry = to_json(e.roots);
        entry["degree"] = e.degree;
        arr.push_back(std::move(entry));
    }
    j["datasets"] = std::move(arr);
    emit(f, write_json(j) + "\n");
}

void add_common(CLI::App* app, Flags& f, bool with_presets)
{
    f.measure_opt = app->add_option("--measure", f.measure, "Measure family")
                        ->check(CLI::IsMember({"bs", "masspoint", "geometric", "verblunsky"}));
    app->add_option("--beta", f.beta, "Bernstein-Szego parameter as re,im (|beta| < 1)");
    app->add_option("--mass", f.mass, "Point mass at z = 1 (m >= 0)");
    app->add_option("--alphas-file", f.alphas_file, "JSON list of [re,im] Verblunsky coefficients");
    f.xi_opt = app->add_option("--xi", f.xi, "Pole location as re,im (use --xi=-a,b for a negative real part)");
    f.k_opt = app->add_option("--k", f.k, "Polar order k >= 0")->check(CLI::NonNegativeNumber);
    f.n_opt = app->add_option("--n", f.n, "Degree")->check(CLI::NonNegativeNumber);
    f.degrees_opt = app->add_option("--degrees", f.degrees, "Degrees as first:last[:step] or a comma list");
    app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
    app->add_option("-o,--output", f.output, "Output file (default stdout)");
    app->add_option("--tol", f.tol, "Root-finder tolerance")->check(CLI::PositiveNumber);
    app->add_option("--max-iter", f.max_iter, "Root-finder iteration limit")->check(CLI::PositiveNumber);
    app->add_option("--quad-points", f.quad_points, "Quadrature points for orthogonality checks")
        ->check(CLI::PositiveNumber);
    if (with_presets) {
        app->add_option("--preset", f.preset, "Named parameter set")
            ->check(CLI::IsMember({"table1", "table2", "table3", "table4", "fig1", "fig2"}));
        app->add_option("--panel", f.panel, "Figure panel")->check(CLI::IsMember({"left", "right"}));
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zeros of k-polar polynomials built from orthogonal polynomials on the unit circle"};
    app.require_subcommand(1);

    Flags ff, fp, fr, fb, fs, fz;
    CLI::App* family = app.add_subcommand("family", "Monic orthogonal polynomial L_n");
    add_common(family, ff, false);
    CLI::App* polar = app.add_subcommand("polar", "k-polar polynomial Q_{n;k}(z; xi)");
    add_common(polar, fp, false);
    CLI::App* roots = app.add_subcommand("roots", "Zeros of Q_{n;k}(z; xi)");
    add_common(roots, fr, true);
    CLI::App* bounds = app.add_subcommand("bounds", "Localization regions and critical-point distances");
    add_common(bounds, fb, true);
    bounds->add_flag("--assert", fb.assert_bounds, "Exit with status 4 if a zero violates a bound");
    bounds->add_option("--roots-file", fb.roots_file, "Check the zeros in this RootSet JSON file instead of computing them");

    CLI::App* table = app.add_subcommand("table", "Tables over a degree range");
    table->require_subcommand(1);
    CLI::App* sendov = table->add_subcommand("sendov", "Largest zero-to-critical-point distance per degree");
    add_common(sendov, fs, true);
    sendov->add_option("--metric", fs.metric, "farthest: max over zeros of the distance to the farthest critical "
                                              "point; nearest: to the nearest one")
        ->check(CLI::IsMember({"farthest", "nearest"}));

    CLI::App* figure = app.add_subcommand("figure", "Scatter datasets");
    figure->require_subcommand(1);
    CLI::App* zeros = figure->add_subcommand("zeros", "Zeros of Q_{n;k} for each degree");
    add_common(zeros, fz, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (family->parsed())
            run_family(ff);
        else if (polar->parsed())
            run_polar(fp);
        else if (roots->parsed())
            run_roots(fr);
        else if (bounds->parsed())
            return run_bounds(fb);
        else if (sendov->parsed())
            run_table_sendov(fs);
        else if (zeros->parsed())
            run_figure_zeros(fz);
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
