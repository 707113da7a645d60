#ifndef POLARZEROS_OUTPUT_HPP
#define POLARZEROS_OUTPUT_HPP

/**
 * @file output.hpp
 * @brief CSV tables and SVG scatter plots.
 *
 * CSV uses a header row, commas, LF line endings and 17 significant digits.
 * SVG output is SVG 1.1 on a fixed 800x800 canvas; coordinates are printed
 * with fixed precision so identical input gives identical bytes.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/errors.hpp"
#include "polarzeros/serialize.hpp"

namespace polarzeros {

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header)
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            text_ += (i ? "," : "") + header[i];
        text_ += '\n';
        columns_ = header.size();
    }

    /// Cells are either preformatted strings or numbers.
    CsvWriter& row(const std::vector<std::string>& cells)
    {
        detail::require(cells.size() == columns_, "CsvWriter: wrong number of cells");
        for (std::size_t i = 0; i < cells.size(); ++i)
            text_ += (i ? "," : "") + cells[i];
        text_ += '\n';
        return *this;
    }

    const std::string& str() const { return text_; }

private:
    std::string text_;
    std::size_t columns_ = 0;
};

inline std::string csv_number(double x) { return format_number(x); }
inline std::string csv_number(int x) { return std::to_string(x); }

// ---------------------------------------------------------------------------
// SVG

struct PlotWindow {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
};

struct LabeledPoint {
    std::string label;
    Complex z;
};

struct GuideCircle {
    Complex center;
    double radius = 1.0;
    std::string label;
};

/// Square window centred at the origin holding all points and guides, with
/// a 5% margin.
inline PlotWindow fit_window(const std::vector<LabeledPoint>& points,
                             const std::vector<GuideCircle>& guides)
{
    double r = 1.0;
    for (const auto& p : points)
        r = std::max({r, std::abs(p.z.real()), std::abs(p.z.imag())});
    for (const auto& g : guides)
        r = std::max({r, std::abs(g.center.real()) + g.radius, std::abs(g.center.imag()) + g.radius});
    r *= 1.05;
    return {-r, r, -r, r};
}

namespace detail {

inline std::string svg_num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

inline std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace detail

inline std::string render_svg_scatter(const std::vector<LabeledPoint>& points, const PlotWindow& window,
                                      const std::vector<GuideCircle>& guides = {})
{
    detail::require(window.x_max > window.x_min && window.y_max > window.y_min,
                    "render_svg_scatter: window must be nonempty");
    constexpr double size = 800.0;
    constexpr double pad = 40.0;
    const double sx = (size - 2 * pad) / (window.x_max - window.x_min);
    const double sy = (size - 2 * pad) / (window.y_max - window.y_min);
    const auto X = [&](double x) { return pad + (x - window.x_min) * sx; };
    const auto Y = [&](double y) { return size - pad - (y - window.y_min) * sy; };
    using detail::svg_num;

    static const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                          "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

    s += "<g class=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
    const double ax_y = std::clamp(0.0, window.y_min, window.y_max);
    const double ax_x = std::clamp(0.0, window.x_min, window.x_max);
    s += "<line x1=\"" + svg_num(X(window.x_min)) + "\" y1=\"" + svg_num(Y(ax_y)) + "\" x2=\"" +
         svg_num(X(window.x_max)) + "\" y2=\"" + svg_num(Y(ax_y)) + "\"/>\n";
    s += "<line x1=\"" + svg_num(X(ax_x)) + "\" y1=\"" + svg_num(Y(window.y_min)) + "\" x2=\"" +
         svg_num(X(ax_x)) + "\" y2=\"" + svg_num(Y(window.y_max)) + "\"/>\n";
    s += "</g>\n";

    for (const GuideCircle& g : guides) {
        s += "<circle class=\"guide\" cx=\"" + svg_num(X(g.center.real())) + "\" cy=\"" +
             svg_num(Y(g.center.imag())) + "\" r=\"" + svg_num(g.radius * sx) +
             "\" fill=\"none\" stroke=\"#aaaaaa\" stroke-dasharray=\"4 4\"";
        if (!g.label.empty())
            s += " data-label=\"" + detail::xml_escape(g.label) + "\"";
        s += "/>\n";
    }

    // One group per label, in order of first appearance.
    std::vector<std::string> labels;
    std::map<std::string, std::vector<Complex>> series;
    for (const LabeledPoint& p : points) {
        auto [it, inserted] = series.try_emplace(p.label);
        if (inserted)
            labels.push_back(p.label);
        it->second.push_back(p.z);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const char* color = palette[i % std::size(palette)];
        s += "<g class=\"series\" data-label=\"" + detail::xml_escape(labels[i]) + "\" fill=\"" +
             color + "\">\n";
        for (const Complex& z : series[labels[i]])
            s += "<circle class=\"marker\" cx=\"" + svg_num(X(z.real())) + "\" cy=\"" +
                 svg_num(Y(z.imag())) + "\" r=\"3\"/>\n";
        s += "</g>\n";
        s += "<text x=\"" + svg_num(size - pad - 120) + "\" y=\"" + svg_num(pad + 16.0 * (i + 1)) +
             "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + color + "\">" +
             detail::xml_escape(labels[i]) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace polarzeros

#endif
