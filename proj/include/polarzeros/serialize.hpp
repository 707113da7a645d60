#ifndef POLARZEROS_SERIALIZE_HPP
#define POLARZEROS_SERIALIZE_HPP

/**
 * @file serialize.hpp
 * @brief JSON forms of polynomials, measures, root sets and bound reports.
 *
 * Complex numbers are [re, im] pairs. Output goes through write_json, which
 * prints every number with 17 significant digits so values round-trip, and
 * writes non-finite numbers as null.
 */

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/errors.hpp"
#include "polarzeros/localize.hpp"
#include "polarzeros/opuc.hpp"
#include "polarzeros/rootfind.hpp"

namespace polarzeros {

using Json = nlohmann::ordered_json;

inline std::string format_number(double x)
{
    if (!std::isfinite(x))
        return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline void write_json(const Json& j, std::string& out, int indent, int depth)
{
    const auto newline = [&](int d) {
        if (indent < 0)
            return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first)
                out += ',';
            first = false;
            newline(depth + 1);
            out += Json(key).dump();
            out += indent < 0 ? ":" : ": ";
            write_json(value, out, indent, depth + 1);
        }
        newline(depth);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Arrays of scalars stay on one line, so [re, im] pairs read well.
        bool flat = true;
        for (const auto& v : j)
            flat = flat && !v.is_structured();
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += flat && indent >= 0 ? ", " : ",";
            if (!flat)
                newline(depth + 1);
            write_json(j[i], out, indent, depth + 1);
        }
        if (!flat)
            newline(depth);
        out += ']';
        return;
    }
    case Json::value_t::number_float:
        out += format_number(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

} // namespace detail

/// Serialize with 17 significant digits; indent < 0 gives one line.
inline std::string write_json(const Json& j, int indent = 2)
{
    std::string out;
    detail::write_json(j, out, indent, 0);
    return out;
}

// ---------------------------------------------------------------------------

inline Json complex_to_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidArgument("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json complex_list_to_json(std::span<const Complex> zs)
{
    Json arr = Json::array();
    for (const Complex& z : zs)
        arr.push_back(complex_to_json(z));
    return arr;
}

inline std::vector<Complex> complex_list_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidArgument("expected a list of [re, im] pairs");
    std::vector<Complex> out;
    for (const auto& v : j)
        out.push_back(complex_from_json(v));
    return out;
}

inline Json to_json(const ComplexPoly& p)
{
    Json j;
    j["basis"] = "monomial";
    j["coeffs"] = complex_list_to_json(p.coeffs());
    return j;
}

inline ComplexPoly poly_from_json(const Json& j)
{
    if (!j.is_object() || j.value("basis", "") != "monomial" || !j.contains("coeffs"))
        throw InvalidArgument("polynomial JSON needs basis \"monomial\" and coeffs");
    return ComplexPoly(complex_list_from_json(j["coeffs"]));
}

inline Json to_json(const MeasureSpec& spec)
{
    Json j;
    j["measure"] = spec.name();
    if (const auto* bs = spec.get_if<BernsteinSzego>())
        j["beta"] = complex_to_json(bs->beta);
    else if (const auto* mp = spec.get_if<MassPoint>())
        j["mass"] = mp->mass;
    else if (const auto* v = spec.get_if<Verblunsky>())
        j["alphas"] = complex_list_to_json(v->alphas);
    return j;
}

inline MeasureSpec measure_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("measure") || !j["measure"].is_string())
        throw InvalidArgument("measure JSON needs a \"measure\" name");
    const std::string name = j["measure"].get<std::string>();
    if (name == "bernstein-szego" && j.contains("beta"))
        return MeasureSpec::bernstein_szego(complex_from_json(j["beta"]));
    if (name == "masspoint" && j.contains("mass") && j["mass"].is_number())
        return MeasureSpec::mass_point(j["mass"].get<double>());
    if (name == "geometric")
        return MeasureSpec::geometric();
    if (name == "verblunsky" && j.contains("alphas"))
        return MeasureSpec::verblunsky(complex_list_from_json(j["alphas"]));
    throw InvalidArgument("unknown or incomplete measure: " + name);
}

inline Json to_json(const RootSet& rs)
{
    Json j;
    j["roots"] = complex_list_to_json(rs.roots);
    j["max_residual"] = rs.max_residual;
    j["iterations"] = rs.iterations;
    return j;
}

inline RootSet root_set_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("roots"))
        throw InvalidArgument("root set JSON needs roots");
    RootSet rs;
    rs.roots = complex_list_from_json(j["roots"]);
    rs.max_residual = j.value("max_residual", 0.0);
    rs.iterations = j.value("iterations", 0);
    return rs;
}

inline Json to_json(const BoundReport& r)
{
    Json j;
    j["polar_disk_radius"] = r.polar_disk_radius;
    j["cauchy_radius"] = r.cauchy_radius;
    j["ring_inner"] = r.ring_inner;
    j["ring_outer"] = r.ring_outer;
    j["lambda0"] = r.lambda0;
    Json verdicts = Json::array();
    for (const RootVerdict& v : r.per_root_verdicts) {
        Json e;
        e["root"] = complex_to_json(v.root);
        e["inside_disk"] = v.inside_disk;
        e["inside_ring"] = v.inside_ring;
        verdicts.push_back(std::move(e));
    }
    j["per_root_verdicts"] = std::move(verdicts);
    j["sendov_max_distance"] = r.sendov_max_distance;
    j["sendov_witness"] = complex_to_json(r.sendov_witness);
    j["sendov_max_farthest_distance"] = r.sendov_max_farthest_distance;
    j["sendov_farthest_witness"] = complex_to_json(r.sendov_farthest_witness);
    j["all_inside_disk"] = r.all_inside_disk;
    j["all_inside_ring"] = r.all_inside_ring;
    return j;
}

} // namespace polarzeros

#endif
