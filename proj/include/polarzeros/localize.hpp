#ifndef POLARZEROS_LOCALIZE_HPP
#define POLARZEROS_LOCALIZE_HPP

/**
 * @file localize.hpp
 * @brief Zero-localization regions and critical-point diagnostics.
 *
 *  - polar_disk_radius: every zero of Q_{n;k}(z; xi) lies in
 *    |z| <= |xi| + (k+1)(1+|xi|).
 *  - cauchy_bound (root_bounds.hpp): |z| <= 1 + max_{j<n}|a_j|/|a_n|.
 *  - datt_govil_ring: for monic p with B = max_{j<n}|a_j|,
 *    |a_0| / (2(1+B)^{n-1}(1+nB)) <= |z| <= 1 + lambda0 B, where lambda0 is
 *    the root in [0,1] of (x-1)(1+Bx)^n + 1.
 *  - gauss_lucas_report: critical points against the convex hull of zeros.
 *  - sendov_report: per zero, distance to the nearest and to the farthest
 *    critical point.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/errors.hpp"
#include "polarzeros/root_bounds.hpp"
#include "polarzeros/rootfind.hpp"

namespace polarzeros {

/// Outward slack for hull membership and region verdicts.
inline constexpr double kContainmentSlack = 1e-9;

inline double polar_disk_radius(Complex xi, int k)
{
    detail::require(k >= 0, "polar_disk_radius: k must be nonnegative");
    const double r = std::abs(xi);
    return r + (k + 1) * (1.0 + r);
}

// ---------------------------------------------------------------------------
// Datt-Govil ring

namespace detail {

/// Sign of f(x) = (x-1)(1+Bx)^n + 1 for x in (0,1), in log form so large
/// B^n cannot overflow: f < 0 iff log(1-x) + n log(1+Bx) > 0.
inline bool lambda_f_negative(double x, double B, int n)
{
    return std::log1p(-x) + n * std::log1p(B * x) > 0.0;
}

} // namespace detail

/// Largest root of (x-1)(1+Bx)^n + 1 in [0,1]. x = 0 always solves it; an
/// interior root exists iff nB > 1, otherwise 0 is returned.
inline double lambda0_solve(double B, int n)
{
    detail::require(B > 0.0, "lambda0_solve: B must be positive");
    detail::require(n >= 1, "lambda0_solve: n must be at least one");
    double lo = 1e-9;
    double hi = 1.0;
    if (!detail::lambda_f_negative(lo, B, n))
        return 0.0;
    // f(lo) < 0 < f(1) = 1
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (detail::lambda_f_negative(mid, B, n) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct Ring {
    double inner = 0.0;
    double outer = 0.0;
    double lambda0 = 0.0;
    double B = 0.0;
};

inline Ring datt_govil_ring(const ComplexPoly& p)
{
    detail::require(p.degree() >= 1, "datt_govil_ring: degree must be at least one");
    if (std::abs(p.leading() - 1.0) > 1e-10)
        throw InvalidArgument("datt_govil_ring: polynomial must be monic");
    const int n = p.degree();
    const auto c = p.coeffs();
    Ring ring;
    for (int j = 0; j < n; ++j)
        ring.B = std::max(ring.B, std::abs(c[static_cast<std::size_t>(j)]));
    const double a0 = std::abs(c[0]);
    if (ring.B == 0.0) {
        ring.outer = 1.0;
        return ring;
    }
    if (a0 > 0.0) {
        const double log_den = std::log(2.0) + (n - 1) * std::log1p(ring.B) + std::log1p(n * ring.B);
        ring.inner = std::exp(std::log(a0) - log_den);
    }
    ring.lambda0 = lambda0_solve(ring.B, n);
    ring.outer = 1.0 + ring.lambda0 * ring.B;
    return ring;
}

// ---------------------------------------------------------------------------
// Convex hull and Gauss-Lucas

namespace detail {

inline double cross(Complex o, Complex a, Complex b)
{
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Andrew's monotone chain; counter-clockwise, collinear points dropped.
inline std::vector<Complex> convex_hull(std::vector<Complex> pts)
{
    std::sort(pts.begin(), pts.end(), root_order);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Complex& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double distance_to_segment(Complex p, Complex a, Complex b)
{
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

/// Membership in a counter-clockwise hull allowing `slack` outward.
inline bool in_hull(const std::vector<Complex>& hull, Complex p, double slack)
{
    if (hull.empty())
        return false;
    if (hull.size() == 1)
        return std::abs(p - hull[0]) <= slack;
    if (hull.size() == 2)
        return distance_to_segment(p, hull[0], hull[1]) <= slack;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Complex a = hull[i];
        const Complex b = hull[(i + 1) % hull.size()];
        // signed distance of p to the left of edge a->b
        if (cross(a, b, p) / std::abs(b - a) < -slack)
            return false;
    }
    return true;
}

} // namespace detail

struct GaussLucasReport {
    std::vector<Complex> hull;
    std::vector<Complex> critical_points;
    std::vector<bool> inside;
    bool all_inside = true;
};

inline GaussLucasReport gauss_lucas_report(const ComplexPoly& p, const RootSet& rs,
                                           const RootFinderOptions& options = {})
{
    detail::require(p.degree() >= 2, "gauss_lucas_report: degree must be at least two");
    GaussLucasReport report;
    report.hull = detail::convex_hull(rs.roots);
    report.critical_points = find_roots(derivative(p), options).roots;
    double scale = 1.0;
    for (const Complex& r : rs.roots)
        scale = std::max(scale, std::abs(r));
    for (const Complex& w : report.critical_points) {
        const bool in = detail::in_hull(report.hull, w, kContainmentSlack * scale);
        report.inside.push_back(in);
        report.all_inside = report.all_inside && in;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Sendov-type distances

struct SendovEntry {
    Complex zero;
    double nearest_critical_distance = 0.0;
    double farthest_critical_distance = 0.0;
};

struct SendovReport {
    /// max over zeros of the distance to the nearest critical point
    double max_distance = 0.0;
    Complex witness;
    /// max over zeros of the distance to the farthest critical point
    double max_farthest_distance = 0.0;
    Complex farthest_witness;
    std::vector<Complex> critical_points;
    std::vector<SendovEntry> table;
};

namespace detail {

/// Index of the maximum; among entries within a relative 1e-9 of it, the
/// last one in order.
template <class Get>
std::size_t last_argmax(std::size_t count, Get get)
{
    double best = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        best = std::max(best, get(i));
    const double cutoff = best - 1e-9 * std::max(1.0, best);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < count; ++i)
        if (get(i) >= cutoff)
            idx = i;
    return idx;
}

} // namespace detail

inline SendovReport sendov_report(const ComplexPoly& p, const RootSet& rs,
                                  const RootFinderOptions& options = {})
{
    detail::require(p.degree() >= 2, "sendov_report: degree must be at least two");
    SendovReport report;
    report.critical_points = find_roots(derivative(p), options).roots;
    for (const Complex& z : rs.roots) {
        SendovEntry e{z, std::numeric_limits<double>::infinity(), 0.0};
        for (const Complex& w : report.critical_points) {
            const double d = std::abs(z - w);
            e.nearest_critical_distance = std::min(e.nearest_critical_distance, d);
            e.farthest_critical_distance = std::max(e.farthest_critical_distance, d);
        }
        report.table.push_back(e);
    }
    if (report.table.empty())
        return report;
    const auto& t = report.table;
    const std::size_t near = detail::last_argmax(t.size(), [&](std::size_t i) { return t[i].nearest_critical_distance; });
    const std::size_t far = detail::last_argmax(t.size(), [&](std::size_t i) { return t[i].farthest_critical_distance; });
    report.max_distance = t[near].nearest_critical_distance;
    report.witness = t[near].zero;
    report.max_farthest_distance = t[far].farthest_critical_distance;
    report.farthest_witness = t[far].zero;
    return report;
}

// ---------------------------------------------------------------------------
// Disk containment and the combined report

struct RootVerdict {
    Complex root;
    bool inside_disk = true;
    bool inside_ring = true;
};

struct ContainmentReport {
    double radius = 0.0;
    std::vector<RootVerdict> verdicts;
    bool all_inside = true;
};

inline ContainmentReport containment_report(const RootSet& rs, Complex xi, int k)
{
    ContainmentReport report;
    report.radius = polar_disk_radius(xi, k);
    for (const Complex& r : rs.roots) {
        const bool in = std::abs(r) <= report.radius + kContainmentSlack;
        report.verdicts.push_back({r, in, true});
        report.all_inside = report.all_inside && in;
    }
    return report;
}

struct BoundReport {
    double polar_disk_radius = 0.0;
    double cauchy_radius = 0.0;
    double ring_inner = 0.0;
    double ring_outer = 0.0;
    double lambda0 = 0.0;
    std::vector<RootVerdict> per_root_verdicts;
    double sendov_max_distance = 0.0;
    Complex sendov_witness;
    double sendov_max_farthest_distance = 0.0;
    Complex sendov_farthest_witness;
    bool all_inside_disk = true;
    bool all_inside_ring = true;
};

/// Every region and diagnostic for the zeros `rs` of the monic polar
/// polynomial `p` = Q_{n;k}(z; xi).
inline BoundReport bound_report(const ComplexPoly& p, const RootSet& rs, Complex xi, int k,
                                const RootFinderOptions& options = {})
{
    BoundReport report;
    const ContainmentReport disk = containment_report(rs, xi, k);
    const Ring ring = datt_govil_ring(p);
    report.polar_disk_radius = disk.radius;
    report.cauchy_radius = cauchy_bound(p);
    report.ring_inner = ring.inner;
    report.ring_outer = ring.outer;
    report.lambda0 = ring.lambda0;
    report.per_root_verdicts = disk.verdicts;
    report.all_inside_disk = disk.all_inside;
    for (RootVerdict& v : report.per_root_verdicts) {
        const double m = std::abs(v.root);
        v.inside_ring = m >= ring.inner - kContainmentSlack && m <= ring.outer + kContainmentSlack;
        report.all_inside_ring = report.all_inside_ring && v.inside_ring;
    }
    if (p.degree() >= 2) {
        const SendovReport s = sendov_report(p, rs, options);
        report.sendov_max_distance = s.max_distance;
        report.sendov_witness = s.witness;
        report.sendov_max_farthest_distance = s.max_farthest_distance;
        report.sendov_farthest_witness = s.farthest_witness;
    }
    return report;
}

} // namespace polarzeros

#endif
