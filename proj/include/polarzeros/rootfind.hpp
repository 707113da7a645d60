#ifndef POLARZEROS_ROOTFIND_HPP
#define POLARZEROS_ROOTFIND_HPP

/**
 * @file rootfind.hpp
 * @brief All complex zeros of a polynomial by Aberth-Ehrlich iteration.
 *
 * Deterministic: initial guesses are r0 exp(2 pi i (j + 1/4) / n), updates are
 * applied in index order (Gauss-Seidel), and the output is sorted by real
 * part, then imaginary part. Identical input gives bitwise-identical output.
 *
 * Polynomial values are formed with compensated (double-double) Horner so
 * that the iteration and the reported residual are limited by the root
 * itself rather than by cancellation in the evaluation.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/detail/double_double.hpp"
#include "polarzeros/errors.hpp"
#include "polarzeros/root_bounds.hpp"

namespace polarzeros {

struct RootSet {
    std::vector<Complex> roots;
    /// max |p(r)| / (1 + max |coeff|) over the returned roots
    double max_residual = 0.0;
    int iterations = 0;
};

struct RootFinderOptions {
    double tol = 1e-12;
    int max_iter = 500;
};

/// Raised when the iteration does not meet its tolerance; carries the best
/// iterate found.
class RootFinderError : public NumericalFailure {
public:
    RootFinderError(const std::string& what, RootSet best)
        : NumericalFailure(what), best_(std::move(best))
    {
    }

    const RootSet& best() const { return best_; }

private:
    RootSet best_;
};

namespace detail {

struct ValueAndSlope {
    Complex value;
    Complex slope;
};

inline ValueAndSlope evaluate_compensated(std::span<const Complex> c, Complex z)
{
    const ComplexDD zz(z);
    ComplexDD v(c.back());
    ComplexDD d;
    for (std::size_t l = c.size() - 1; l-- > 0;) {
        d = d * zz + v;
        v = v * zz + ComplexDD(c[l]);
    }
    return {v.to_complex(), d.to_complex()};
}

inline bool root_order(const Complex& a, const Complex& b)
{
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

struct AberthOutcome {
    std::vector<Complex> roots;
    int iterations = 0;
    bool converged = false;
};

inline AberthOutcome aberth(std::span<const Complex> c, double radius, double tol, int max_iter)
{
    const int n = static_cast<int>(c.size()) - 1;
    const double two_pi = 6.283185307179586476925286766559;
    AberthOutcome out;
    out.roots.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out.roots[static_cast<std::size_t>(j)] = std::polar(radius, two_pi * (j + 0.25) / n);

    std::vector<char> done(static_cast<std::size_t>(n), 0);
    auto& z = out.roots;
    int remaining = n;
    for (int it = 1; it <= max_iter && remaining > 0; ++it) {
        out.iterations = it;
        for (int i = 0; i < n; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            if (done[ii])
                continue;
            const ValueAndSlope e = evaluate_compensated(c, z[ii]);
            if (e.value == Complex{}) {
                done[ii] = 1;
                --remaining;
                continue;
            }
            Complex w;
            if (e.slope == Complex{}) {
                // Stationary point of p: nudge off it.
                w = std::polar(1e-3 * (1.0 + std::abs(z[ii])), 0.5 + i);
            } else {
                const Complex newton = e.value / e.slope;
                Complex repulsion{};
                for (int j = 0; j < n; ++j)
                    if (j != i)
                        repulsion += 1.0 / (z[ii] - z[static_cast<std::size_t>(j)]);
                const Complex denom = 1.0 - newton * repulsion;
                w = denom == Complex{} ? newton : newton / denom;
            }
            z[ii] -= w;
            if (!std::isfinite(z[ii].real()) || !std::isfinite(z[ii].imag()))
                return out;
            if (std::abs(w) <= tol * (1.0 + std::abs(z[ii]))) {
                done[ii] = 1;
                --remaining;
            }
        }
    }
    out.converged = remaining == 0;
    return out;
}

/// Up to three Newton steps per root, each kept only if it lowers |p|.
inline void polish(std::span<const Complex> c, std::vector<Complex>& roots)
{
    for (Complex& r : roots) {
        double best = std::abs(evaluate_compensated(c, r).value);
        for (int step = 0; step < 3 && best > 0.0; ++step) {
            const ValueAndSlope e = evaluate_compensated(c, r);
            if (e.slope == Complex{})
                break;
            const Complex candidate = r - e.value / e.slope;
            const double value = std::abs(evaluate_compensated(c, candidate).value);
            if (!(value < best))
                break;
            r = candidate;
            best = value;
        }
    }
}

} // namespace detail

/// max |p(r)| / (1 + max |coeff of p|); zero for an empty list.
inline double max_residual(const ComplexPoly& p, std::span<const Complex> roots)
{
    const double scale = 1.0 + p.max_abs_coeff();
    double m = 0.0;
    for (const Complex& r : roots)
        m = std::max(m, std::abs(detail::evaluate_compensated(p.coeffs(), r).value) / scale);
    return m;
}

inline RootSet find_roots(const ComplexPoly& p, double tol = 1e-12, int max_iter = 500)
{
    detail::require(p.degree() >= 1, "find_roots: degree must be at least one");
    detail::require(tol > 0.0, "find_roots: tolerance must be positive");
    detail::require(max_iter >= 1, "find_roots: max_iter must be positive");

    // Exact zero low-order coefficients are exact zero roots.
    const auto all = p.coeffs();
    std::size_t zeros = 0;
    while (all[zeros] == Complex{})
        ++zeros;
    const std::span<const Complex> c = all.subspan(zeros);
    const ComplexPoly reduced(std::vector<Complex>(c.begin(), c.end()));

    auto finish = [&](std::vector<Complex> found, int iterations) {
        RootSet rs;
        rs.roots.assign(zeros, Complex{});
        rs.roots.insert(rs.roots.end(), found.begin(), found.end());
        std::sort(rs.roots.begin(), rs.roots.end(), detail::root_order);
        rs.max_residual = max_residual(p, rs.roots);
        rs.iterations = iterations;
        return rs;
    };

    if (reduced.degree() == 0)
        return finish({}, 0);
    if (reduced.degree() == 1)
        return finish({-c[0] / c[1]}, 0);

    const double radius = 0.5 * std::min(cauchy_bound(reduced), fujiwara_bound(reduced));
    RootSet best;
    best.max_residual = std::numeric_limits<double>::infinity();
    for (const double r0 : {radius, 1.1 * radius}) {
        detail::AberthOutcome a = detail::aberth(c, r0, tol, max_iter);
        const bool finite = std::all_of(a.roots.begin(), a.roots.end(), [](const Complex& r) {
            return std::isfinite(r.real()) && std::isfinite(r.imag());
        });
        if (!finite) {
            if (best.roots.empty()) {
                best.roots = std::move(a.roots);
                best.iterations = a.iterations;
            }
            continue;
        }
        detail::polish(c, a.roots);
        RootSet rs = finish(std::move(a.roots), a.iterations);
        if (a.converged && rs.max_residual <= tol)
            return rs;
        if (rs.max_residual < best.max_residual || best.roots.empty())
            best = std::move(rs);
    }
    throw RootFinderError("find_roots: no convergence to tolerance (degree " +
                              std::to_string(p.degree()) + ", residual " +
                              std::to_string(best.max_residual) + ")",
                          std::move(best));
}

inline RootSet find_roots(const ComplexPoly& p, const RootFinderOptions& options)
{
    return find_roots(p, options.tol, options.max_iter);
}

} // namespace polarzeros

#endif
