#ifndef POLARZEROS_OPUC_HPP
#define POLARZEROS_OPUC_HPP

/**
 * @file opuc.hpp
 * @brief Monic orthogonal polynomials on the unit circle.
 *
 * Four families are supported:
 *  - Bernstein-Szego, weight 1/|z + beta|^2 with |beta| < 1,
 *    L_n = z^n + beta z^{n-1};
 *  - Lebesgue measure plus a point mass m at z = 1,
 *    L_n = z^n - m/(1+nm) (1 + z + ... + z^{n-1});
 *  - the weight |z - 1|^2, L_n = sum_k (k+1)/(n+1) z^k;
 *  - an explicit list of Verblunsky coefficients alpha_j = L_j(0), built by
 *    the Szego recursion L_j = z L_{j-1} + alpha_j L_{j-1}^*.
 *
 * All measures act as (1/2pi) int f(e^{i theta}) w(theta) d theta, with the
 * point mass contributing m f(1).
 */

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/errors.hpp"

namespace polarzeros {

struct BernsteinSzego {
    Complex beta;
};

struct MassPoint {
    double mass;
};

struct GeometricWeight {};

struct Verblunsky {
    /// alphas[j - 1] = L_j(0)
    std::vector<Complex> alphas;
};

class MeasureSpec {
public:
    using Variant = std::variant<BernsteinSzego, MassPoint, GeometricWeight, Verblunsky>;

    static MeasureSpec bernstein_szego(Complex beta)
    {
        detail::require(std::abs(beta) < 1.0, "Bernstein-Szego measure requires |beta| < 1");
        return MeasureSpec(BernsteinSzego{beta});
    }

    static MeasureSpec mass_point(double mass)
    {
        detail::require(std::isfinite(mass) && mass >= 0.0, "point mass must be nonnegative");
        return MeasureSpec(MassPoint{mass});
    }

    static MeasureSpec geometric() { return MeasureSpec(GeometricWeight{}); }

    static MeasureSpec verblunsky(std::vector<Complex> alphas)
    {
        for (const Complex& a : alphas)
            detail::require(std::abs(a) < 1.0, "Verblunsky coefficients must satisfy |alpha| < 1");
        return MeasureSpec(Verblunsky{std::move(alphas)});
    }

    const Variant& variant() const { return v_; }

    template <class T>
    const T* get_if() const
    {
        return std::get_if<T>(&v_);
    }

    std::string name() const
    {
        switch (v_.index()) {
        case 0: return "bernstein-szego";
        case 1: return "masspoint";
        case 2: return "geometric";
        default: return "verblunsky";
        }
    }

private:
    explicit MeasureSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// ---------------------------------------------------------------------------

/// L_0 ... L_n from alpha_1 ... alpha_n.
inline std::vector<ComplexPoly> szego_recursion(std::span<const Complex> alphas)
{
    for (const Complex& a : alphas)
        detail::require(std::abs(a) < 1.0, "szego_recursion: |alpha| must be < 1");
    std::vector<ComplexPoly> family;
    family.reserve(alphas.size() + 1);
    family.push_back(ComplexPoly::constant(1.0));
    const ComplexPoly z = ComplexPoly::monomial(1);
    for (std::size_t j = 1; j <= alphas.size(); ++j) {
        const ComplexPoly& prev = family.back();
        const ComplexPoly star = reverse_star(prev, static_cast<int>(j) - 1);
        family.push_back(z * prev + alphas[j - 1] * star);
    }
    return family;
}

/// Monic degree-n orthogonal polynomial of the family.
inline ComplexPoly build_family(const MeasureSpec& spec, int n)
{
    detail::require(n >= 0, "build_family: degree must be nonnegative");
    if (n == 0)
        return ComplexPoly::constant(1.0);
    const auto nn = static_cast<std::size_t>(n);
    std::vector<Complex> c(nn + 1);

    if (const auto* bs = spec.get_if<BernsteinSzego>()) {
        c[nn] = 1.0;
        c[nn - 1] += bs->beta;
    } else if (const auto* mp = spec.get_if<MassPoint>()) {
        const double a = mp->mass / (1.0 + n * mp->mass);
        for (std::size_t k = 0; k < nn; ++k)
            c[k] = -a;
        c[nn] = 1.0;
    } else if (spec.get_if<GeometricWeight>()) {
        for (std::size_t k = 0; k <= nn; ++k)
            c[k] = static_cast<double>(k + 1) / static_cast<double>(n + 1);
    } else {
        const auto& alphas = spec.get_if<Verblunsky>()->alphas;
        detail::require(alphas.size() >= nn,
                        "build_family: Verblunsky variant needs at least n coefficients");
        return szego_recursion(std::span<const Complex>(alphas.data(), nn)).back();
    }
    return ComplexPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Identity checks

namespace detail {

/// Absolutely continuous density w(theta) relative to d theta / 2pi.
inline double measure_density(const MeasureSpec& spec, Complex z, const ComplexPoly* bs_star)
{
    if (const auto* bs = spec.get_if<BernsteinSzego>())
        return 1.0 / std::norm(z + bs->beta);
    if (spec.get_if<MassPoint>())
        return 1.0;
    if (spec.get_if<GeometricWeight>())
        return std::norm(z - 1.0);
    // Verblunsky: Bernstein-Szego measure of the last polynomial, which
    // shares alpha_1..alpha_N with any measure generating them. Scaled to
    // total mass one.
    double mass = 1.0;
    for (const Complex& a : spec.get_if<Verblunsky>()->alphas)
        mass *= 1.0 - std::norm(a);
    return mass / std::norm(evaluate(*bs_star, z));
}

/**
 * Fourier moments int z^{-m} |z + beta|^{-2} dtheta / 2pi for |m| <= K,
 * returned at index m + K.
 */
inline std::vector<Complex> bernstein_szego_moments(Complex beta, int K)
{
    const double scale = 1.0 / (1.0 - std::norm(beta));
    std::vector<Complex> mu(2 * static_cast<std::size_t>(K) + 1);
    Complex up = scale, down = scale;
    for (int m = 0; m <= K; ++m) {
        mu[static_cast<std::size_t>(K + m)] = up;
        mu[static_cast<std::size_t>(K - m)] = down;
        up *= -std::conj(beta);
        down *= -beta;
    }
    return mu;
}

} // namespace detail

/**
 * |int L_n(z) z^{-j} d mu| on M = quad_points equispaced nodes of [-pi, pi].
 * Polynomial densities use the composite trapezoid rule. The Bernstein-Szego
 * weight uses the product trapezoid rule (trigonometric interpolation of
 * L_n z^{-j} integrated against the exact moments of the weight), exact when
 * n < M / 2.
 */
inline double orthogonality_residual(const MeasureSpec& spec, int n, int j, int quad_points = 512)
{
    detail::require(n >= 1, "orthogonality_residual: n must be positive");
    detail::require(j >= 0 && j < n, "orthogonality_residual: need 0 <= j < n");
    detail::require(quad_points >= 4 * (n + 1),
                    "orthogonality_residual: need at least 4(n+1) quadrature points");

    const ComplexPoly L = build_family(spec, n);
    ComplexPoly star;
    if (const auto* v = spec.get_if<Verblunsky>()) {
        const auto all = szego_recursion(v->alphas);
        star = reverse_star(all.back(), static_cast<int>(v->alphas.size()));
    }

    const auto* bs = spec.get_if<BernsteinSzego>();
    const int K = (quad_points - 1) / 2;
    std::vector<Complex> mu;
    if (bs != nullptr)
        mu = detail::bernstein_szego_moments(bs->beta, K);

    Complex sum{};
    for (int t = 0; t < quad_points; ++t) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * t / quad_points;
        const Complex z = std::polar(1.0, theta);
        const Complex g = evaluate(L, z) * std::polar(1.0, -theta * j);
        if (bs == nullptr) {
            sum += g * detail::measure_density(spec, z, &star);
            continue;
        }
        Complex weight = mu[static_cast<std::size_t>(K)];
        const Complex step = std::conj(z);
        Complex forward = 1.0, backward = 1.0;
        for (int m = 1; m <= K; ++m) {
            forward *= step;
            backward *= z;
            weight += mu[static_cast<std::size_t>(K - m)] * forward + mu[static_cast<std::size_t>(K + m)] * backward;
        }
        sum += g * weight;
    }
    sum /= static_cast<double>(quad_points);
    if (const auto* mp = spec.get_if<MassPoint>())
        sum += mp->mass * evaluate(L, 1.0);
    return std::abs(sum);
}

struct BoundaryIdentityResult {
    double residual = 0.0;
    /// Sample angles skipped because |L_n(e^{i theta})| <= 1e-9.
    std::vector<double> skipped;
};

/**
 * Checks on |z| = 1 that | |L_{n+1}/L_n - z| - |L_{n+1}(0)| | vanishes, and
 * that the series 1 + z sum_{l<n} conj(L_{l+1}(0)) L_l(z) reproduces the
 * reversed polynomial L_n^*. Returns the larger of the two deviations.
 */
inline BoundaryIdentityResult boundary_identity_residual(const MeasureSpec& spec, int n,
                                                         std::span<const double> thetas)
{
    detail::require(n >= 0, "boundary_identity_residual: n must be nonnegative");
    std::vector<ComplexPoly> family;
    family.reserve(static_cast<std::size_t>(n) + 2);
    for (int l = 0; l <= n + 1; ++l)
        family.push_back(build_family(spec, l));
    const ComplexPoly& Ln = family[static_cast<std::size_t>(n)];
    const ComplexPoly& Ln1 = family[static_cast<std::size_t>(n) + 1];
    const ComplexPoly star = reverse_star(Ln, n);
    const double alpha_next = std::abs(Ln1[0]);

    BoundaryIdentityResult out;
    for (double theta : thetas) {
        const Complex z = std::polar(1.0, theta);
        const Complex ln = evaluate(Ln, z);
        if (std::abs(ln) <= 1e-9) {
            out.skipped.push_back(theta);
            continue;
        }
        const double ratio_dev = std::abs(std::abs(evaluate(Ln1, z) / ln - z) - alpha_next);

        Complex series = 1.0;
        Complex acc{};
        for (int l = 0; l < n; ++l)
            acc += std::conj(family[static_cast<std::size_t>(l) + 1][0]) *
                   evaluate(family[static_cast<std::size_t>(l)], z);
        series += z * acc;
        const double star_dev = std::abs(series - evaluate(star, z));

        out.residual = std::max({out.residual, ratio_dev, star_dev});
    }
    return out;
}

} // namespace polarzeros

#endif
