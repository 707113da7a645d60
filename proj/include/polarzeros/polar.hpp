#ifndef POLARZEROS_POLAR_HPP
#define POLARZEROS_POLAR_HPP

/**
 * @file polar.hpp
 * @brief k-polar polynomials Q_{n;k}(z; xi) and the identities around them.
 *
 * Q_{n;k} is the degree-n polynomial solution of
 *
 *     d^k/dz^k [ (z - xi)^k Q(z) ] = (n+1)(n+2)...(n+k) L_n(z).
 *
 * In powers of (z - xi) this is a diagonal scaling: if L_n = sum a_l (z-xi)^l
 * then Q_{n;k} = sum b_l (z-xi)^l with
 *
 *     b_l = [(n+1)...(n+k)] / [(l+1)...(l+k)] * a_l,    l = 0..n.
 *
 * polar_polynomial() implements that scaling; polar_integral_k1() is the
 * independent k = 1 route (n+1) int_xi^z L / (z - xi); closed_form_polar()
 * evaluates the rational closed forms of the example families by exact
 * polynomial division.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/errors.hpp"
#include "polarzeros/opuc.hpp"

namespace polarzeros {

struct PolarParams {
    Complex xi;
    int k = 1;
};

namespace detail {

/// Exact binomial coefficient for n <= 62 (all intermediates fit in uint64).
inline double binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0.0;
    r = std::min(r, n - r);
    std::uint64_t c = 1;
    for (int i = 0; i < r; ++i)
        c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    return static_cast<double>(c);
}

/// (n+1)(n+2)...(n+k)
inline double rising_from(int n, int k)
{
    double p = 1.0;
    for (int i = 1; i <= k; ++i)
        p *= static_cast<double>(n + i);
    return p;
}

inline void require_monic(const ComplexPoly& L, double tol, const char* who)
{
    if (std::abs(L.leading() - 1.0) > tol)
        throw InvalidArgument(std::string(who) + ": input polynomial is not monic");
}

/// Exact division by (z - xi); throws if the remainder is not negligible
/// relative to the dividend.
inline ComplexPoly exact_divide_linear(const ComplexPoly& p, Complex xi, double rel_tol,
                                       const char* who)
{
    const LinearDivision d = divide_by_linear(p, xi);
    // The remainder is p(xi); its rounding error scales with sum |p_l| |xi|^l.
    double scale = 1.0, power = 1.0;
    for (const Complex& c : p.coeffs()) {
        scale += std::abs(c) * power;
        power *= std::abs(xi);
    }
    if (std::abs(d.remainder) > rel_tol * scale)
        throw NumericalFailure(std::string(who) + ": division by (z - xi) left a remainder");
    return d.quotient;
}

} // namespace detail

/// Q_{n;k}(z; xi) by rescaling the expansion of L about xi.
inline ComplexPoly polar_polynomial(const ComplexPoly& L, const PolarParams& params)
{
    detail::require(params.k >= 0, "polar_polynomial: k must be nonnegative");
    detail::require(L.degree() >= 1, "polar_polynomial: L must be nonconstant");
    detail::require_monic(L, 1e-10, "polar_polynomial");
    if (params.k == 0)
        return L;

    const int n = L.degree();
    using detail::DoubleDouble;
    std::vector<detail::ComplexDD> centered = detail::taylor_shift_dd(L.coeffs(), params.xi);

    // weight_l = prod (n+i) / prod (l+i); both products are exact integers in
    // double for the degrees used here, the quotient is formed in double-double.
    DoubleDouble top = 1.0;
    for (int i = 1; i <= params.k; ++i)
        top = top * DoubleDouble(static_cast<double>(n + i));
    for (int l = 0; l < n; ++l) {
        DoubleDouble bottom = 1.0;
        for (int i = 1; i <= params.k; ++i)
            bottom = bottom * DoubleDouble(static_cast<double>(l + i));
        centered[static_cast<std::size_t>(l)] = centered[static_cast<std::size_t>(l)] * (top / bottom);
    }
    return ComplexPoly::monic(
        detail::round_to_double(detail::from_centered_dd(std::move(centered), params.xi)));
}

/// Q_{n;1}(z; xi) = (n+1) int_xi^z L(t) dt / (z - xi).
inline ComplexPoly polar_integral_k1(const ComplexPoly& L, Complex xi)
{
    detail::require(L.degree() >= 1, "polar_integral_k1: L must be nonconstant");
    const int n = L.degree();
    const ComplexPoly integral = static_cast<double>(n + 1) * antiderivative_from(L, xi);
    return detail::exact_divide_linear(integral, xi, 1e-11, "polar_integral_k1");
}

/**
 * Residual of d^k/dz^k[(z-xi)^k Q] = (n+1)...(n+k) L, as the largest
 * coefficient of the difference divided by (n+1)...(n+k). For k = 0 this is
 * max |Q_l - L_l|. When samples are given the pointwise residual
 * |R(s)| / ((n+1)...(n+k) max(1,|s|)^n) is folded into the maximum.
 */
inline double ode_residual(const ComplexPoly& L, const ComplexPoly& Q, const PolarParams& params,
                           std::span<const Complex> samples = {})
{
    detail::require(params.k >= 0, "ode_residual: k must be nonnegative");
    const int n = L.degree();
    const double scale = detail::rising_from(n, params.k);
    // Raw coefficient arithmetic: the construction-time trim would drop the
    // top of (z - xi)^k Q when |xi| is large.
    const ComplexPoly shift = linear_power(params.xi, params.k);
    std::vector<Complex> prod(static_cast<std::size_t>(Q.degree() + params.k) + 1);
    for (int a = 0; a <= shift.degree(); ++a)
        for (int b = 0; b <= Q.degree(); ++b)
            prod[static_cast<std::size_t>(a + b)] += shift[static_cast<std::size_t>(a)] * Q[static_cast<std::size_t>(b)];
    std::vector<Complex> diff(prod.size() - static_cast<std::size_t>(params.k));
    for (std::size_t l = 0; l < diff.size(); ++l) {
        double falling = 1.0;
        for (int i = 1; i <= params.k; ++i)
            falling *= static_cast<double>(l) + i;
        diff[l] = falling * prod[l + static_cast<std::size_t>(params.k)] - scale * L[l];
    }
    for (std::size_t l = diff.size(); l <= static_cast<std::size_t>(std::max(n, 0)); ++l)
        diff.push_back(-scale * L[l]);
    const ComplexPoly residual(std::move(diff));

    double r = residual.max_abs_coeff() / scale;
    for (const Complex& s : samples) {
        const double norm = scale * std::pow(std::max(1.0, std::abs(s)), n);
        r = std::max(r, std::abs(evaluate(residual, s)) / norm);
    }
    return r;
}

/**
 * Closed forms for the example families:
 *  - Bernstein-Szego, k = 1:
 *      [z^n (n z + (n+1) beta) - xi^n (n xi + (n+1) beta)] / [n (z - xi)]
 *  - Bernstein-Szego, k = 2:
 *      [z^{n+1}(n z + beta n + 2 beta)
 *       + xi^n (n(n+1) xi^2 + n(n+2) xi (beta - z) - beta (n+1)(n+2) z)]
 *      / [n (z - xi)^2]
 *  - point mass, k = 1:
 *      (z^{n+1} - xi^{n+1})/(z - xi)
 *        - m(n+1)/(1+nm) sum_{j<n} (z^{j+1} - xi^{j+1}) / ((j+1)(z - xi))
 *  - |z-1|^2 weight, k = 1:
 *      [z (z^{n+1} - 1)(xi - 1) - xi (xi^{n+1} - 1)(z - 1)]
 *      / [(xi - 1)(z - xi)(z - 1)]
 * Each numerator is formed as a polynomial and divided exactly.
 */
inline ComplexPoly closed_form_polar(const MeasureSpec& spec, int n, const PolarParams& params)
{
    detail::require(n >= 1, "closed_form_polar: n must be positive");
    const Complex xi = params.xi;
    const auto nn = static_cast<std::size_t>(n);
    const double dn = n;
    constexpr double kTol = 1e-10;
    constexpr const char* who = "closed_form_polar";

    if (const auto* bs = spec.get_if<BernsteinSzego>()) {
        const Complex beta = bs->beta;
        const Complex xin = std::pow(xi, n);
        if (params.k == 1) {
            std::vector<Complex> num(nn + 2);
            num[nn + 1] = dn;
            num[nn] = (dn + 1.0) * beta;
            num[0] = -xin * (dn * xi + (dn + 1.0) * beta);
            return (1.0 / dn) * detail::exact_divide_linear(ComplexPoly(std::move(num)), xi, kTol, who);
        }
        if (params.k == 2) {
            std::vector<Complex> num(nn + 3);
            num[nn + 2] = dn;
            num[nn + 1] = beta * dn + 2.0 * beta;
            num[0] = xin * (dn * (dn + 1.0) * xi * xi + dn * (dn + 2.0) * xi * beta);
            num[1] = xin * (-dn * (dn + 2.0) * xi - beta * (dn + 1.0) * (dn + 2.0));
            const ComplexPoly once = detail::exact_divide_linear(ComplexPoly(std::move(num)), xi, kTol, who);
            return (1.0 / dn) * detail::exact_divide_linear(once, xi, kTol, who);
        }
        throw UnsupportedVariant("closed_form_polar: Bernstein-Szego supports k = 1 or 2");
    }

    if (const auto* mp = spec.get_if<MassPoint>()) {
        if (params.k != 1)
            throw UnsupportedVariant("closed_form_polar: point-mass family supports k = 1 only");
        const double c = mp->mass * (dn + 1.0) / (1.0 + dn * mp->mass);
        std::vector<Complex> num(nn + 2);
        num[nn + 1] = 1.0;
        num[0] = -std::pow(xi, n + 1);
        for (int j = 0; j < n; ++j) {
            const double w = c / (j + 1);
            num[static_cast<std::size_t>(j) + 1] -= w;
            num[0] += w * std::pow(xi, j + 1);
        }
        return detail::exact_divide_linear(ComplexPoly(std::move(num)), xi, kTol, who);
    }

    if (spec.get_if<GeometricWeight>()) {
        if (params.k != 1)
            throw UnsupportedVariant("closed_form_polar: |z-1|^2 family supports k = 1 only");
        detail::require(std::abs(xi - 1.0) > 0.0, "closed_form_polar: xi = 1 is excluded for this family");
        const Complex s = xi * (std::pow(xi, n + 1) - 1.0);
        std::vector<Complex> num(nn + 3);
        num[nn + 2] = xi - 1.0;
        num[1] = -(xi - 1.0) - s;
        num[0] = s;
        const ComplexPoly once = detail::exact_divide_linear(ComplexPoly(std::move(num)), xi, kTol, who);
        const ComplexPoly twice = detail::exact_divide_linear(once, 1.0, kTol, who);
        return (1.0 / (xi - 1.0)) * twice;
    }

    throw UnsupportedVariant("closed_form_polar: no closed form for the Verblunsky variant");
}

// ---------------------------------------------------------------------------
// Binomial kernel g_{n;k} and its identities

/// g_{n;k}(w) = sum_{l=0}^n C(n+k, l+k) w^l.
inline ComplexPoly g_polynomial(int n, int k)
{
    detail::require(n >= 0, "g_polynomial: n must be nonnegative");
    detail::require(k >= 1, "g_polynomial: k must be positive");
    detail::require(n + k <= 60, "g_polynomial: n + k > 60 loses integrality of the binomials");
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l)
        c[static_cast<std::size_t>(l)] = detail::binomial(n + k, l + k);
    return ComplexPoly(std::move(c));
}

/// max coefficient of d^k/dw^k[w^k g_{n;k}] - (n+1)...(n+k)(1+w)^n, scaled.
inline double g_derivative_identity_residual(int n, int k)
{
    const ComplexPoly g = g_polynomial(n, k);
    const double scale = detail::rising_from(n, k);
    const ComplexPoly lhs = derivative(ComplexPoly::monomial(k) * g, k);
    std::vector<Complex> rhs(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l)
        rhs[static_cast<std::size_t>(l)] = scale * detail::binomial(n, l);
    return (lhs - ComplexPoly(std::move(rhs))).max_abs_coeff() / scale;
}

namespace detail {

/// Terminating 2F1(-n, 1; k+1; z) = sum_j (-n)_j / (k+1)_j z^j.
inline Complex hyp2f1_terminating(int n, int k, Complex z)
{
    Complex sum = 1.0;
    Complex term = 1.0;
    for (int j = 0; j < n; ++j) {
        // term_{j+1} / term_j = (-n + j)(1 + j) / ((k + 1 + j)(1 + j)) * z
        term *= static_cast<double>(j - n) / static_cast<double>(k + 1 + j) * z;
        sum += term;
    }
    return sum;
}

/// Generalized binomial C(a, s) for real a.
inline double general_binomial(double a, int s)
{
    double c = 1.0;
    // Multiply before dividing: for integer a every step stays an exact integer.
    for (int i = 0; i < s; ++i)
        c = c * (a - i) / (i + 1);
    return c;
}

/// P_n^{(alpha, beta)}(x) = sum_s C(n+alpha, n-s) C(n+beta, s)
///                          ((x-1)/2)^s ((x+1)/2)^{n-s}
inline Complex jacobi_explicit(int n, double alpha, double beta, Complex x)
{
    const Complex xm = (x - 1.0) / 2.0;
    const Complex xp = (x + 1.0) / 2.0;
    Complex sum{};
    for (int s = 0; s <= n; ++s)
        sum += general_binomial(n + alpha, n - s) * general_binomial(n + beta, s) *
               std::pow(xm, s) * std::pow(xp, n - s);
    return sum;
}

/// Both sides of the Jacobi identity at s in double-double; the sum over s
/// in the explicit Jacobi form cancels heavily once beta = -k-n.
inline ComplexDD hyp2f1_terminating_dd(int n, int k, Complex z)
{
    ComplexDD sum = Complex(1.0);
    ComplexDD term = Complex(1.0);
    const ComplexDD zz = z;
    for (int j = 0; j < n; ++j) {
        term = term * zz * (DoubleDouble(static_cast<double>(j - n)) / DoubleDouble(static_cast<double>(k + 1 + j)));
        sum = sum + term;
    }
    return sum;
}

inline ComplexDD jacobi_identity_rhs_dd(int n, int k, Complex z)
{
    // x = 1 - 2z, so (x-1)/2 = -z and (x+1)/2 = 1 - z exactly.
    const ComplexDD xm = ComplexDD(-z);
    const ComplexDD xp = ComplexDD(Complex(1.0)) - ComplexDD(z);
    const double alpha = k, beta = -k - n;
    std::vector<ComplexDD> pm(static_cast<std::size_t>(n) + 1), pp(static_cast<std::size_t>(n) + 1);
    pm[0] = Complex(1.0);
    pp[0] = Complex(1.0);
    for (std::size_t s = 1; s <= static_cast<std::size_t>(n); ++s) {
        pm[s] = pm[s - 1] * xm;
        pp[s] = pp[s - 1] * xp;
    }
    ComplexDD sum = Complex{};
    for (int s = 0; s <= n; ++s) {
        // Both binomials are integers below 2^53 for n + k <= 30.
        const double c = general_binomial(n + alpha, n - s) * general_binomial(n + beta, s);
        sum = sum + pm[static_cast<std::size_t>(s)] * pp[static_cast<std::size_t>(n - s)] * DoubleDouble(c);
    }
    DoubleDouble prefactor = 1.0;
    for (int i = 1; i <= n; ++i)
        prefactor = prefactor * (DoubleDouble(static_cast<double>(i)) / DoubleDouble(static_cast<double>(k + i)));
    return sum * prefactor;
}

} // namespace detail

/// max_s |2F1(-n,1;k+1;s) - n!/((k+1)...(k+n)) P_n^{(k,-k-n)}(1-2s)|
inline double jacobi_identity_residual(int n, int k, std::span<const Complex> samples)
{
    detail::require(n >= 0 && k >= 0, "jacobi_identity_residual: n, k must be nonnegative");
    detail::require(n + k <= 30, "jacobi_identity_residual: n + k must be at most 30");
    double r = 0.0;
    for (const Complex& z : samples) {
        const detail::ComplexDD diff =
            detail::hyp2f1_terminating_dd(n, k, z) - detail::jacobi_identity_rhs_dd(n, k, z);
        r = std::max(r, std::abs(diff.to_complex()));
    }
    return r;
}

/// c_l = a_l b_l C(n, l) for the binomial-normal-form coefficients a_l, b_l.
inline ComplexPoly grace_composition(std::span<const Complex> a, std::span<const Complex> b)
{
    detail::require(a.size() == b.size(), "grace_composition: coefficient lists differ in length");
    detail::require(!a.empty(), "grace_composition: empty coefficient list");
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<Complex> c(a.size());
    for (int l = 0; l <= n; ++l)
        c[static_cast<std::size_t>(l)] =
            a[static_cast<std::size_t>(l)] * b[static_cast<std::size_t>(l)] * detail::binomial(n, l);
    return ComplexPoly(std::move(c));
}

} // namespace polarzeros

#endif
