#ifndef POLARZEROS_COMPLEX_POLY_HPP
#define POLARZEROS_COMPLEX_POLY_HPP

/**
 * @file complex_poly.hpp
 * @brief Dense polynomials over std::complex<double> in the monomial basis.
 *
 * Coefficients are stored in ascending powers: coeffs()[l] multiplies z^l.
 * Construction trims trailing coefficients whose magnitude is at most
 * 1e-14 times the largest one, so degree() is always well defined; the
 * identically zero polynomial is stored as the single coefficient 0.
 * ComplexPoly::monic and ComplexPoly::exact skip the relative trim for
 * results whose leading coefficient is known exactly.
 *
 * Besides the usual ring operations the header provides the operations the
 * polar construction is built from: change of center (taylor_shift /
 * from_centered), antidifferentiation anchored at a point, exact division
 * by (z - xi), and the conjugate reversal p -> z^n conj(p(1/conj z)).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "polarzeros/detail/double_double.hpp"
#include "polarzeros/errors.hpp"

namespace polarzeros {

using Complex = std::complex<double>;

/// Relative magnitude below which trailing coefficients are dropped.
inline constexpr double kTrimTolerance = 1e-14;

class ComplexPoly {
public:
    /// The zero polynomial.
    ComplexPoly() : coeffs_{Complex{0.0, 0.0}} {}

    explicit ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    ComplexPoly(std::initializer_list<Complex> coeffs)
        : ComplexPoly(std::vector<Complex>(coeffs))
    {
    }

    static ComplexPoly constant(Complex c) { return ComplexPoly(std::vector<Complex>{c}); }

    /// Monic polynomial from coefficients whose last entry is within 1e-12 of 1.
    /// The leading term is set to exactly 1 and nothing is trimmed, however
    /// large the lower coefficients are.
    static ComplexPoly monic(std::vector<Complex> coeffs)
    {
        detail::require(!coeffs.empty() && std::abs(coeffs.back() - 1.0) <= 1e-12,
                        "monic: leading coefficient must be 1");
        coeffs.back() = 1.0;
        return exact(std::move(coeffs));
    }

    /// Drops only exactly-zero trailing coefficients. For results whose
    /// leading term is computed exactly (derivatives, antiderivatives,
    /// synthetic-division quotients), where the relative trim would discard
    /// a genuine top coefficient next to very large low-order ones.
    static ComplexPoly exact(std::vector<Complex> coeffs)
    {
        while (coeffs.size() > 1 && coeffs.back() == Complex{})
            coeffs.pop_back();
        if (coeffs.empty())
            coeffs.push_back(Complex{});
        ComplexPoly p;
        p.coeffs_ = std::move(coeffs);
        return p;
    }

    /// c * z^degree
    static ComplexPoly monomial(int degree, Complex c = 1.0)
    {
        detail::require(degree >= 0, "monomial degree must be nonnegative");
        std::vector<Complex> v(static_cast<std::size_t>(degree) + 1, Complex{});
        v.back() = c;
        return ComplexPoly(std::move(v));
    }

    std::span<const Complex> coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }
    Complex leading() const { return coeffs_.back(); }

    /// Coefficient of z^l; zero beyond the degree.
    Complex operator[](std::size_t l) const
    {
        return l < coeffs_.size() ? coeffs_[l] : Complex{};
    }

    double max_abs_coeff() const
    {
        double m = 0.0;
        for (const Complex& c : coeffs_)
            m = std::max(m, std::abs(c));
        return m;
    }

    friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

private:
    void trim()
    {
        if (coeffs_.empty()) {
            coeffs_.push_back(Complex{});
            return;
        }
        const double cutoff = kTrimTolerance * max_abs_coeff();
        while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= cutoff)
            coeffs_.pop_back();
        if (coeffs_.size() == 1 && std::abs(coeffs_[0]) <= cutoff)
            coeffs_[0] = Complex{};
    }

    std::vector<Complex> coeffs_;
};

/// Coefficients of a polynomial in powers of (z - center).
struct CenteredExpansion {
    Complex center;
    std::vector<Complex> coeffs;
};

// ---------------------------------------------------------------------------
// Extended-precision kernels

namespace detail {

/// In-place repeated synthetic division: on return c[l] is the coefficient
/// of w^l in p(w + shift). O(n^2).
inline void shift_in_place(std::vector<ComplexDD>& c, Complex shift)
{
    const ComplexDD s(shift);
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            c[j] = c[j] + s * c[j + 1];
}

inline std::vector<ComplexDD> taylor_shift_dd(std::span<const Complex> coeffs, Complex center)
{
    std::vector<ComplexDD> c(coeffs.begin(), coeffs.end());
    shift_in_place(c, center);
    return c;
}

inline std::vector<ComplexDD> from_centered_dd(std::vector<ComplexDD> centered, Complex center)
{
    shift_in_place(centered, -center);
    return centered;
}

inline std::vector<Complex> round_to_double(std::span<const ComplexDD> c)
{
    std::vector<Complex> out;
    out.reserve(c.size());
    for (const ComplexDD& x : c)
        out.push_back(x.to_complex());
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Evaluation and calculus

/// Horner's scheme.
inline Complex evaluate(const ComplexPoly& p, Complex z)
{
    const auto c = p.coeffs();
    Complex acc = c.back();
    for (std::size_t l = c.size() - 1; l-- > 0;)
        acc = acc * z + c[l];
    return acc;
}

inline ComplexPoly derivative(const ComplexPoly& p)
{
    const auto c = p.coeffs();
    if (c.size() == 1)
        return ComplexPoly();
    std::vector<Complex> d(c.size() - 1);
    for (std::size_t l = 1; l < c.size(); ++l)
        d[l - 1] = static_cast<double>(l) * c[l];
    return ComplexPoly::exact(std::move(d));
}

/// k-th derivative.
inline ComplexPoly derivative(const ComplexPoly& p, int k)
{
    detail::require(k >= 0, "derivative order must be nonnegative");
    ComplexPoly d = p;
    for (int i = 0; i < k; ++i)
        d = derivative(d);
    return d;
}

/// The antiderivative P with P(xi) = 0.
inline ComplexPoly antiderivative_from(const ComplexPoly& p, Complex xi)
{
    const auto c = p.coeffs();
    std::vector<Complex> a(c.size() + 1);
    for (std::size_t l = 0; l < c.size(); ++l)
        a[l + 1] = c[l] / static_cast<double>(l + 1);
    const ComplexPoly without_constant = ComplexPoly::exact(a);
    a[0] = -evaluate(without_constant, xi);
    return ComplexPoly::exact(std::move(a));
}

// ---------------------------------------------------------------------------
// Change of center

inline CenteredExpansion taylor_shift(const ComplexPoly& p, Complex center)
{
    return {center, detail::round_to_double(detail::taylor_shift_dd(p.coeffs(), center))};
}

inline ComplexPoly from_centered(const CenteredExpansion& e)
{
    if (e.coeffs.empty())
        return ComplexPoly();
    std::vector<detail::ComplexDD> c(e.coeffs.begin(), e.coeffs.end());
    return ComplexPoly(detail::round_to_double(detail::from_centered_dd(std::move(c), e.center)));
}

/// Value of a centered expansion at z = center + omega.
inline Complex evaluate(const CenteredExpansion& e, Complex omega)
{
    if (e.coeffs.empty())
        return {};
    Complex acc = e.coeffs.back();
    for (std::size_t l = e.coeffs.size() - 1; l-- > 0;)
        acc = acc * omega + e.coeffs[l];
    return acc;
}

// ---------------------------------------------------------------------------
// Reversal

/// z^n conj(p(1/conj z)): coefficient l of the result is conj(p[n - l]).
inline ComplexPoly reverse_star(const ComplexPoly& p, int n)
{
    detail::require(n >= p.degree(), "reverse_star: n must be at least the degree");
    std::vector<Complex> r(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l)
        r[static_cast<std::size_t>(l)] = std::conj(p[static_cast<std::size_t>(n - l)]);
    return ComplexPoly(std::move(r));
}

// ---------------------------------------------------------------------------
// Ring operations

inline ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b)
{
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Complex> c(n);
    for (std::size_t l = 0; l < n; ++l)
        c[l] = a[l] + b[l];
    return ComplexPoly(std::move(c));
}

inline ComplexPoly operator*(Complex s, const ComplexPoly& p)
{
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (Complex& x : c)
        x *= s;
    return ComplexPoly::exact(std::move(c));
}

inline ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b)
{
    return a + Complex{-1.0, 0.0} * b;
}

inline ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b)
{
    const auto x = a.coeffs();
    const auto y = b.coeffs();
    std::vector<Complex> c(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            c[i + j] += x[i] * y[j];
    return ComplexPoly::exact(std::move(c));
}

/// (z - xi)^k
inline ComplexPoly linear_power(Complex xi, int k)
{
    detail::require(k >= 0, "linear_power: exponent must be nonnegative");
    ComplexPoly result = ComplexPoly::constant(1.0);
    const ComplexPoly factor{-xi, Complex{1.0, 0.0}};
    for (int i = 0; i < k; ++i)
        result = result * factor;
    return result;
}

/// Largest coefficientwise difference |a_l - b_l|.
inline double max_coeff_difference(const ComplexPoly& a, const ComplexPoly& b)
{
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    double m = 0.0;
    for (std::size_t l = 0; l < n; ++l)
        m = std::max(m, std::abs(a[l] - b[l]));
    return m;
}

// ---------------------------------------------------------------------------
// Division

struct LinearDivision {
    ComplexPoly quotient;
    Complex remainder;
};

/// p(z) = (z - root) q(z) + r by synthetic division from the leading term.
inline LinearDivision divide_by_linear(const ComplexPoly& p, Complex root)
{
    const auto c = p.coeffs();
    if (c.size() == 1)
        return {ComplexPoly(), c[0]};
    std::vector<Complex> q(c.size() - 1);
    Complex acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        q[j] = acc;
        acc = c[j] + root * acc;
    }
    return {ComplexPoly::exact(std::move(q)), acc};
}

struct PolyDivision {
    ComplexPoly quotient;
    ComplexPoly remainder;
};

/// Schoolbook long division num = q * den + r with deg r < deg den.
inline PolyDivision divide(const ComplexPoly& num, const ComplexPoly& den)
{
    detail::require(!den.is_zero(), "divide: division by the zero polynomial");
    const int dn = den.degree();
    const int nn = num.degree();
    if (nn < dn)
        return {ComplexPoly(), num};
    std::vector<Complex> r(num.coeffs().begin(), num.coeffs().end());
    std::vector<Complex> q(static_cast<std::size_t>(nn - dn) + 1);
    const Complex lead = den.leading();
    for (int i = nn - dn; i >= 0; --i) {
        const Complex t = r[static_cast<std::size_t>(i + dn)] / lead;
        q[static_cast<std::size_t>(i)] = t;
        for (int j = 0; j <= dn; ++j)
            r[static_cast<std::size_t>(i + j)] -= t * den[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(std::max(dn, 1)));
    return {ComplexPoly(std::move(q)), ComplexPoly(std::move(r))};
}

} // namespace polarzeros

#endif
