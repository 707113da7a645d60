#ifndef POLARZEROS_DETAIL_DOUBLE_DOUBLE_HPP
#define POLARZEROS_DETAIL_DOUBLE_DOUBLE_HPP

// Unevaluated-sum (hi + lo) arithmetic, roughly 106 bits of significand.
// Only what the shift and evaluation kernels need: add, multiply, and
// division by a double. Relies on std::fma being exact (IEEE 754).

#include <cmath>
#include <complex>

namespace polarzeros::detail {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b)
{
    DoubleDouble s = two_sum(a.hi, b.hi);
    DoubleDouble t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b)
{
    DoubleDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b)
{
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi / b.hi;
    return quick_two_sum(q1, q2) + DoubleDouble(q3);
}

/// Complex number with double-double parts.
struct ComplexDD {
    DoubleDouble re;
    DoubleDouble im;

    constexpr ComplexDD() = default;
    ComplexDD(std::complex<double> z) : re(z.real()), im(z.imag()) {}
    ComplexDD(DoubleDouble r, DoubleDouble i) : re(r), im(i) {}

    std::complex<double> to_complex() const
    {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

inline ComplexDD operator+(const ComplexDD& a, const ComplexDD& b)
{
    return {a.re + b.re, a.im + b.im};
}

inline ComplexDD operator-(const ComplexDD& a, const ComplexDD& b)
{
    return {a.re - b.re, a.im - b.im};
}

inline ComplexDD operator*(const ComplexDD& a, const ComplexDD& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexDD operator*(const ComplexDD& a, DoubleDouble s)
{
    return {a.re * s, a.im * s};
}

} // namespace polarzeros::detail

#endif
