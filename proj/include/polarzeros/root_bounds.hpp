#ifndef POLARZEROS_ROOT_BOUNDS_HPP
#define POLARZEROS_ROOT_BOUNDS_HPP

#include <algorithm>
#include <cmath>

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/errors.hpp"

namespace polarzeros {

/// Cauchy: every zero satisfies |z| <= 1 + max_{j<n} |a_j| / |a_n|.
inline double cauchy_bound(const ComplexPoly& p)
{
    detail::require(p.degree() >= 1, "cauchy_bound: degree must be at least one");
    const auto c = p.coeffs();
    double a = 0.0;
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
        a = std::max(a, std::abs(c[j]));
    return 1.0 + a / std::abs(c.back());
}

/// Fujiwara: every zero satisfies |z| <= 2 max_j |a_{n-j} / a_n|^{1/j}
/// (the j = n term uses |a_0 / (2 a_n)|).
inline double fujiwara_bound(const ComplexPoly& p)
{
    detail::require(p.degree() >= 1, "fujiwara_bound: degree must be at least one");
    const auto c = p.coeffs();
    const int n = p.degree();
    const double lead = std::abs(c.back());
    double m = 0.0;
    for (int j = 1; j <= n; ++j) {
        double ratio = std::abs(c[static_cast<std::size_t>(n - j)]) / lead;
        if (j == n)
            ratio *= 0.5;
        m = std::max(m, std::pow(ratio, 1.0 / j));
    }
    return 2.0 * m;
}

} // namespace polarzeros

#endif
