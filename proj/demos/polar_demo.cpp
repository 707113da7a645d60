// Builds the degree-10 point-mass orthogonal polynomial, its 1-polar
// polynomial at xi = 4/3, and prints the zeros with the bound report.

#include <cstdio>

#include "polarzeros/polarzeros.hpp"

int main()
{
    using namespace polarzeros;

    const MeasureSpec mu = MeasureSpec::mass_point(2.0 / 3.0);
    const Complex xi = 4.0 / 3.0;
    const ComplexPoly L = build_family(mu, 10);
    const ComplexPoly Q = polar_polynomial(L, {xi, 1});

    const RootSet rs = find_roots(Q);
    std::printf("zeros of Q_{10;1}(z; 4/3):\n");
    for (const Complex& z : rs.roots)
        std::printf("  % .6f %+.6fi   |z| = %.6f\n", z.real(), z.imag(), std::abs(z));

    const BoundReport report = bound_report(Q, rs, xi, 1);
    std::printf("polar disk radius   %.6f (all inside: %s)\n", report.polar_disk_radius,
                report.all_inside_disk ? "yes" : "no");
    std::printf("ring                [%.3e, %.6f] (all inside: %s)\n", report.ring_inner, report.ring_outer,
                report.all_inside_ring ? "yes" : "no");
    std::printf("cauchy radius       %.6f\n", report.cauchy_radius);
    std::printf("nearest critical    %.6f at % .6f %+.6fi\n", report.sendov_max_distance,
                report.sendov_witness.real(), report.sendov_witness.imag());
    std::printf("farthest critical   %.6f at % .6f %+.6fi\n", report.sendov_max_farthest_distance,
                report.sendov_farthest_witness.real(), report.sendov_farthest_witness.imag());
    return 0;
}
