#pragma once

#include <vector>

namespace monocs {

struct SpinLevel;

// Product rule for integrals over the plane chart against the invariant
// measure: with t = zz~/(1+zz~) and z = r e^{i theta},
//   integral f(z) (1+zz~)^{-2} dx dy / pi = (2 pi)^{-1} int_0^{2pi} int_0^1 f dt dtheta.
// Angular part: uniform grid, exact for harmonics e^{i f theta}, 0 <= |f| < angular_count.
// Radial part: Gauss-Legendre on t in [0,1], exact through degree 2*count - 1.
struct QuadratureRule {
    int angular_count = 0;
    std::vector<double> radial_nodes;
    std::vector<double> radial_weights;

    int radial_count() const { return static_cast<int>(radial_nodes.size()); }
    int radial_exact_degree() const { return 2 * radial_count() - 1; }
    int angular_exact_freq() const { return angular_count - 1; }
};

QuadratureRule make_quadrature(int angular_count, int radial_count);

// Sized for everything assembled at this level: angular 2(2nu+2m)+1,
// radial (2nu+2m)+4 (integrand t-degree is at most 2nu+2m).
QuadratureRule make_quadrature(const SpinLevel& lv);

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace monocs
