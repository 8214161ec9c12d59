#include "monocs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "monocs/monopole.hpp"

namespace monocs {

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: need at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based seed, then Newton on P_n(x) over [-1, 1].
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // Map from [-1, 1] to [0, 1]; weight 2/((1-x^2) P_n'(x)^2) picks up 1/2.
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

QuadratureRule make_quadrature(int angular_count, int radial_count) {
    if (angular_count < 1) throw std::invalid_argument("make_quadrature: angular_count must be positive");
    if (radial_count < 1) throw std::invalid_argument("make_quadrature: radial_count must be positive");
    QuadratureRule rule;
    rule.angular_count = angular_count;
    gauss_legendre_01(radial_count, rule.radial_nodes, rule.radial_weights);
    return rule;
}

QuadratureRule make_quadrature(const SpinLevel& lv) {
    int n = lv.quanta();
    return make_quadrature(2 * n + 1, n + 4);
}

}  // namespace monocs
