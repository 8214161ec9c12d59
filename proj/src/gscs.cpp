#include "monocs/gscs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "node_parallel.hpp"

namespace monocs {

int normalization_factor(const SpinLevel& lv) { return lv.quanta() + 1; }

StateVector scs_coefficients(int two_nu, Complex z) {
    SpinLevel lv = make_level(two_nu, 0);
    if (std::abs(z) > 1e8)
        throw std::domain_error("scs_coefficients: point belongs to the opposite chart");
    double envelope = std::pow(1.0 + std::norm(z), -lv.nu());
    StateVector st{lv, std::vector<Complex>(lv.dim())};
    Complex zp = 1.0;
    for (int k = 0; k <= two_nu; ++k) {
        st.a[k] = envelope * std::sqrt(binomial_coeff<double>(two_nu, k)) * zp;
        zp *= z;
    }
    return st;
}

StateVector gscs_coefficients(const SpinLevel& lv, Complex z) {
    double scale = 1.0 / std::sqrt(static_cast<double>(normalization_factor(lv)));
    StateVector st{lv, std::vector<Complex>(lv.dim())};
    for (int q = 0; q < lv.dim(); ++q)
        st.a[q] = scale * std::conj(monopole_harmonic(lv, lv.j_min() + q, z));
    return st;
}

Complex state_dot(const StateVector& x, const StateVector& y) {
    if (x.level.two_nu != y.level.two_nu || x.level.m != y.level.m ||
        x.a.size() != y.a.size())
        throw std::invalid_argument("state_dot: states live on different levels");
    Complex s = 0.0;
    for (size_t q = 0; q < x.a.size(); ++q) s += std::conj(x.a[q]) * y.a[q];
    return s;
}

Complex overlap_direct(const SpinLevel& lv, Complex z, Complex w) {
    Complex s = 0.0;
    for (int j = lv.j_min(); j <= lv.j_max(); ++j)
        s += monopole_harmonic(lv, j, z) * std::conj(monopole_harmonic(lv, j, w));
    return s / static_cast<double>(normalization_factor(lv));
}

Complex overlap_closed(const SpinLevel& lv, Complex z, Complex w) {
    double sz = 1.0 + std::norm(z);
    double sw = 1.0 + std::norm(w);
    Complex kernel = pow_int<Complex>(1.0 + z * std::conj(w), lv.two_nu);
    double rho2 = std::norm(z - w) / (sz * sw);
    double series = hyp2f1_terminating<double>(lv.m, lv.two_nu + lv.m + 1.0, 1.0, rho2);
    return kernel * std::pow(sz * sw, -lv.nu()) * series;
}

namespace {

// z^j P_m^{(j,2nu-j)}(t) extended by continuity to z = 0.
Rational bare_section(const SpinLevel& lv, int j, const Rational& z) {
    if (z == 0) return j == 0 ? Rational(1) : Rational(0);
    return harmonic_bare(lv, j, z);
}

}  // namespace

Rational overlap_direct_cleared(const SpinLevel& lv, const Rational& z, const Rational& w) {
    Rational s(0);
    for (int j = lv.j_min(); j <= lv.j_max(); ++j)
        s += basis_norm_sq(lv, j) * bare_section(lv, j, z) * bare_section(lv, j, w);
    return s;
}

Rational overlap_closed_cleared(const SpinLevel& lv, const Rational& z, const Rational& w) {
    Rational sz = 1 + z * z;
    Rational sw = 1 + w * w;
    Rational kernel = pow_int<Rational>(Rational(1 + z * w), lv.two_nu);
    Rational rho2 = (z - w) * (z - w) / (sz * sw);
    Rational series = hyp2f1_terminating<Rational>(lv.m, Rational(lv.two_nu + lv.m + 1),
                                                   Rational(1), rho2);
    return Rational(normalization_factor(lv)) * kernel * series;
}

double cs_distance(const SpinLevel& lv, Complex z, Complex w) {
    double r = 2.0 - 2.0 * overlap_closed(lv, z, w).real();
    return std::sqrt(std::max(r, 0.0));
}

double identity_resolution_residual(const SpinLevel& lv, const QuadratureRule& rule,
                                    double measure_scale) {
    detail::require_rule_for(lv, rule);
    const int n = lv.dim();
    const int nr = rule.radial_count();
    const int na = rule.angular_count;
    const double factor = normalization_factor(lv) * measure_scale;
    std::vector<Eigen::MatrixXcd> slot(nr);
    detail::for_each_index(nr, [&](int i) {
        double t = rule.radial_nodes[i];
        double u = t / (1.0 - t);
        // radial weight dmu/dt through the G-function kernel
        double wt = rule.radial_weights[i] * meijer_g1111(u, -1.0, 0.0) /
                    ((1.0 - t) * (1.0 - t));
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
        double r = std::sqrt(u);
        for (int a = 0; a < na; ++a) {
            StateVector st = gscs_coefficients(lv, std::polar(r, 2.0 * std::numbers::pi * a / na));
            for (int row = 0; row < n; ++row)
                for (int col = 0; col < n; ++col)
                    acc(row, col) += st.a[row] * std::conj(st.a[col]);
        }
        slot[i] = (factor * wt / na) * acc;
    });
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < nr; ++i) total += slot[i];
    double worst = 0.0;
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            double want = (row == col) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(total(row, col) - want));
        }
    return worst;
}

double husimi(const StateVector& psi, Complex z) {
    return std::norm(state_dot(gscs_coefficients(psi.level, z), psi));
}

double glauber_contraction_error(int two_nu, Complex zeta) {
    if (std::norm(zeta) >= two_nu)
        throw std::domain_error("glauber_contraction_error: |zeta|^2 must stay below 2nu");
    StateVector spin = scs_coefficients(two_nu, zeta / std::sqrt(static_cast<double>(two_nu)));
    double worst = 0.0;
    Complex flat = std::exp(-0.5 * std::norm(zeta));
    for (int k = 0; k <= std::min(two_nu, 20); ++k) {
        worst = std::max(worst, std::abs(spin.a[k] - flat));
        flat *= zeta / std::sqrt(k + 1.0);
    }
    return worst;
}

}  // namespace monocs
