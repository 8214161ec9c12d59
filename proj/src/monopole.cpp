#include "monocs/monopole.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "node_parallel.hpp"

namespace monocs {

namespace {

void check_index(const SpinLevel& lv, int j, const char* who) {
    if (j < lv.j_min() || j > lv.j_max())
        throw std::out_of_range(std::string(who) + ": section index outside level");
}

}  // namespace

SpinLevel make_level(int two_nu, int m) {
    if (two_nu < 1) throw std::invalid_argument("make_level: 2nu must be a positive integer");
    if (m < 0) throw std::invalid_argument("make_level: m must be non-negative");
    return SpinLevel{two_nu, m};
}

double landau_level(const SpinLevel& lv) {
    return (2 * lv.m + 1) * lv.nu() + static_cast<double>(lv.m) * (lv.m + 1);
}

Rational basis_norm_sq(const SpinLevel& lv, int j) {
    check_index(lv, j, "basis_norm_sq");
    Rational g = Rational(lv.dim()) * factorial(lv.two_nu + lv.m) * factorial(lv.m);
    return g / (factorial(lv.m + j) * factorial(lv.two_nu + lv.m - j));
}

double basis_norm_const(const SpinLevel& lv, int j) {
    check_index(lv, j, "basis_norm_const");
    if (lv.two_nu + lv.m > 60) {
        double ln = std::log(static_cast<double>(lv.dim())) + log_gamma(lv.two_nu + lv.m + 1.0) +
                    log_gamma(lv.m + 1.0) - log_gamma(lv.m + j + 1.0) -
                    log_gamma(lv.two_nu + lv.m - j + 1.0);
        return std::exp(0.5 * ln);
    }
    return std::sqrt(to_double(basis_norm_sq(lv, j)));
}

Complex monopole_harmonic(const SpinLevel& lv, int j, Complex z) {
    check_index(lv, j, "monopole_harmonic");
    double zz = std::norm(z);
    if (std::abs(z) > 1e8)
        throw std::domain_error("monopole_harmonic: point belongs to the opposite chart");
    double s = 1.0 + zz;
    double t = (1.0 - zz) / s;
    double g = basis_norm_const(lv, j);
    if (j >= 0) {
        double p = jacobi<double>(lv.m, j, lv.two_nu - j, t);
        return g * std::pow(s, -lv.nu()) * pow_int<Complex>(z, j) * p;
    }
    // j = -l: pull the factor ((t-1)/2)^l = (-zz~/(1+zz~))^l out of the reduced
    // Jacobi polynomial and absorb z^{-l}, leaving a form regular at z = 0.
    int l = -j;
    double c = 1.0;
    for (int i = 0; i < l; ++i) c *= lv.m + lv.two_nu + l - i;
    for (int i = lv.m - l + 1; i <= lv.m; ++i) c /= i;
    double p = jacobi<double>(lv.m - l, l, lv.two_nu + l, t);
    return g * std::pow(s, -(lv.nu() + l)) * pow_int<Complex>(-std::conj(z), l) * c * p;
}

double q_polynomial(const SpinLevel& lv, int j, double u) {
    check_index(lv, j, "q_polynomial");
    if (j < 0) throw std::out_of_range("q_polynomial: requires j >= 0");
    double pre = pochhammer<double>(j + 1, lv.m);
    return pre * hyp2f1_terminating<double>(lv.m, lv.two_nu + lv.m + 1, j + 1, u);
}

Rational q_polynomial_exact(const SpinLevel& lv, int j, const Rational& u) {
    check_index(lv, j, "q_polynomial_exact");
    if (j < 0) throw std::out_of_range("q_polynomial_exact: requires j >= 0");
    Rational pre = pochhammer<Rational>(Rational(j + 1), lv.m);
    return pre * hyp2f1_terminating<Rational>(lv.m, Rational(lv.two_nu + lv.m + 1),
                                              Rational(j + 1), u);
}

Rational harmonic_bare(const SpinLevel& lv, int j, const Rational& z) {
    check_index(lv, j, "harmonic_bare");
    if (j < 0 && z == 0)
        throw std::domain_error("harmonic_bare: z = 0 not in the domain for negative j");
    Rational z2 = z * z;
    Rational t = (1 - z2) / (1 + z2);
    Rational p = jacobi<Rational>(lv.m, Rational(j), Rational(lv.two_nu - j), t);
    return pow_int<Rational>(z, j) * p;
}

Complex apply_hamiltonian_fd(const SpinLevel& lv, int j, Complex z, double step) {
    if (!(step > 0)) throw std::domain_error("apply_hamiltonian_fd: step must be positive");
    check_index(lv, j, "apply_hamiltonian_fd");
    const Complex ih(0.0, step);
    Complex f0 = monopole_harmonic(lv, j, z);
    Complex fpx = monopole_harmonic(lv, j, z + step);
    Complex fmx = monopole_harmonic(lv, j, z - step);
    Complex fpy = monopole_harmonic(lv, j, z + ih);
    Complex fmy = monopole_harmonic(lv, j, z - ih);
    Complex lap = (fpx + fmx + fpy + fmy - 4.0 * f0) / (step * step);
    Complex fx = (fpx - fmx) / (2.0 * step);
    Complex fy = (fpy - fmy) / (2.0 * step);
    Complex fz = 0.5 * Complex(fx.real() + fy.imag(), fx.imag() - fy.real());
    Complex fzb = 0.5 * Complex(fx.real() - fy.imag(), fx.imag() + fy.real());
    double zz = std::norm(z);
    double s = 1.0 + zz;
    double nu = lv.nu();
    return -(s * s) * (lap / 4.0) - nu * z * s * fz + nu * std::conj(z) * s * fzb +
           nu * nu * zz * f0;
}

Complex apply_hamiltonian_fd_extrapolated(const SpinLevel& lv, int j, Complex z, double step) {
    Complex coarse = apply_hamiltonian_fd(lv, j, z, step);
    Complex fine = apply_hamiltonian_fd(lv, j, z, step / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

namespace detail {

void require_rule_for(const SpinLevel& lv, const QuadratureRule& rule) {
    int deg = lv.quanta();
    if (rule.angular_exact_freq() < deg)
        throw std::invalid_argument(
            "quadrature rule undersized: angular count below level bandwidth");
    if (rule.radial_exact_degree() < deg)
        throw std::invalid_argument(
            "quadrature rule undersized: radial degree below level bandwidth");
}

}  // namespace detail

Eigen::MatrixXcd basis_gram(const SpinLevel& lv, const QuadratureRule& rule) {
    detail::require_rule_for(lv, rule);
    const int n = lv.dim();
    const int nr = rule.radial_count();
    const int na = rule.angular_count;
    std::vector<Eigen::MatrixXcd> slot(nr);
    detail::for_each_index(nr, [&](int i) {
        double t = rule.radial_nodes[i];
        double r = std::sqrt(t / (1.0 - t));
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
        std::vector<Complex> phi(n);
        for (int a = 0; a < na; ++a) {
            double theta = 2.0 * std::numbers::pi * a / na;
            Complex z = std::polar(r, theta);
            for (int q = 0; q < n; ++q) phi[q] = monopole_harmonic(lv, lv.j_min() + q, z);
            for (int row = 0; row < n; ++row)
                for (int col = 0; col < n; ++col) acc(row, col) += std::conj(phi[row]) * phi[col];
        }
        slot[i] = (rule.radial_weights[i] / na) * acc;
    });
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < nr; ++i) g += slot[i];
    return g;
}

}  // namespace monocs
