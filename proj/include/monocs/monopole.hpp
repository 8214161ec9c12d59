#pragma once

#include <complex>

#include <Eigen/Dense>

#include "monocs/quadrature.hpp"
#include "monocs/specfun.hpp"

namespace monocs {

using Complex = std::complex<double>;

// One bound level of a charge-nu Dirac monopole field on the sphere,
// stereographically projected to the plane chart. The level with m radial
// quanta is (2nu + 2m + 1)-fold degenerate, spanned by sections indexed
// j = -m, ..., 2nu + m.
struct SpinLevel {
    int two_nu = 1;
    int m = 0;

    double nu() const { return 0.5 * two_nu; }
    int dim() const { return two_nu + 2 * m + 1; }
    int quanta() const { return two_nu + 2 * m; }
    int j_min() const { return -m; }
    int j_max() const { return two_nu + m; }
};

// Validates 2nu >= 1 and m >= 0.
SpinLevel make_level(int two_nu, int m);

// Energy of the level: (2m+1) nu + m (m+1).
double landau_level(const SpinLevel& lv);

// Norm constant gamma_j with
//   gamma_j^2 = (2nu+2m+1) (2nu+m)! m! / ((m+j)! (2nu+m-j)!).
double basis_norm_const(const SpinLevel& lv, int j);
Rational basis_norm_sq(const SpinLevel& lv, int j);

// Section value at a chart point:
//   gamma_j (1+zz~)^{-nu} z^j P_m^{(j, 2nu-j)}((1-zz~)/(1+zz~)).
// Negative j is evaluated through the reduced Jacobi polynomial of order
// m+j >= 0; the section vanishes at z = 0 for every j != 0. Points with
// |z| > 1e8 belong to the opposite chart and are rejected.
Complex monopole_harmonic(const SpinLevel& lv, int j, Complex z);

// Radial factor in the variable u = zz~/(1+zz~), for j >= 0:
//   Q_j(u) = ((m+j)!/j!) 2F1(-m, 2nu+m+1; j+1; u).
// Equals m! P_m^{(j, 2nu-j)}(1-2u) up to the same polynomial in disguise.
double q_polynomial(const SpinLevel& lv, int j, double u);
Rational q_polynomial_exact(const SpinLevel& lv, int j, const Rational& u);

// Exact carrier of the section along the real axis: z^j P_m^{(j, 2nu-j)}(t)
// with t = (1-z^2)/(1+z^2), i.e. the harmonic with gamma_j and the
// (1+z^2)^{-nu} envelope stripped. Requires z != 0 when j < 0.
Rational harmonic_bare(const SpinLevel& lv, int j, const Rational& z);

// Hamiltonian applied by second-order central differences on the 5-point
// cross {z, z+-h, z+-ih}:
//   (H f)(z) = -(1+zz~)^2 f_zz~ - nu z (1+zz~) f_z + nu z~ (1+zz~) f_z~ + nu^2 zz~ f.
Complex apply_hamiltonian_fd(const SpinLevel& lv, int j, Complex z, double step = 1e-3);

// Same stencil at steps h and h/2 combined to cancel the h^2 error term.
Complex apply_hamiltonian_fd_extrapolated(const SpinLevel& lv, int j, Complex z,
                                          double step = 1e-3);

// Gram matrix of the level under the invariant measure; the identity matrix
// up to quadrature error. The rule must satisfy the sizing of
// make_quadrature(lv).
Eigen::MatrixXcd basis_gram(const SpinLevel& lv, const QuadratureRule& rule);

namespace detail {
// Throws if the rule cannot integrate degree-quanta() products exactly.
void require_rule_for(const SpinLevel& lv, const QuadratureRule& rule);
}  // namespace detail

}  // namespace monocs
