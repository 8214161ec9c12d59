#pragma once

#include <Eigen/Dense>

#include "monocs/specfun.hpp"

namespace monocs {

// Finite oscillator over the binomial measure: N+1 grid points y = 0..N with
// success weight p, positions x_j = j - Np, natural length h = sqrt(2Npq).
struct KravchukModel {
    int n = 1;
    Rational p;

    Rational q() const { return 1 - p; }
    Rational grid_x_exact(int j) const { return Rational(j) - p * n; }
    double grid_x(int j) const { return to_double(grid_x_exact(j)); }
    double step() const { return std::sqrt(2.0 * n * to_double(p * q())); }
};

// Validates n >= 1 and 0 < p < 1.
KravchukModel make_model(int n, const Rational& p);

// K_k(x) = (-1)^k p^k C(N,k) 2F1(-k, -x; -N; 1/p), the degree-k polynomial
// orthogonal under the binomial weight; its argument is the count variable
// (K_1(x) = x - Np). Exact overload is the production route for grid work:
// the floating recurrence overload loses all precision at large k and N (the
// orthonormal-unit error reaches 1e24 by N = 64) and is meant for small
// degrees at off-grid points.
Rational kravchuk_poly(const KravchukModel& md, int k, const Rational& x);
double kravchuk_poly(const KravchukModel& md, int k, double x);

// rho(y) = C(N,y) p^y q^{N-y}.
Rational binomial_weight(const KravchukModel& md, int y);
// Gamma-interpolated weight for real y in [0, N].
double binomial_weight_continuous(const KravchukModel& md, double y);

// d_k^2 = C(N,k) (pq)^k.
Rational kravchuk_norm_sq(const KravchukModel& md, int k);

// sum_y rho(y) K_k(y) K_l(y); equals d_k^2 when k = l and 0 otherwise.
Rational poly_orthogonality_sum(const KravchukModel& md, int k, int l);

// (x - k - p(N-2k)) K_k(x) - (k+1) K_{k+1}(x) - pq(N-k+1) K_{k-1}(x),
// identically zero; 0 <= k <= N-1.
Rational recurrence_residual(const KravchukModel& md, int k, const Rational& x);
double recurrence_residual(const KravchukModel& md, int k, double x);

// Orthonormal oscillator function of the centered position,
//   phi_k(x) = K_k(x+Np) sqrt(k!(N-k)! p^{Np+x} q^{Nq-x}
//                              / (p^k q^k G(Np+x+1) G(Nq-x+1))),
// defined for x in [-Np, Nq]. The grid form pins each value to the exact
// polynomial and weight before a single rounding.
double kravchuk_function(const KravchukModel& md, int k, double x);
double kravchuk_function_grid(const KravchukModel& md, int k, int j);

// Symmetric tridiagonal number operator (+1/2) acting on grid amplitudes:
// diagonal 2pqN + 1/2 + (1-2p) x_j, off-diagonal -sqrt(pq (N-j)(j+1)).
Eigen::MatrixXd oscillator_matrix(const KravchukModel& md);

// Eigenvalues of the matrix above, ascending; equals {k + 1/2}.
Eigen::VectorXd oscillator_spectrum(const KravchukModel& md);

// Worst entry of M phi_k - (k+1/2) phi_k over all k, with phi_k assembled
// from the exact-backed grid functions.
double eigen_residual(const KravchukModel& md);

// Exact certificate of the same eigen-equation in the polynomial picture:
//   D_j K_k(j) - p(N-j) K_k(j+1) - q j K_k(j-1) - (k+1/2) K_k(j) == 0.
Rational eigen_identity_residual_exact(const KravchukModel& md, int k, int j);

// |psi_k(xi) - sqrt(h) phi_k(h xi)| against the Hermite function
// psi_k(xi) = e^{-xi^2/2} H_k(xi) / sqrt(2^k k! sqrt(pi)); the gap closes
// like 1/N.
double hermite_limit_error(const KravchukModel& md, int k, double xi);

// Max-norm of [M, [M, X]] - X with X = diag(x_j); zero exactly at p = 1/2.
double double_commutator_residual(const KravchukModel& md);

}  // namespace monocs
