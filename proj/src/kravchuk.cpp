#include "monocs/kravchuk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monocs {

namespace {

void check_degree(const KravchukModel& md, int k, const char* who) {
    if (k < 0 || k > md.n)
        throw std::out_of_range(std::string(who) + ": degree outside [0, N]");
}

void check_site(const KravchukModel& md, int j, const char* who) {
    if (j < 0 || j > md.n)
        throw std::out_of_range(std::string(who) + ": grid site outside [0, N]");
}

}  // namespace

KravchukModel make_model(int n, const Rational& p) {
    if (n < 1) throw std::invalid_argument("make_model: need at least a two-point grid");
    if (p <= 0 || p >= 1) throw std::invalid_argument("make_model: p must lie strictly in (0,1)");
    return KravchukModel{n, p};
}

Rational kravchuk_poly(const KravchukModel& md, int k, const Rational& x) {
    check_degree(md, k, "kravchuk_poly");
    Rational series =
        hyp2f1_terminating<Rational>(k, Rational(-x), Rational(-md.n), Rational(1 / md.p));
    Rational sign = (k % 2 == 0) ? 1 : -1;
    return sign * pow_int<Rational>(md.p, k) * binomial_coeff<Rational>(Rational(md.n), k) *
           series;
}

double kravchuk_poly(const KravchukModel& md, int k, double x) {
    check_degree(md, k, "kravchuk_poly");
    double p = to_double(md.p);
    double q = 1.0 - p;
    double prev = 0.0, cur = 1.0;
    for (int kk = 0; kk < k; ++kk) {
        double next =
            ((x - md.n * p - kk * (1.0 - 2.0 * p)) * cur - p * q * (md.n - kk + 1) * prev) /
            (kk + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational binomial_weight(const KravchukModel& md, int y) {
    check_site(md, y, "binomial_weight");
    return binomial_coeff<Rational>(Rational(md.n), y) * pow_int<Rational>(md.p, y) *
           pow_int<Rational>(md.q(), md.n - y);
}

double binomial_weight_continuous(const KravchukModel& md, double y) {
    if (y < 0 || y > md.n)
        throw std::domain_error("binomial_weight_continuous: y outside [0, N]");
    double p = to_double(md.p);
    double q = 1.0 - p;
    double ln = log_gamma(md.n + 1.0) - log_gamma(y + 1.0) - log_gamma(md.n - y + 1.0) +
                y * std::log(p) + (md.n - y) * std::log(q);
    return std::exp(ln);
}

Rational kravchuk_norm_sq(const KravchukModel& md, int k) {
    check_degree(md, k, "kravchuk_norm_sq");
    return binomial_coeff<Rational>(Rational(md.n), k) * pow_int<Rational>(md.p * md.q(), k);
}

Rational poly_orthogonality_sum(const KravchukModel& md, int k, int l) {
    check_degree(md, k, "poly_orthogonality_sum");
    check_degree(md, l, "poly_orthogonality_sum");
    Rational s(0);
    for (int y = 0; y <= md.n; ++y)
        s += binomial_weight(md, y) * kravchuk_poly(md, k, Rational(y)) *
             kravchuk_poly(md, l, Rational(y));
    return s;
}

Rational recurrence_residual(const KravchukModel& md, int k, const Rational& x) {
    if (k < 0 || k >= md.n)
        throw std::out_of_range("recurrence_residual: needs 0 <= k <= N-1");
    Rational mid = (x - k - md.p * (md.n - 2 * k)) * kravchuk_poly(md, k, x);
    Rational up = Rational(k + 1) * kravchuk_poly(md, k + 1, x);
    Rational down = k == 0 ? Rational(0)
                           : md.p * md.q() * (md.n - k + 1) * kravchuk_poly(md, k - 1, x);
    return mid - up - down;
}

double recurrence_residual(const KravchukModel& md, int k, double x) {
    if (k < 0 || k >= md.n)
        throw std::out_of_range("recurrence_residual: needs 0 <= k <= N-1");
    double p = to_double(md.p);
    double q = 1.0 - p;
    double mid = (x - k - p * (md.n - 2 * k)) * kravchuk_poly(md, k, x);
    double up = (k + 1) * kravchuk_poly(md, k + 1, x);
    double down = k == 0 ? 0.0 : p * q * (md.n - k + 1) * kravchuk_poly(md, k - 1, x);
    return mid - up - down;
}

double kravchuk_function(const KravchukModel& md, int k, double x) {
    check_degree(md, k, "kravchuk_function");
    double p = to_double(md.p);
    double q = 1.0 - p;
    double np = md.n * p;
    double nq = md.n * q;
    if (x < -np || x > nq)
        throw std::domain_error("kravchuk_function: position outside [-Np, Nq]");
    double ln = log_gamma(k + 1.0) + log_gamma(md.n - k + 1.0) + (np + x) * std::log(p) +
                (nq - x) * std::log(q) - k * std::log(p * q) - log_gamma(np + x + 1.0) -
                log_gamma(nq - x + 1.0);
    return kravchuk_poly(md, k, x + np) * std::exp(0.5 * ln);
}

double kravchuk_function_grid(const KravchukModel& md, int k, int j) {
    check_degree(md, k, "kravchuk_function_grid");
    check_site(md, j, "kravchuk_function_grid");
    double poly = to_double(kravchuk_poly(md, k, Rational(j)));
    double scale = to_double(binomial_weight(md, j) / kravchuk_norm_sq(md, k));
    return poly * std::sqrt(scale);
}

Eigen::MatrixXd oscillator_matrix(const KravchukModel& md) {
    int dim = md.n + 1;
    double p = to_double(md.p);
    double q = 1.0 - p;
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
        mat(j, j) = to_double(2 * md.p * md.q() * md.n + ratio(1, 2) +
                              (1 - 2 * md.p) * md.grid_x_exact(j));
        if (j + 1 < dim) {
            double off = -std::sqrt(p * q * (md.n - j) * (j + 1.0));
            mat(j, j + 1) = off;
            mat(j + 1, j) = off;
        }
    }
    return mat;
}

Eigen::VectorXd oscillator_spectrum(const KravchukModel& md) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(oscillator_matrix(md));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oscillator_spectrum: eigenvalue iteration failed");
    return solver.eigenvalues();
}

double eigen_residual(const KravchukModel& md) {
    int dim = md.n + 1;
    Eigen::MatrixXd mat = oscillator_matrix(md);
    double worst = 0.0;
    Eigen::VectorXd vec(dim);
    for (int k = 0; k <= md.n; ++k) {
        for (int j = 0; j < dim; ++j) vec(j) = kravchuk_function_grid(md, k, j);
        Eigen::VectorXd gap = mat * vec - (k + 0.5) * vec;
        worst = std::max(worst, gap.cwiseAbs().maxCoeff());
    }
    return worst;
}

Rational eigen_identity_residual_exact(const KravchukModel& md, int k, int j) {
    check_degree(md, k, "eigen_identity_residual_exact");
    check_site(md, j, "eigen_identity_residual_exact");
    Rational diag = 2 * md.p * md.q() * md.n + ratio(1, 2) + (1 - 2 * md.p) * md.grid_x_exact(j);
    Rational s = diag * kravchuk_poly(md, k, Rational(j));
    if (j < md.n) s -= md.p * (md.n - j) * kravchuk_poly(md, k, Rational(j + 1));
    if (j > 0) s -= md.q() * j * kravchuk_poly(md, k, Rational(j - 1));
    return s - (Rational(k) + ratio(1, 2)) * kravchuk_poly(md, k, Rational(j));
}

double hermite_limit_error(const KravchukModel& md, int k, double xi) {
    check_degree(md, k, "hermite_limit_error");
    double h = md.step();
    double psi = hermite(k, xi) * std::exp(-0.5 * xi * xi) /
                 std::sqrt(std::exp2(k) * std::tgamma(k + 1.0) * std::sqrt(std::numbers::pi));
    return std::abs(psi - std::sqrt(h) * kravchuk_function(md, k, h * xi));
}

double double_commutator_residual(const KravchukModel& md) {
    Eigen::MatrixXd mat = oscillator_matrix(md);
    Eigen::MatrixXd pos = Eigen::MatrixXd::Zero(md.n + 1, md.n + 1);
    for (int j = 0; j <= md.n; ++j) pos(j, j) = md.grid_x(j);
    Eigen::MatrixXd inner = mat * pos - pos * mat;
    Eigen::MatrixXd outer = mat * inner - inner * mat;
    return (outer - pos).cwiseAbs().maxCoeff();
}

}  // namespace monocs
