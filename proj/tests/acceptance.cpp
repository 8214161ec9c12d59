// Acceptance battery: fourteen top-level claims, one pass/fail line each,
// tolerances pinned here. Exit code is the number of failed criteria.
// argv[1] must point at the command-line binary for the final criterion.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "monocs/gscs.hpp"
#include "monocs/kravchuk.hpp"
#include "monocs/monopole.hpp"
#include "monocs/oscillator_cs.hpp"
#include "monocs/quadrature.hpp"

using monocs::Complex;
using monocs::KravchukModel;
using monocs::OscillatorGscsConfig;
using monocs::QuadratureRule;
using monocs::Rational;
using monocs::SpinLevel;
using monocs::StateVector;

namespace {

int failures = 0;

void report(int no, bool ok, const char* label, const std::string& detail) {
    std::printf("%2d. %s  %-52s %s\n", no, ok ? "PASS" : "FAIL", label, detail.c_str());
    failures += !ok;
}

std::string eng(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<SpinLevel> levels_box() {
    std::vector<SpinLevel> lvs;
    for (int two_nu = 1; two_nu <= 6; ++two_nu)
        for (int m = 0; m <= 2; ++m) lvs.push_back(monocs::make_level(two_nu, m));
    return lvs;
}

std::vector<Complex> complex_box(Complex center, double half, int res) {
    std::vector<Complex> pts;
    for (int iy = 0; iy < res; ++iy)
        for (int ix = 0; ix < res; ++ix)
            pts.emplace_back(center.real() - half + 2.0 * half * ix / (res - 1),
                             center.imag() - half + 2.0 * half * iy / (res - 1));
    return pts;
}

const std::vector<Rational>& p_grid() {
    static const std::vector<Rational> ps = {monocs::ratio(1, 4), monocs::ratio(1, 3),
                                             monocs::ratio(1, 2), monocs::ratio(2, 3)};
    return ps;
}

// field Q(sqrt 2), enough matrix algebra for the 3x3 oracle
struct Root2 {
    Rational a, b;
    friend Root2 operator+(const Root2& x, const Root2& y) {
        return {Rational(x.a + y.a), Rational(x.b + y.b)};
    }
    friend Root2 operator-(const Root2& x, const Root2& y) {
        return {Rational(x.a - y.a), Rational(x.b - y.b)};
    }
    friend Root2 operator*(const Root2& x, const Root2& y) {
        return {Rational(x.a * y.a + 2 * x.b * y.b), Rational(x.a * y.b + x.b * y.a)};
    }
    bool zero() const { return a == 0 && b == 0; }
};

using Mat3 = std::array<std::array<Root2, 3>, 3>;

Mat3 mul(const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Root2 s{Rational(0), Rational(0)};
            for (int k = 0; k < 3; ++k) s = s + x[i][k] * y[k][j];
            r[i][j] = s;
        }
    return r;
}

Mat3 sub(const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = x[i][j] - y[i][j];
    return r;
}

int spawn(const std::string& cmd_line, std::string& out) {
    FILE* pipe = popen((cmd_line + " 2>&1").c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1. Gram matrix of every level is the identity under the invariant measure.
void criterion_gram() {
    const double tol = 1e-9;
    double worst = 0.0;
    for (const SpinLevel& lv : levels_box()) {
        Eigen::MatrixXcd g = monocs::basis_gram(lv, monocs::make_quadrature(lv));
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c)
                worst = std::max(worst, std::abs(g(r, c) - (r == c ? 1.0 : 0.0)));
    }
    report(1, worst <= tol, "basis Gram matrix equals the identity",
           "max entry gap " + eng(worst) + " (tol " + eng(tol) + ", two_nu 1..6, m 0..2)");
}

// 2. Finite-difference eigen-equation residual converges at second order.
void criterion_fd_order() {
    const double want = 1.8;
    const Complex pts[] = {{0.3, 0.2}, {-0.8, 0.6}, {0.1, -0.45}, {-0.35, -0.15}, {0.9, 0.55}};
    double min_order = 1e9;
    for (auto [two_nu, m] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 2}}) {
        SpinLevel lv = monocs::make_level(two_nu, m);
        double lam = monocs::landau_level(lv);
        for (int j = lv.j_min(); j <= lv.j_max(); ++j)
            for (Complex z : pts) {
                Complex f = monocs::monopole_harmonic(lv, j, z);
                double r1 = std::abs(monocs::apply_hamiltonian_fd(lv, j, z, 1e-2) - lam * f);
                double r2 = std::abs(monocs::apply_hamiltonian_fd(lv, j, z, 5e-3) - lam * f);
                double r3 = std::abs(monocs::apply_hamiltonian_fd(lv, j, z, 2.5e-3) - lam * f);
                min_order = std::min({min_order, std::log2(r1 / r2), std::log2(r2 / r3)});
            }
    }
    report(2, min_order >= want, "difference operator shows second-order convergence",
           "min order " + eng(min_order) + " (need >= " + eng(want) +
               ", h 1e-2/5e-3/2.5e-3, 5 points)");
}

// 3. Closed overlap kernel vs the direct sum, float and exact rational.
void criterion_overlap() {
    const double tol = 1e-11;
    double worst = 0.0;
    for (const SpinLevel& lv : levels_box())
        for (Complex z : complex_box({0.2, -0.1}, 1.1, 5))
            for (Complex w : complex_box({-0.15, 0.25}, 0.9, 5))
                worst = std::max(worst, std::abs(monocs::overlap_closed(lv, z, w) -
                                                 monocs::overlap_direct(lv, z, w)));
    int bad = 0;
    const Rational pts[] = {Rational(0), monocs::ratio(1, 3), monocs::ratio(-4, 5), Rational(2),
                            monocs::ratio(7, 2)};
    for (const SpinLevel& lv : levels_box())
        for (const Rational& z : pts)
            for (const Rational& w : pts)
                bad += monocs::overlap_direct_cleared(lv, z, w) !=
                       monocs::overlap_closed_cleared(lv, z, w);
    report(3, worst <= tol && bad == 0, "overlap kernel matches the direct section sum",
           "float gap " + eng(worst) + " (tol " + eng(tol) + "), exact mismatches " +
               std::to_string(bad));
}

// 4. Coherent states are normalized; the family weight is the dimension.
void criterion_normalization() {
    const double tol = 1e-12;
    double worst = 0.0;
    int bad = 0;
    for (const SpinLevel& lv : levels_box()) {
        for (Complex z : complex_box({0.2, -0.1}, 1.1, 5))
            worst = std::max(worst, std::abs(monocs::overlap_direct(lv, z, z) - 1.0));
        bad += monocs::normalization_factor(lv) != lv.two_nu + 2 * lv.m + 1;
    }
    report(4, worst <= tol && bad == 0, "coherent states have unit norm, weight 2(nu+m)+1",
           "max |<z|z>-1| " + eng(worst) + " (tol " + eng(tol) + ", 25 z per level), factor " +
               "mismatches " + std::to_string(bad));
}

// 5. Resolution of identity through the Meijer-G radial weight.
void criterion_resolution() {
    const double tol = 1e-9;
    double worst = 0.0;
    for (const SpinLevel& lv : levels_box())
        worst = std::max(worst,
                         monocs::identity_resolution_residual(lv, monocs::make_quadrature(lv)));
    report(5, worst <= tol, "coherent family resolves the identity",
           "max residual " + eng(worst) + " (tol " + eng(tol) + ", all levels)");
}

// 6. Kravchuk stack: exact for N <= 6, float within 1e-10 up to N = 64.
void criterion_kravchuk_stack() {
    const double tol = 1e-10;
    int bad = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Rational& p : p_grid()) {
            KravchukModel md = monocs::make_model(n, p);
            Rational mass(0);
            for (int y = 0; y <= n; ++y) mass += monocs::binomial_weight(md, y);
            bad += mass != Rational(1);
            for (int k = 0; k < n; ++k)
                for (int y = 0; y <= n; ++y)
                    bad += monocs::recurrence_residual(md, k, Rational(y)) != Rational(0);
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l)
                    bad += monocs::poly_orthogonality_sum(md, k, l) !=
                           (k == l ? monocs::kravchuk_norm_sq(md, k) : Rational(0));
        }

    // float lane: exact-backed values recombined in double arithmetic
    double worst = 0.0;
    for (int n : {16, 32, 64})
        for (const Rational& p : p_grid()) {
            KravchukModel md = monocs::make_model(n, p);
            double pq = monocs::to_double(md.p * md.q()), pd = monocs::to_double(md.p);
            std::vector<std::vector<double>> kv(static_cast<size_t>(n) + 2),
                phi(static_cast<size_t>(n) + 1);
            for (int k = 0; k <= n + 1; ++k) {
                kv[k].resize(static_cast<size_t>(n) + 1);
                for (int y = 0; y <= n; ++y)
                    kv[k][y] = k <= n ? monocs::to_double(monocs::kravchuk_poly(md, k, Rational(y)))
                                      : 0.0;
            }
            for (int k = 0; k <= n; ++k) {
                phi[k].resize(static_cast<size_t>(n) + 1);
                for (int j = 0; j <= n; ++j)
                    phi[k][j] = monocs::kravchuk_function_grid(md, k, j);
            }
            double mass = 0.0;
            for (int y = 0; y <= n; ++y)
                mass += monocs::to_double(monocs::binomial_weight(md, y));
            worst = std::max(worst, std::abs(mass - 1.0));
            for (int k = 0; k < n; ++k)
                for (int y = 0; y <= n; ++y) {
                    double t1 = (y - k - pd * (n - 2 * k)) * kv[k][y];
                    double t2 = (k + 1) * kv[k + 1][y];
                    double t3 = k == 0 ? 0.0 : pq * (n - k + 1) * kv[k - 1][y];
                    double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
                    worst = std::max(worst, std::abs(t1 - t2 - t3) / scale);
                }
            for (int i = 0; i <= n; ++i)
                for (int k = i; k <= n; ++k) {
                    double s = 0.0;
                    for (int j = 0; j <= n; ++j) s += phi[i][j] * phi[k][j];
                    worst = std::max(worst, std::abs(s - (i == k ? 1.0 : 0.0)));
                }
        }
    report(6, bad == 0 && worst <= tol, "Kravchuk recurrence/orthogonality/weights hold",
           "exact mismatches " + std::to_string(bad) + " (N<=6), float gap " + eng(worst) +
               " (tol " + eng(tol) + ", N<=64)");
}

// 7. Oscillator matrix has spectrum {k+1/2} and the functions as eigenvectors.
void criterion_spectrum() {
    const double tol = 1e-9;
    double worst = 0.0;
    for (int n : {4, 8, 16, 32})
        for (const Rational& p : {monocs::ratio(1, 4), monocs::ratio(1, 2), monocs::ratio(2, 3)}) {
            KravchukModel md = monocs::make_model(n, p);
            Eigen::VectorXd ev = monocs::oscillator_spectrum(md);
            for (int k = 0; k <= n; ++k)
                worst = std::max(worst, std::abs(ev(k) - (k + 0.5)));
            worst = std::max(worst, monocs::eigen_residual(md));
        }
    report(7, worst <= tol, "oscillator spectrum is k + 1/2 with Kravchuk eigenvectors",
           "max gap " + eng(worst) + " (tol " + eng(tol) + ", N<=32)");
}

// 8. Hermite limit: error decreases over N and lands under 0.02 at N = 256.
void criterion_hermite() {
    const double cap = 0.02;
    KravchukModel mds[] = {monocs::make_model(16, monocs::ratio(1, 2)),
                           monocs::make_model(64, monocs::ratio(1, 2)),
                           monocs::make_model(256, monocs::ratio(1, 2))};
    bool monotone = true;
    double final_err = 0.0;
    for (int k = 0; k <= 3; ++k)
        for (double xi : {-1.6, 0.4, 1.1, 1.9}) {
            double e1 = monocs::hermite_limit_error(mds[0], k, xi);
            double e2 = monocs::hermite_limit_error(mds[1], k, xi);
            double e3 = monocs::hermite_limit_error(mds[2], k, xi);
            monotone = monotone && e1 > e2 && e2 > e3;
            final_err = std::max(final_err, e3);
        }
    report(8, monotone && final_err < cap, "discrete functions approach the Hermite limit",
           std::string("monotone over N=16/64/256: ") + (monotone ? "yes" : "no") +
               ", error at N=256 " + eng(final_err) + " (cap " + eng(cap) + ")");
}

// 9. Double commutator closes the position operator at p = 1/2.
void criterion_commutator() {
    const double tol = 1e-10;
    // exact convention oracle at N = 2 over Q(sqrt 2)
    Root2 zero{Rational(0), Rational(0)};
    Root2 diag{monocs::ratio(3, 2), Rational(0)};
    Root2 off{Rational(0), monocs::ratio(-1, 2)};
    Mat3 m{{{diag, off, zero}, {off, diag, off}, {zero, off, diag}}};
    Mat3 x{{{Root2{Rational(-1), Rational(0)}, zero, zero},
            {zero, zero, zero},
            {zero, zero, Root2{Rational(1), Rational(0)}}}};
    Mat3 inner = sub(mul(m, x), mul(x, m));
    Mat3 gap = sub(sub(mul(m, inner), mul(inner, m)), x);
    bool oracle = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) oracle = oracle && gap[i][j].zero();

    double worst = 0.0;
    for (int n : {2, 4, 8})
        worst = std::max(
            worst, monocs::double_commutator_residual(monocs::make_model(n, monocs::ratio(1, 2))));
    report(9, oracle && worst <= tol, "[H,[H,X]] = X at the symmetric point",
           std::string("N=2 exact oracle ") + (oracle ? "ok" : "BROKEN") + ", float gap " +
               eng(worst) + " (tol " + eng(tol) + ", N=2,4,8)");
}

// 10. Position wavefunctions: closed forms vs the direct sum, unit mass.
void criterion_wavefunctions() {
    const double tol = 1e-9, mass_tol = 1e-12;
    double worst = 0.0, worst_mass = 0.0;
    for (auto [two_nu, m, p] :
         {std::tuple{2, 1, monocs::ratio(1, 2)}, std::tuple{1, 2, monocs::ratio(1, 2)},
          std::tuple{2, 1, monocs::ratio(1, 3)}, std::tuple{4, 1, monocs::ratio(2, 3)},
          std::tuple{4, 0, monocs::ratio(1, 2)}, std::tuple{3, 0, monocs::ratio(1, 3)}}) {
        SpinLevel lv = monocs::make_level(two_nu, m);
        OscillatorGscsConfig cfg =
            monocs::make_oscillator_config(lv, monocs::make_model(lv.quanta(), p));
        for (Complex z : complex_box({0.15, 0.1}, 1.0, 5)) {
            std::vector<Complex> direct = monocs::wavefunction_direct(cfg, z);
            double scale = 0.0, mass = 0.0;
            for (Complex v : direct) {
                scale = std::max(scale, std::abs(v));
                mass += std::norm(v);
            }
            worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
            for (int j = 0; j <= cfg.model.n; ++j) {
                worst = std::max(worst, std::abs(monocs::wavefunction_closed(cfg, z, j) -
                                                 direct[j]) /
                                            scale);
                if (m == 0)
                    worst = std::max(worst, std::abs(monocs::wavefunction_m0_closed(cfg, z, j) -
                                                     direct[j]) /
                                                scale);
            }
        }
    }
    report(10, worst <= tol && worst_mass <= mass_tol, "closed wavefunction forms match the sum",
           "relative gap " + eng(worst) + " (tol " + eng(tol) + "), mass gap " + eng(worst_mass) +
               " (tol " + eng(mass_tol) + ")");
}

// 11. Bargmann round-trip and Parseval for basis and seeded random states.
void criterion_bargmann() {
    const double tol = 1e-9;
    double worst = 0.0;
    std::mt19937 rng(11);  // pinned seed
    std::uniform_real_distribution<double> coin(-1.0, 1.0);
    for (auto [two_nu, m, p] :
         {std::tuple{2, 1, monocs::ratio(1, 2)}, std::tuple{4, 1, monocs::ratio(1, 3)}}) {
        SpinLevel lv = monocs::make_level(two_nu, m);
        OscillatorGscsConfig cfg =
            monocs::make_oscillator_config(lv, monocs::make_model(lv.quanta(), p));
        QuadratureRule rule = monocs::make_quadrature(lv);
        std::vector<StateVector> states;
        for (int k = 0; k <= lv.quanta(); ++k) {
            StateVector e{lv, std::vector<Complex>(lv.dim(), Complex(0.0))};
            e.a[static_cast<size_t>(k)] = 1.0;
            states.push_back(e);
        }
        for (int s = 0; s < 10; ++s) {
            StateVector r{lv, std::vector<Complex>(lv.dim())};
            for (Complex& a : r.a) a = Complex(coin(rng), coin(rng));
            states.push_back(r);
        }
        for (const StateVector& st : states) {
            StateVector back =
                monocs::reconstruct_state(cfg, monocs::bargmann_transform(cfg, st), rule);
            for (int k = 0; k <= lv.quanta(); ++k)
                worst = std::max(worst, std::abs(back.a[k] - st.a[k]));
            worst = std::max(worst, monocs::parseval_residual(cfg, st, rule));
        }
    }
    report(11, worst <= tol, "transform round-trip and Parseval hold",
           "max residual " + eng(worst) + " (tol " + eng(tol) +
               ", basis + 10 random states x 2 configs, seed 11)");
}

// 12. Binomial-kernel family coincides with the m = 0 wavefunctions.
void criterion_kp() {
    const double tol = 1e-11;
    double worst = 0.0;
    for (int n : {2, 4, 8})
        for (const Rational& p : {monocs::ratio(1, 4), monocs::ratio(1, 3), monocs::ratio(1, 2)}) {
            KravchukModel md = monocs::make_model(n, p);
            for (Complex z : complex_box({0.15, 0.15}, 0.75, 3))
                for (int y = 0; y <= n; ++y)
                    worst = std::max(worst, monocs::kp_equivalence_residual(md, z, y));
        }
    int bad = 0;
    for (int n : {2, 5, 8})
        for (const Rational& p : p_grid()) {
            KravchukModel md = monocs::make_model(n, p);
            Rational q = md.q();
            for (int y = 0; y <= n; ++y)
                for (const Rational& z : {monocs::ratio(1, 2), monocs::ratio(-2, 3), Rational(3)}) {
                    Rational lhs(0);
                    for (int k = 0; k <= n; ++k)
                        lhs += monocs::kravchuk_poly(md, k, Rational(y)) *
                               monocs::pow_int<Rational>(Rational(z / q), k);
                    bad += lhs != monocs::pow_int<Rational>(Rational(1 + z), y) *
                                      monocs::pow_int<Rational>(Rational(1 - md.p * z / q), n - y);
                }
        }
    report(12, worst <= tol && bad == 0, "binomial kernel reproduces the m=0 family",
           "float gap " + eng(worst) + " (tol " + eng(tol) + ", N<=8), exact generating " +
               "mismatches " + std::to_string(bad));
}

// 13. Spin amplitudes contract to the flat-oscillator law as N grows.
void criterion_glauber() {
    bool decreasing = true;
    double last_gap = 0.0;
    for (Complex zeta : {Complex(0.5, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.5)}) {
        double e1 = monocs::glauber_contraction_error(16, zeta);
        double e2 = monocs::glauber_contraction_error(64, zeta);
        double e3 = monocs::glauber_contraction_error(256, zeta);
        decreasing = decreasing && e1 > e2 && e2 > e3;
        last_gap = std::max(last_gap, e3);
    }
    report(13, decreasing, "amplitudes contract onto the flat-oscillator law",
           std::string("strictly decreasing over N=16/64/256: ") + (decreasing ? "yes" : "no") +
               ", worst error at N=256 " + eng(last_gap));
}

// 14. The command-line verifier certifies cleanly and flags injected faults.
void criterion_cli(const char* cli) {
    if (!cli) {
        report(14, false, "command-line verifier", "no binary path supplied");
        return;
    }
    std::string quiet, noisy;
    int clean = spawn(std::string("\"") + cli + "\" verify -o /dev/null", quiet);
    int hurt = spawn(std::string("\"") + cli + "\" verify --perturb 1e-6 -o /dev/null", noisy);
    bool named = noisy.find("overlap-closed-vs-direct") != std::string::npos &&
                 noisy.find("resolution-of-identity") != std::string::npos;
    report(14, clean == 0 && hurt == 1 && named, "command-line verifier certifies and flags",
           "clean exit " + std::to_string(clean) + ", perturbed exit " + std::to_string(hurt) +
               ", culprits named: " + (named ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
    std::printf("acceptance battery\n------------------\n");
    criterion_gram();
    criterion_fd_order();
    criterion_overlap();
    criterion_normalization();
    criterion_resolution();
    criterion_kravchuk_stack();
    criterion_spectrum();
    criterion_hermite();
    criterion_commutator();
    criterion_wavefunctions();
    criterion_bargmann();
    criterion_kp();
    criterion_glauber();
    criterion_cli(argc > 1 ? argv[1] : nullptr);
    std::printf("------------------\n%d of 14 criteria failed\n", failures);
    return failures;
}
