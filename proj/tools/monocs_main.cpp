// Command-line front end for the monocs library: tabulates basis sections,
// Kravchuk oscillator data and Husimi densities as CSV/JSON, and runs the
// closed-form identity suites as a batch certifier.
//
// Exit codes: 0 success / all identities pass, 1 failed identity,
// 2 invalid usage or parameters, 3 numeric failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monocs/gscs.hpp"
#include "monocs/kravchuk.hpp"
#include "monocs/monopole.hpp"
#include "monocs/oscillator_cs.hpp"
#include "monocs/quadrature.hpp"
#include "monocs/rational.hpp"

namespace {

using monocs::Complex;
using monocs::KravchukModel;
using monocs::OscillatorGscsConfig;
using monocs::QuadratureRule;
using monocs::Rational;
using monocs::SpinLevel;
using monocs::StateVector;

// --- output formatting ------------------------------------------------------

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num(int v) { return std::to_string(v); }

// All table cells are numeric, so CSV and JSON share one string form.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t) {
    std::string out;
    for (size_t c = 0; c < t.columns.size(); ++c)
        out += (c ? "," : "") + t.columns[c];
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c)
            out += (c ? "," : "") + row[c];
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t) {
    std::string out = "[\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        out += "  {";
        for (size_t c = 0; c < t.columns.size(); ++c) {
            out += (c ? ", " : "") + ("\"" + t.columns[c] + "\": ") + t.rows[r][c];
        }
        out += r + 1 < t.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

bool write_output(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    return static_cast<bool>(f);
}

int emit_table(const Table& t, const std::string& format, const std::string& path) {
    for (const auto& row : t.rows)
        for (const auto& cell : row)
            if (cell.find("nan") != std::string::npos || cell.find("inf") != std::string::npos) {
                std::cerr << "non-finite value in output\n";
                return 3;
            }
    if (!write_output(path, format == "json" ? to_json(t) : to_csv(t))) {
        std::cerr << "cannot write " << (path.empty() ? "stdout" : path) << '\n';
        return 2;
    }
    return 0;
}

// --- shared argument plumbing ----------------------------------------------

struct GridSpec {
    double cx = 0.0, cy = 0.0, half = 1.0;
    int res = 1;
};

struct RunConfig {
    int two_nu = 1;
    int m = 0;
    int n = 1;                    // Kravchuk N
    std::string p_text = "1/2";   // exact rational only
    std::string grid_text;
    std::string format = "csv";
    std::string output;
    std::string backend;          // verify: "", "float" or "rational"
    double perturb = 0.0;
    int state_index = -1;         // husimi basis slot
    std::string state_z_text;     // husimi coherent label "re,im"
};

std::vector<double> split_doubles(const std::string& text) {
    std::vector<double> vals;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
        size_t used = 0;
        double v = std::stod(piece, &used);
        if (used != piece.size() || !std::isfinite(v))
            throw std::invalid_argument("bad number '" + piece + "'");
        vals.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return vals;
}

GridSpec parse_grid(const std::string& text) {
    std::vector<double> v = split_doubles(text);
    if (v.size() != 4) throw std::invalid_argument("grid wants center_re,center_im,half_width,res");
    GridSpec g{v[0], v[1], v[2], static_cast<int>(v[3])};
    if (g.half <= 0.0 || g.res < 1 || v[3] != g.res)
        throw std::invalid_argument("grid wants half_width > 0 and integer res >= 1");
    return g;
}

std::vector<double> axis_points(double center, double half, int res) {
    std::vector<double> pts(res);
    for (int i = 0; i < res; ++i)
        pts[i] = res == 1 ? center : center - half + 2.0 * half * i / (res - 1);
    return pts;
}

std::vector<Complex> grid_points(const GridSpec& g) {
    std::vector<Complex> pts;
    for (double y : axis_points(g.cy, g.half, g.res))
        for (double x : axis_points(g.cx, g.half, g.res)) pts.emplace_back(x, y);
    return pts;
}

// --- tabulation commands ----------------------------------------------------

int cmd_basis(const RunConfig& rc) {
    SpinLevel lv;
    GridSpec grid;
    try {
        lv = monocs::make_level(rc.two_nu, rc.m);
        grid = parse_grid(rc.grid_text);
    } catch (const std::exception& e) {
        std::cerr << "basis: " << e.what() << '\n';
        return 2;
    }
    Table t;
    t.columns = {"j", "z_re", "z_im", "value_re", "value_im"};
    try {
        for (Complex z : grid_points(grid))
            for (int j = lv.j_min(); j <= lv.j_max(); ++j) {
                Complex v = monocs::monopole_harmonic(lv, j, z);
                t.rows.push_back({num(j), num(z.real()), num(z.imag()),
                                  num(v.real()), num(v.imag())});
            }
    } catch (const std::exception& e) {
        std::cerr << "basis: " << e.what() << '\n';
        return 3;
    }
    return emit_table(t, rc.format, rc.output);
}

int cmd_husimi(const RunConfig& rc) {
    SpinLevel lv;
    GridSpec grid;
    StateVector psi;
    try {
        lv = monocs::make_level(rc.two_nu, rc.m);
        grid = parse_grid(rc.grid_text);
        bool by_index = rc.state_index >= 0, by_label = !rc.state_z_text.empty();
        if (by_index == by_label)
            throw std::invalid_argument("state spec wants exactly one of --state-index, --state-z");
        if (by_index) {
            if (rc.state_index > lv.quanta())
                throw std::invalid_argument("state index outside 0.." +
                                            std::to_string(lv.quanta()));
            psi = StateVector{lv, std::vector<Complex>(lv.dim(), Complex(0.0))};
            psi.a[static_cast<size_t>(rc.state_index)] = 1.0;
        } else {
            std::vector<double> z0 = split_doubles(rc.state_z_text);
            if (z0.size() != 2) throw std::invalid_argument("--state-z wants re,im");
            psi = monocs::gscs_coefficients(lv, Complex(z0[0], z0[1]));
        }
    } catch (const std::exception& e) {
        std::cerr << "husimi: " << e.what() << '\n';
        return 2;
    }
    Table t;
    t.columns = {"z_re", "z_im", "density"};
    try {
        for (Complex z : grid_points(grid))
            t.rows.push_back({num(z.real()), num(z.imag()), num(monocs::husimi(psi, z))});
    } catch (const std::exception& e) {
        std::cerr << "husimi: " << e.what() << '\n';
        return 3;
    }
    return emit_table(t, rc.format, rc.output);
}

int cmd_kravchuk(const RunConfig& rc, bool spectrum, bool matrix, bool functions) {
    KravchukModel md;
    try {
        if (spectrum + matrix + functions != 1)
            throw std::invalid_argument("pick exactly one of --spectrum, --matrix, --functions");
        md = monocs::make_model(rc.n, monocs::parse_rational(rc.p_text));
    } catch (const std::exception& e) {
        std::cerr << "kravchuk: " << e.what() << '\n';
        return 2;
    }
    Table t;
    try {
        if (spectrum) {
            t.columns = {"k", "eigenvalue"};
            Eigen::VectorXd ev = monocs::oscillator_spectrum(md);
            for (int k = 0; k <= md.n; ++k) t.rows.push_back({num(k), num(ev(k))});
        } else if (matrix) {
            t.columns = {"row", "col", "value"};
            Eigen::MatrixXd h = monocs::oscillator_matrix(md);
            for (int r = 0; r <= md.n; ++r)
                for (int c = 0; c <= md.n; ++c)
                    t.rows.push_back({num(r), num(c), num(h(r, c))});
        } else {
            t.columns = {"k", "j", "value"};
            for (int k = 0; k <= md.n; ++k)
                for (int j = 0; j <= md.n; ++j)
                    t.rows.push_back({num(k), num(j), num(monocs::kravchuk_function_grid(md, k, j))});
        }
    } catch (const std::exception& e) {
        std::cerr << "kravchuk: " << e.what() << '\n';
        return 3;
    }
    return emit_table(t, rc.format, rc.output);
}

// --- verification suites ----------------------------------------------------

struct IdentityRecord {
    std::string id;
    std::string equation;
    std::string parameters;
    double residual;
    double tolerance;

    bool pass() const { return residual <= tolerance; }
};

std::vector<SpinLevel> default_levels() {
    std::vector<SpinLevel> lvs;
    for (int two_nu = 1; two_nu <= 6; ++two_nu)
        for (int m = 0; m <= 2; ++m) lvs.push_back(monocs::make_level(two_nu, m));
    return lvs;
}

std::vector<Complex> box(double cx, double cy, double half, int res) {
    return grid_points(GridSpec{cx, cy, half, res});
}

const std::vector<Rational>& p_grid() {
    static const std::vector<Rational> ps = {monocs::ratio(1, 4), monocs::ratio(1, 3),
                                             monocs::ratio(1, 2), monocs::ratio(2, 3)};
    return ps;
}

void float_suite(std::vector<IdentityRecord>& out, double eps) {
    const std::vector<SpinLevel> levels = default_levels();
    const std::vector<Complex> zs = box(0.2, -0.1, 1.1, 5);
    const std::vector<Complex> ws = box(-0.15, 0.25, 0.9, 5);

    {
        double worst = 0.0;
        for (const SpinLevel& lv : levels)
            for (Complex z : zs)
                worst = std::max(worst, std::abs(monocs::overlap_direct(lv, z, z) - 1.0));
        out.push_back({"normalization-unit", "<z|z> = 1",
                       "two_nu=1..6, m=0..2, 25 z per level", worst, 1e-12});
    }
    {
        double worst = 0.0;
        for (const SpinLevel& lv : levels)
            for (Complex z : zs)
                for (Complex w : ws) {
                    Complex closed = monocs::overlap_closed(lv, z, w) * (1.0 + eps);
                    worst = std::max(worst, std::abs(closed - monocs::overlap_direct(lv, z, w)));
                }
        out.push_back({"overlap-closed-vs-direct",
                       "<z|w> = (1+z w~)^{2nu} ((1+zz~)(1+ww~))^{-nu} 2F1(-m, 2nu+m+1; 1; X)",
                       "two_nu=1..6, m=0..2, 25 z x 25 w per level", worst, 1e-11});
    }
    {
        double worst = 0.0;
        for (const SpinLevel& lv : levels) {
            Eigen::MatrixXcd g = monocs::basis_gram(lv, monocs::make_quadrature(lv));
            for (int r = 0; r < g.rows(); ++r)
                for (int c = 0; c < g.cols(); ++c)
                    worst = std::max(worst, std::abs(g(r, c) - (r == c ? 1.0 : 0.0)));
        }
        out.push_back({"gram-orthonormality", "int conj(Phi~_i) Phi~_j dmu = delta_ij",
                       "two_nu=1..6, m=0..2, quadrature sized per level", worst, 1e-9});
    }
    {
        const Complex pts[] = {{0.3, 0.2}, {-0.8, 0.6}, {0.1, -0.45}, {-0.35, -0.15}, {0.9, 0.55}};
        double min_order = 1e9, worst_extrap = 0.0;
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
                    worst_extrap = std::max(
                        worst_extrap,
                        std::abs(monocs::apply_hamiltonian_fd_extrapolated(lv, j, z) - lam * f));
                }
        }
        out.push_back({"landau-eigen-order", "H Phi~_j = ((2m+1) nu + m(m+1)) Phi~_j",
                       "levels (1,0),(2,1),(3,2), all j, 5 pts, h=1e-2,5e-3,2.5e-3; "
                       "residual = 1.8 - measured order",
                       1.8 - min_order, 0.0});
        out.push_back({"landau-eigen-residual", "H Phi~_j = ((2m+1) nu + m(m+1)) Phi~_j",
                       "levels (1,0),(2,1),(3,2), all j, 5 pts, extrapolated h=1e-3",
                       worst_extrap, 1e-6});
    }
    {
        double worst = 0.0;
        for (const SpinLevel& lv : levels)
            worst = std::max(worst, monocs::identity_resolution_residual(
                                        lv, monocs::make_quadrature(lv), 1.0 + eps));
        out.push_back({"resolution-of-identity", "(2(nu+m)+1) int |z><z| dmu(z) = 1",
                       "two_nu=1..6, m=0..2, Meijer-G radial weight", worst, 1e-9});
    }
    {
        // exact-backed values recombined in double arithmetic, relative to the
        // largest term: the plain double recurrence is meaningless at large k
        double worst = 0.0;
        for (int n : {16, 32, 64})
            for (const Rational& p : p_grid()) {
                KravchukModel md = monocs::make_model(n, p);
                double pq = monocs::to_double(md.p * md.q()), pd = monocs::to_double(md.p);
                for (int k = 0; k + 1 <= n; ++k)
                    for (int y = 0; y <= n; ++y) {
                        double cur = monocs::to_double(monocs::kravchuk_poly(md, k, Rational(y)));
                        double up =
                            monocs::to_double(monocs::kravchuk_poly(md, k + 1, Rational(y)));
                        double down =
                            k == 0 ? 0.0
                                   : monocs::to_double(monocs::kravchuk_poly(md, k - 1, Rational(y)));
                        double t1 = (y - k - pd * (n - 2 * k)) * cur;
                        double t2 = (k + 1) * up;
                        double t3 = pq * (n - k + 1) * down;
                        double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
                        worst = std::max(worst, std::abs(t1 - t2 - t3) / scale);
                    }
            }
        out.push_back({"kravchuk-recurrence-float",
                       "(x - k - p(N-2k)) K_k = (k+1) K_{k+1} + pq(N-k+1) K_{k-1}",
                       "N=16,32,64, p=1/4,1/3,1/2,2/3, all k, x on grid, relative", worst, 1e-10});
    }
    {
        double worst = 0.0;
        for (int n : {16, 32, 64})
            for (const Rational& p : {monocs::ratio(1, 4), monocs::ratio(1, 2),
                                      monocs::ratio(2, 3)}) {
                KravchukModel md = monocs::make_model(n, p);
                std::vector<std::vector<double>> phi(static_cast<size_t>(n) + 1);
                for (int k = 0; k <= n; ++k) {
                    phi[k].resize(static_cast<size_t>(n) + 1);
                    for (int j = 0; j <= n; ++j)
                        phi[k][j] = monocs::kravchuk_function_grid(md, k, j);
                }
                for (int i = 0; i <= n; ++i)
                    for (int k = i; k <= n; ++k) {
                        double s = 0.0;
                        for (int j = 0; j <= n; ++j) s += phi[i][j] * phi[k][j];
                        worst = std::max(worst, std::abs(s - (i == k ? 1.0 : 0.0)));
                    }
            }
        out.push_back({"kravchuk-orthonormality-float", "sum_j phi_i(x_j) phi_k(x_j) = delta_ik",
                       "N=16,32,64, p=1/4,1/2,2/3, all pairs", worst, 1e-10});
    }
    {
        double worst = 0.0;
        for (int n : {16, 32, 64})
            for (const Rational& p : p_grid()) {
                KravchukModel md = monocs::make_model(n, p);
                double s = 0.0;
                for (int y = 0; y <= n; ++y)
                    s += monocs::to_double(monocs::binomial_weight(md, y));
                worst = std::max(worst, std::abs(s - 1.0));
            }
        out.push_back({"kravchuk-weight-float", "sum_y C(N,y) p^y q^{N-y} = 1",
                       "N=16,32,64, p=1/4,1/3,1/2,2/3", worst, 1e-12});
    }
    {
        double worst_spec = 0.0, worst_vec = 0.0;
        for (int n : {8, 16, 32})
            for (const Rational& p : {monocs::ratio(1, 4), monocs::ratio(1, 2),
                                      monocs::ratio(2, 3)}) {
                KravchukModel md = monocs::make_model(n, p);
                Eigen::VectorXd ev = monocs::oscillator_spectrum(md);
                for (int k = 0; k <= n; ++k)
                    worst_spec = std::max(worst_spec, std::abs(ev(k) - (k + 0.5)));
                worst_vec = std::max(worst_vec, monocs::eigen_residual(md));
            }
        out.push_back({"oscillator-spectrum", "spec(H^N) = {k + 1/2 : k = 0..N}",
                       "N=8,16,32, p=1/4,1/2,2/3", worst_spec, 1e-9});
        out.push_back({"oscillator-eigen-residual", "H^N phi_k = (k+1/2) phi_k",
                       "N=8,16,32, p=1/4,1/2,2/3, all k", worst_vec, 1e-9});
    }
    {
        KravchukModel small = monocs::make_model(16, monocs::ratio(1, 2));
        KravchukModel mid = monocs::make_model(64, monocs::ratio(1, 2));
        KravchukModel big = monocs::make_model(256, monocs::ratio(1, 2));
        double worst_rise = -1e9, worst_final = 0.0;
        for (int k = 0; k <= 3; ++k)
            for (double xi : {-1.6, 0.4, 1.1, 1.9}) {
                double e1 = monocs::hermite_limit_error(small, k, xi);
                double e2 = monocs::hermite_limit_error(mid, k, xi);
                double e3 = monocs::hermite_limit_error(big, k, xi);
                worst_rise = std::max({worst_rise, e2 - e1, e3 - e2});
                worst_final = std::max(worst_final, e3);
            }
        out.push_back({"hermite-limit-monotone",
                       "sqrt(h) phi_k(h xi) -> e^{-xi^2/2} H_k(xi) / sqrt(2^k k! sqrt(pi))",
                       "k<=3, xi=-1.6,0.4,1.1,1.9, N=16,64,256, p=1/2; "
                       "residual = worst error increase",
                       worst_rise, 0.0});
        out.push_back({"hermite-limit-error",
                       "sqrt(h) phi_k(h xi) -> e^{-xi^2/2} H_k(xi) / sqrt(2^k k! sqrt(pi))",
                       "k<=3, xi=-1.6,0.4,1.1,1.9, N=256, p=1/2", worst_final, 0.02});
    }
    {
        double worst = 0.0;
        for (int n : {2, 4, 8})
            worst = std::max(worst, monocs::double_commutator_residual(
                                        monocs::make_model(n, monocs::ratio(1, 2))));
        out.push_back({"double-commutator", "[H^N, [H^N, X]] = X at p = 1/2", "N=2,4,8",
                       worst, 1e-10});
    }
    {
        const std::vector<Complex> wf_box = box(0.15, 0.1, 1.0, 5);
        double worst_closed = 0.0, worst_m0 = 0.0, worst_mass = 0.0;
        auto run_cfg = [&](int two_nu, int m, const Rational& p) {
            SpinLevel lv = monocs::make_level(two_nu, m);
            KravchukModel md = monocs::make_model(lv.quanta(), p);
            OscillatorGscsConfig cfg = monocs::make_oscillator_config(lv, md);
            for (Complex z : wf_box) {
                std::vector<Complex> direct = monocs::wavefunction_direct(cfg, z);
                double scale = 0.0, mass = 0.0;
                for (Complex v : direct) {
                    scale = std::max(scale, std::abs(v));
                    mass += std::norm(v);
                }
                worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
                for (int j = 0; j <= md.n; ++j) {
                    double gap = std::abs(monocs::wavefunction_closed(cfg, z, j) - direct[j]);
                    worst_closed = std::max(worst_closed, gap / scale);
                    if (m == 0) {
                        double gap0 =
                            std::abs(monocs::wavefunction_m0_closed(cfg, z, j) - direct[j]);
                        worst_m0 = std::max(worst_m0, gap0 / scale);
                    }
                }
            }
        };
        run_cfg(2, 1, monocs::ratio(1, 2));
        run_cfg(1, 2, monocs::ratio(1, 2));
        run_cfg(2, 1, monocs::ratio(1, 3));
        run_cfg(4, 1, monocs::ratio(2, 3));
        run_cfg(4, 0, monocs::ratio(1, 2));
        run_cfg(3, 0, monocs::ratio(1, 3));
        out.push_back({"wavefunction-closed-vs-direct",
                       "sum_k conj(Phi~_{k-m}(z)) phi_k(x_j) / sqrt(N+1) = closed Jacobi-sum form",
                       "(two_nu,m,p) over 6 cases, 25 z, all j, relative to sup_j", worst_closed,
                       1e-9});
        out.push_back({"wavefunction-m0-closed",
                       "<x_j|z> (m=0) ~ (1+sqrt(q/p) z~)^j (1-sqrt(p/q) z~)^{N-j}",
                       "(4,0,1/2), (3,0,1/3), 25 z, all j, relative to sup_j", worst_m0, 1e-9});
        out.push_back({"wavefunction-unit-mass", "sum_j |<x_j|z>|^2 = 1",
                       "(two_nu,m,p) over 6 cases, 25 z", worst_mass, 1e-12});
    }
    {
        double worst_round = 0.0, worst_parseval = 0.0;
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> coin(-1.0, 1.0);
        for (auto [two_nu, m, p] : {std::tuple{2, 1, monocs::ratio(1, 2)},
                                    std::tuple{4, 1, monocs::ratio(1, 3)}}) {
            SpinLevel lv = monocs::make_level(two_nu, m);
            OscillatorGscsConfig cfg =
                monocs::make_oscillator_config(lv, monocs::make_model(lv.quanta(), p));
            QuadratureRule rule = monocs::make_quadrature(lv);
            std::vector<StateVector> states;
            for (int k = 0; k <= lv.quanta(); ++k) {
                StateVector basis{lv, std::vector<Complex>(lv.dim(), Complex(0.0))};
                basis.a[static_cast<size_t>(k)] = 1.0;
                states.push_back(basis);
            }
            for (int s = 0; s < 10; ++s) {
                StateVector random{lv, std::vector<Complex>(lv.dim())};
                for (Complex& a : random.a) a = Complex(coin(rng), coin(rng));
                states.push_back(random);
            }
            for (const StateVector& st : states) {
                StateVector back =
                    monocs::reconstruct_state(cfg, monocs::bargmann_transform(cfg, st), rule);
                for (int k = 0; k <= lv.quanta(); ++k)
                    worst_round = std::max(worst_round, std::abs(back.a[k] - st.a[k]));
                worst_parseval =
                    std::max(worst_parseval, monocs::parseval_residual(cfg, st, rule));
            }
        }
        out.push_back({"bargmann-roundtrip",
                       "a_k = int conj(B_a(z)) conj(Phi~_{k-m}(z)) dmu(z)",
                       "(2,1,1/2), (4,1,1/3), basis + 10 random states (mt19937 seed 11)",
                       worst_round, 1e-9});
        out.push_back({"parseval", "int |B_a|^2 dmu = sum_k |a_k|^2",
                       "(2,1,1/2), (4,1,1/3), basis + 10 random states (mt19937 seed 11)",
                       worst_parseval, 1e-9});
    }
    {
        double worst = 0.0;
        for (int n : {2, 4, 8})
            for (const Rational& p : {monocs::ratio(1, 4), monocs::ratio(1, 3),
                                      monocs::ratio(1, 2)}) {
                KravchukModel md = monocs::make_model(n, p);
                for (Complex z : box(0.15, 0.15, 0.75, 3))
                    for (int y = 0; y <= n; ++y)
                        worst = std::max(worst, monocs::kp_equivalence_residual(md, z, y));
            }
        out.push_back({"kp-equivalence", "<y|z>_KP = <x_y | sqrt(p/q) z~> (m=0 family)",
                       "N=2,4,8, p=1/4,1/3,1/2, 3x3 z grid, all y", worst, 1e-11});
    }
    {
        double worst_rise = -1e9;
        for (Complex zeta : {Complex(0.5, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.5)}) {
            double e1 = monocs::glauber_contraction_error(16, zeta);
            double e2 = monocs::glauber_contraction_error(64, zeta);
            double e3 = monocs::glauber_contraction_error(256, zeta);
            worst_rise = std::max({worst_rise, e2 - e1, e3 - e2});
        }
        out.push_back({"glauber-contraction",
                       "a_k(zeta/sqrt(N)) -> e^{-|zeta|^2/2} zeta^k / sqrt(k!)",
                       "zeta=0.5, 1, 1+0.5i, N=16,64,256; residual = worst error increase, "
                       "negative tolerance demands strict decrease",
                       worst_rise, -1e-12});
    }
}

void rational_suite(std::vector<IdentityRecord>& out) {
    {
        int bad = 0;
        const Rational pts[] = {Rational(0), monocs::ratio(1, 3), monocs::ratio(-4, 5),
                                Rational(2), monocs::ratio(7, 2)};
        for (auto [two_nu, m] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 2},
                                 std::pair{4, 2}}) {
            SpinLevel lv = monocs::make_level(two_nu, m);
            for (const Rational& z : pts)
                for (const Rational& w : pts)
                    bad += monocs::overlap_direct_cleared(lv, z, w) !=
                           monocs::overlap_closed_cleared(lv, z, w);
        }
        out.push_back({"overlap-exact",
                       "sum_j gamma_j^2 b_j(z) b_j(w) = (N+1)(1+zw)^{2nu} 2F1(-m, 2nu+m+1; 1; X)",
                       "levels (1,0),(2,1),(3,2),(4,2), rational z,w; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
    {
        int bad = 0;
        for (const SpinLevel& lv : default_levels())
            bad += monocs::normalization_factor(lv) != lv.two_nu + 2 * lv.m + 1;
        out.push_back({"normalization-factor-exact", "N + 1 = 2(nu+m) + 1",
                       "two_nu=1..6, m=0..2; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
    {
        int bad = 0;
        for (int two_nu = 1; two_nu <= 8; ++two_nu) {
            SpinLevel lv = monocs::make_level(two_nu, 0);
            for (int j = 0; j <= two_nu; ++j)
                bad += monocs::basis_norm_sq(lv, j) * monocs::factorial(j) *
                           monocs::factorial(two_nu - j) !=
                       monocs::factorial(two_nu + 1);
        }
        out.push_back({"norm-beta-exact", "gamma_j^2 j! (2nu-j)! = (2nu+1)! at m = 0",
                       "two_nu=1..8, all j; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
    {
        int bad = 0;
        for (int n = 1; n <= 6; ++n)
            for (const Rational& p : p_grid()) {
                KravchukModel md = monocs::make_model(n, p);
                for (int k = 0; k < n; ++k) {
                    for (int y = 0; y <= n; ++y)
                        bad += monocs::recurrence_residual(md, k, Rational(y)) != Rational(0);
                    for (const Rational& x : {monocs::ratio(1, 3), monocs::ratio(-2, 5)})
                        bad += monocs::recurrence_residual(md, k, x) != Rational(0);
                }
            }
        out.push_back({"kravchuk-recurrence-exact",
                       "(x - k - p(N-2k)) K_k = (k+1) K_{k+1} + pq(N-k+1) K_{k-1}",
                       "N<=6, p=1/4,1/3,1/2,2/3, grid + off-grid x; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
    {
        int bad = 0;
        for (int n = 1; n <= 6; ++n)
            for (const Rational& p : p_grid()) {
                KravchukModel md = monocs::make_model(n, p);
                for (int k = 0; k <= n; ++k)
                    for (int l = 0; l <= n; ++l) {
                        Rational want = k == l ? monocs::kravchuk_norm_sq(md, k) : Rational(0);
                        bad += monocs::poly_orthogonality_sum(md, k, l) != want;
                    }
            }
        out.push_back({"kravchuk-orthogonality-exact",
                       "sum_y rho(y) K_k K_l = delta_kl C(N,k) (pq)^k",
                       "N<=6, p=1/4,1/3,1/2,2/3, all pairs; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
    {
        int bad = 0;
        for (int n = 1; n <= 6; ++n)
            for (const Rational& p : p_grid()) {
                KravchukModel md = monocs::make_model(n, p);
                Rational s(0);
                for (int y = 0; y <= n; ++y) s += monocs::binomial_weight(md, y);
                bad += s != Rational(1);
            }
        out.push_back({"kravchuk-weight-exact", "sum_y C(N,y) p^y q^{N-y} = 1",
                       "N<=6, p=1/4,1/3,1/2,2/3; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
    {
        int bad = 0;
        for (int n : {2, 4, 6})
            for (const Rational& p : p_grid()) {
                KravchukModel md = monocs::make_model(n, p);
                for (int k = 0; k <= n; ++k)
                    for (int j = 0; j <= n; ++j)
                        bad += monocs::eigen_identity_residual_exact(md, k, j) != Rational(0);
            }
        out.push_back({"oscillator-eigen-exact",
                       "D_j K_k(j) - p(N-j) K_k(j+1) - q j K_k(j-1) = (k+1/2) K_k(j)",
                       "N=2,4,6, p=1/4,1/3,1/2,2/3, all k,j; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
    {
        int bad = 0;
        for (int n : {2, 5, 8})
            for (const Rational& p : p_grid()) {
                KravchukModel md = monocs::make_model(n, p);
                Rational q = md.q();
                for (int y = 0; y <= n; ++y)
                    for (const Rational& z : {monocs::ratio(1, 2), monocs::ratio(-2, 3),
                                              Rational(3)}) {
                        Rational lhs(0);
                        for (int k = 0; k <= n; ++k)
                            lhs += monocs::kravchuk_poly(md, k, Rational(y)) *
                                   monocs::pow_int<Rational>(Rational(z / q), k);
                        Rational rhs =
                            monocs::pow_int<Rational>(Rational(1 + z), y) *
                            monocs::pow_int<Rational>(Rational(1 - md.p * z / q), n - y);
                        bad += lhs != rhs;
                    }
            }
        out.push_back({"kp-generating-exact",
                       "sum_k K_k(y) (z/q)^k = (1+z)^y (1 - pz/q)^{N-y}",
                       "N=2,5,8, p=1/4,1/3,1/2,2/3, rational z; residual = failure count",
                       static_cast<double>(bad), 0.0});
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string report_json(const std::vector<IdentityRecord>& records) {
    std::string out = "[\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const IdentityRecord& r = records[i];
        out += "  {\"id\": \"" + json_escape(r.id) + "\", \"equation\": \"" +
               json_escape(r.equation) + "\", \"parameters\": \"" + json_escape(r.parameters) +
               "\", \"residual\": " + num(r.residual) + ", \"tolerance\": " + num(r.tolerance) +
               ", \"pass\": " + (r.pass() ? "true" : "false") + "}";
        out += i + 1 < records.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

int cmd_verify(const RunConfig& rc) {
    if (!rc.backend.empty() && rc.backend != "float" && rc.backend != "rational") {
        std::cerr << "verify: backend must be float or rational\n";
        return 2;
    }
    std::vector<IdentityRecord> records;
    try {
        if (rc.backend != "rational") float_suite(records, rc.perturb);
        if (rc.backend != "float") rational_suite(records);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return 3;
    }
    if (!write_output(rc.output, report_json(records))) {
        std::cerr << "cannot write " << (rc.output.empty() ? "stdout" : rc.output) << '\n';
        return 2;
    }
    int failed = 0;
    for (const IdentityRecord& r : records)
        if (!r.pass()) {
            ++failed;
            std::cerr << "FAIL " << r.id << " residual=" << num(r.residual)
                      << " tolerance=" << num(r.tolerance) << '\n';
        }
    std::cerr << "verify: " << records.size() - failed << "/" << records.size()
              << " identities pass\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig rc;
    bool spectrum = false, matrix = false, functions = false;

    CLI::App app{"monopole coherent-state and finite-oscillator workbench"};
    app.require_subcommand(1);

    CLI::App* basis = app.add_subcommand("basis", "tabulate the level sections over a grid");
    basis->add_option("--two-nu", rc.two_nu, "twice the monopole charge")->required();
    basis->add_option("--m", rc.m, "radial quantum number");
    basis->add_option("--grid", rc.grid_text, "center_re,center_im,half_width,res")->required();
    basis->add_option("--format", rc.format)->check(CLI::IsMember({"csv", "json"}));
    basis->add_option("--output,-o", rc.output, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run every identity suite, report as JSON");
    verify->add_option("--perturb", rc.perturb,
                       "scale the overlap prefactor and measure by 1+eps (fault injection)");
    verify->add_option("--backend", rc.backend, "restrict to one lane: float or rational");
    verify->add_option("--output,-o", rc.output, "report path (default stdout)");

    CLI::App* husimi = app.add_subcommand("husimi", "phase-space density of a state");
    husimi->add_option("--two-nu", rc.two_nu, "twice the monopole charge")->required();
    husimi->add_option("--m", rc.m, "radial quantum number");
    husimi->add_option("--grid", rc.grid_text, "center_re,center_im,half_width,res")->required();
    husimi->add_option("--state-index", rc.state_index, "basis slot 0..N");
    husimi->add_option("--state-z", rc.state_z_text, "coherent label re,im");
    husimi->add_option("--format", rc.format)->check(CLI::IsMember({"csv", "json"}));
    husimi->add_option("--output,-o", rc.output, "output path (default stdout)");

    CLI::App* kravchuk = app.add_subcommand("kravchuk", "finite-oscillator tables");
    kravchuk->add_option("--N", rc.n, "grid size minus one")->required();
    kravchuk->add_option("--p", rc.p_text, "success probability as num/den")->required();
    kravchuk->add_flag("--spectrum", spectrum, "eigenvalues of the oscillator matrix");
    kravchuk->add_flag("--matrix", matrix, "oscillator matrix entries");
    kravchuk->add_flag("--functions", functions, "phi_k(x_j) values");
    kravchuk->add_option("--format", rc.format)->check(CLI::IsMember({"csv", "json"}));
    kravchuk->add_option("--output,-o", rc.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (basis->parsed()) return cmd_basis(rc);
    if (verify->parsed()) return cmd_verify(rc);
    if (husimi->parsed()) return cmd_husimi(rc);
    return cmd_kravchuk(rc, spectrum, matrix, functions);
}
