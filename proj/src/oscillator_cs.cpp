#include "monocs/oscillator_cs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "node_parallel.hpp"

namespace monocs {

OscillatorGscsConfig make_oscillator_config(const SpinLevel& lv, const KravchukModel& md) {
    if (md.n != lv.quanta())
        throw std::invalid_argument(
            "make_oscillator_config: oscillator grid must match the level dimension");
    return OscillatorGscsConfig{lv, md};
}

Complex level_section(const OscillatorGscsConfig& cfg, int k, Complex z) {
    return monopole_harmonic(cfg.level, k - cfg.level.m, z);
}

StateVector kravchuk_gscs(const OscillatorGscsConfig& cfg, Complex z) {
    return gscs_coefficients(cfg.level, z);
}

std::vector<Complex> wavefunction_direct(const OscillatorGscsConfig& cfg, Complex z) {
    const int n = cfg.model.n;
    StateVector amps = kravchuk_gscs(cfg, z);
    std::vector<Complex> out(n + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
        if (amps.a[k] == Complex(0.0)) continue;
        for (int j = 0; j <= n; ++j)
            out[j] += amps.a[k] * kravchuk_function_grid(cfg.model, k, j);
    }
    return out;
}

Complex wavefunction_closed(const OscillatorGscsConfig& cfg, Complex z, int j) {
    const int n = cfg.model.n;
    const int m = cfg.level.m;
    if (j < 0 || j > n) throw std::out_of_range("wavefunction_closed: grid site outside [0, N]");
    if (m > 0 && z == Complex(0.0))
        throw std::domain_error("wavefunction_closed: formula is singular at z = 0 for m > 0");
    double p = to_double(cfg.model.p);
    double q = 1.0 - p;
    double zz = std::norm(z);
    double u = (1.0 - zz) / (1.0 + zz);
    Complex zb = std::conj(z);

    double lw = log_gamma(cfg.level.two_nu + m + 1.0) + log_gamma(m + 1.0) + j * std::log(p) +
                (n - j) * std::log(q) - log_gamma(j + 1.0) - log_gamma(n - j + 1.0);
    Complex pre = std::tgamma(n + 1.0) * pow_int<Complex>(zb, -m) *
                  std::pow(1.0 + zz, -cfg.level.nu()) * std::exp(0.5 * lw);

    Complex total = 0.0;
    Complex zbk = 1.0;
    double poch = 1.0;          // (-N)_k
    double fall = std::tgamma(n + 1.0);  // (N-k)!
    double root = 1.0;          // sqrt(p^k / q^k)
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            zbk *= zb;
            poch *= -n + (k - 1);
            fall /= n - k + 1;
            root *= std::sqrt(p / q);
        }
        double pm = jacobi<double>(m, k - m, n - m - k, u);
        double pk = jacobi<double>(k, -n - 1.0, n - j - k, 1.0 - 2.0 / p);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        total += sign * zbk / (poch * fall) * root * pm * pk;
    }
    return pre * total;
}

Complex wavefunction_m0_closed(const OscillatorGscsConfig& cfg, Complex z, int j) {
    const int n = cfg.model.n;
    if (cfg.level.m != 0)
        throw std::domain_error("wavefunction_m0_closed: level must sit at m = 0");
    if (j < 0 || j > n)
        throw std::out_of_range("wavefunction_m0_closed: grid site outside [0, N]");
    double p = to_double(cfg.model.p);
    double q = 1.0 - p;
    double zz = std::norm(z);
    Complex zb = std::conj(z);
    double lw = log_gamma(n + 1.0) + j * std::log(p) + (n - j) * std::log(q) -
                log_gamma(j + 1.0) - log_gamma(n - j + 1.0);
    return std::exp(0.5 * lw) * std::pow(1.0 + zz, -cfg.level.nu()) *
           pow_int<Complex>(1.0 + std::sqrt(q / p) * zb, j) *
           pow_int<Complex>(1.0 - std::sqrt(p / q) * zb, n - j);
}

Complex BargmannFunction::operator()(Complex z) const {
    Complex total = 0.0;
    for (int k = 0; k <= cfg.model.n; ++k)
        total += std::conj(state.a[k]) * std::conj(level_section(cfg, k, z));
    return total;
}

BargmannFunction bargmann_transform(const OscillatorGscsConfig& cfg, const StateVector& state) {
    if (static_cast<int>(state.a.size()) != cfg.model.n + 1)
        throw std::invalid_argument("bargmann_transform: state size must match the level");
    return BargmannFunction{cfg, state};
}

StateVector reconstruct_state(const OscillatorGscsConfig& cfg,
                              const std::function<Complex(Complex)>& fn,
                              const QuadratureRule& rule) {
    detail::require_rule_for(cfg.level, rule);
    const int dim = cfg.model.n + 1;
    const int nr = rule.radial_count();
    const int na = rule.angular_count;
    std::vector<std::vector<Complex>> slot(nr);
    detail::for_each_index(nr, [&](int i) {
        double t = rule.radial_nodes[i];
        double r = std::sqrt(t / (1.0 - t));
        std::vector<Complex> acc(dim, Complex(0.0));
        for (int a = 0; a < na; ++a) {
            Complex z = std::polar(r, 2.0 * std::numbers::pi * a / na);
            Complex probe = std::conj(fn(z));
            for (int k = 0; k < dim; ++k)
                acc[k] += probe * std::conj(level_section(cfg, k, z));
        }
        for (Complex& c : acc) c *= rule.radial_weights[i] / na;
        slot[i] = std::move(acc);
    });
    StateVector out{cfg.level, std::vector<Complex>(dim, Complex(0.0))};
    for (int i = 0; i < nr; ++i)
        for (int k = 0; k < dim; ++k) out.a[k] += slot[i][k];
    return out;
}

double parseval_residual(const OscillatorGscsConfig& cfg, const StateVector& state,
                         const QuadratureRule& rule) {
    detail::require_rule_for(cfg.level, rule);
    BargmannFunction fn = bargmann_transform(cfg, state);
    const int nr = rule.radial_count();
    const int na = rule.angular_count;
    std::vector<double> slot(nr, 0.0);
    detail::for_each_index(nr, [&](int i) {
        double t = rule.radial_nodes[i];
        double r = std::sqrt(t / (1.0 - t));
        double acc = 0.0;
        for (int a = 0; a < na; ++a)
            acc += std::norm(fn(std::polar(r, 2.0 * std::numbers::pi * a / na)));
        slot[i] = acc * rule.radial_weights[i] / na;
    });
    double integral = 0.0;
    for (int i = 0; i < nr; ++i) integral += slot[i];
    double mass = 0.0;
    for (const Complex& c : state.a) mass += std::norm(c);
    return std::abs(integral - mass);
}

Complex kp_wavefunction(const KravchukModel& md, int y, Complex z) {
    if (y < 0 || y > md.n) throw std::out_of_range("kp_wavefunction: count outside [0, N]");
    double p = to_double(md.p);
    double q = 1.0 - p;
    double weight = to_double(binomial_weight(md, y));
    return std::pow(1.0 + (p / q) * std::norm(z), -0.5 * md.n) *
           pow_int<Complex>(1.0 + z, y) * pow_int<Complex>(1.0 - p * z / q, md.n - y) *
           std::sqrt(weight);
}

double kp_equivalence_residual(const KravchukModel& md, Complex z, int y) {
    SpinLevel lv = make_level(md.n, 0);
    OscillatorGscsConfig cfg = make_oscillator_config(lv, md);
    double p = to_double(md.p);
    double q = 1.0 - p;
    Complex kernel = kp_wavefunction(md, y, z);  // validates y
    Complex arg = std::sqrt(p / q) * std::conj(z);
    std::vector<Complex> grid = wavefunction_direct(cfg, arg);
    return std::abs(grid[y] - kernel);
}

}  // namespace monocs
