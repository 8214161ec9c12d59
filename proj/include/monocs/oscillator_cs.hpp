#pragma once

#include <functional>

#include "monocs/gscs.hpp"
#include "monocs/kravchuk.hpp"
#include "monocs/monopole.hpp"
#include "monocs/quadrature.hpp"

namespace monocs {

// Identification of a monopole level with the finite oscillator that shares
// its dimension: energy index k = 0..N pairs with section j = k - m, grid
// site j = 0..N with position x_j = j - Np. Requires model.n == level N.
struct OscillatorGscsConfig {
    SpinLevel level;
    KravchukModel model;
};

OscillatorGscsConfig make_oscillator_config(const SpinLevel& lv, const KravchukModel& md);

// Section of the level paired with energy index k (the k = m + j shift).
Complex level_section(const OscillatorGscsConfig& cfg, int k, Complex z);

// Coherent state over the oscillator eigenbasis; slot k carries
// conj(level_section(k, z)) / sqrt(N+1). Same amplitudes as
// gscs_coefficients, re-read through the energy pairing.
StateVector kravchuk_gscs(const OscillatorGscsConfig& cfg, Complex z);

// Position wavefunction of |z> on the full grid:
//   <x_j|z> = (N+1)^{-1/2} sum_k conj(level_section(k, z)) phi_k(x_j).
std::vector<Complex> wavefunction_direct(const OscillatorGscsConfig& cfg, Complex z);

// Same amplitude at one site through the hypergeometric closed form; needs
// z != 0 whenever m > 0 (the prefactor carries conj(z)^{-m}).
Complex wavefunction_closed(const OscillatorGscsConfig& cfg, Complex z, int j);

// Bottom-level (m = 0) product closed form.
Complex wavefunction_m0_closed(const OscillatorGscsConfig& cfg, Complex z, int j);

// Entire function representing a state against the coherent family:
//   B(z) = sum_k conj(a_k) conj(level_section(k, z)).
struct BargmannFunction {
    OscillatorGscsConfig cfg;
    StateVector state;
    Complex operator()(Complex z) const;
};

BargmannFunction bargmann_transform(const OscillatorGscsConfig& cfg, const StateVector& state);

// Inverse against the invariant measure: slot k of the result is
// integral conj(fn(z)) conj(level_section(k, z)) dmu(z). Composing with the
// transform returns the original amplitudes (each map is antilinear).
StateVector reconstruct_state(const OscillatorGscsConfig& cfg,
                              const std::function<Complex(Complex)>& fn,
                              const QuadratureRule& rule);

// |integral |B|^2 dmu - sum_k |a_k|^2|.
double parseval_residual(const OscillatorGscsConfig& cfg, const StateVector& state,
                         const QuadratureRule& rule);

// Binomial-kernel coherent wavefunction on counts y = 0..N:
//   <y|z> = (1 + (p/q) zz~)^{-N/2} (1+z)^y (1 - pz/q)^{N-y} sqrt(C(N,y) p^y q^{N-y}).
Complex kp_wavefunction(const KravchukModel& md, int y, Complex z);

// Gap between the m = 0 position wavefunction at sqrt(p/q) z~ and the
// binomial kernel at z; the two families coincide.
double kp_equivalence_residual(const KravchukModel& md, Complex z, int y);

}  // namespace monocs
