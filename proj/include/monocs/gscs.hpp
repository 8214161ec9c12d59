#pragma once

#include <complex>
#include <vector>

#include "monocs/monopole.hpp"
#include "monocs/quadrature.hpp"

namespace monocs {

// Amplitudes of a state expanded over the sections of one level; slot q holds
// the coefficient of section j_min + q.
struct StateVector {
    SpinLevel level;
    std::vector<Complex> a;
};

// Number of states resolving the identity per unit measure: 2(nu+m)+1.
int normalization_factor(const SpinLevel& lv);

// Spin-nu coherent state, bottom level: a_k = (1+zz~)^{-nu} sqrt(C(2nu,k)) z^k.
StateVector scs_coefficients(int two_nu, Complex z);

// Coherent family over an arbitrary level: a_j = conj(Phi~_j(z)) / sqrt(N+1).
// Unit norm for every chart point.
StateVector gscs_coefficients(const SpinLevel& lv, Complex z);

// <x|y>; both states must live on the same level.
Complex state_dot(const StateVector& x, const StateVector& y);

// <z|w> summed over the level's sections.
Complex overlap_direct(const SpinLevel& lv, Complex z, Complex w);

// <z|w> = (1+zw~)^{2nu} ((1+zz~)(1+ww~))^{-nu}
//           * 2F1(-m, 2nu+m+1; 1; |z-w|^2/((1+zz~)(1+ww~))).
Complex overlap_closed(const SpinLevel& lv, Complex z, Complex w);

// Exact certificates for real rational z, w: both routes multiplied by
// (N+1)^{0 or 1} and the envelope ((1+z^2)(1+w^2))^nu, which clears every
// square root. Equal as rational numbers.
Rational overlap_direct_cleared(const SpinLevel& lv, const Rational& z, const Rational& w);
Rational overlap_closed_cleared(const SpinLevel& lv, const Rational& z, const Rational& w);

// sqrt(2 - 2 Re<z|w>), the chordal distance between family members.
double cs_distance(const SpinLevel& lv, Complex z, Complex w);

// Max-norm departure of integral |z><z| N dmu from the identity, with the
// radial weight taken through meijer_g1111(zz~ | -1; 0). measure_scale
// multiplies the measure (1.0 recovers the true statement).
double identity_resolution_residual(const SpinLevel& lv, const QuadratureRule& rule,
                                    double measure_scale = 1.0);

// Husimi density |<z|psi>|^2 of a state against the coherent family.
double husimi(const StateVector& psi, Complex z);

// Worst gap over photon numbers k <= min(2nu, 20) between the spin amplitude
// at z = zeta/sqrt(2nu) and the flat-oscillator amplitude
// e^{-|zeta|^2/2} zeta^k / sqrt(k!). Requires |zeta|^2 < 2nu.
double glauber_contraction_error(int two_nu, Complex zeta);

}  // namespace monocs
