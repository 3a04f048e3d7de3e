#pragma once

#include <complex>
#include <vector>

#include "hodo/poly.hpp"
#include "hodo/series.hpp"
#include "hodo/types.hpp"

namespace hodo {

// Potential value at a point. Real by construction on hyperbolic points and
// on conjugate pairs (the recurrence runs over real a, b in both sectors).
double eval_w(const TimeVector& t, const RiemannPoint& p);

// Same sum over a fully complex recurrence, for arbitrary (b1, b2) pairs.
// Used for reality cross-checks and general-eps experiments.
std::complex<double> eval_w_complex(const TimeVector& t,
                                    std::complex<double> b1,
                                    std::complex<double> b2);

// Potential as a function on the (u, v) chart: a = -u/2, b = u^2/4 - v.
// Valid on both sides of v = 0.
double eval_w_uv(const TimeVector& t, double u, double v);

// The polynomial part h of f(lambda) / sqrt((lambda-b1)(lambda-b2)) for
// Benney times (degree N-1) or of g(lambda) sqrt(...) / lambda for dToda
// times (degree N). Coefficients depend on the point through a and b only,
// hence are real for conjugate pairs as well.
Poly1<double> h_polynomial(const TimeVector& t, const RiemannPoint& p);

// Pure derivative ladder d^k W / d beta_i^k for k = 1..max_k, from Taylor
// coefficients of h at beta_i:
//   Benney:  (2k-1)!!/2^k  * taylor_{k-1}(h, beta_i)
//   dToda:  -(2k-3)!!/2^k  * taylor_{k-1}(h, beta_i), (-1)!! = 1.
std::vector<double> derivative_tower(const TimeVector& t,
                                     const RiemannPoint& p, int invariant,
                                     int max_k);

// Both pure ladders plus the mixed ladders obtained from the defining
// second-order identity: with M_k = d_j d_i^k W and P_k the pure ladder,
//   M_{k+1} = (eps P_{k+1} - (eps + k) M_k) / (beta_i - beta_j),  M_0 = W_j.
struct Towers {
  std::vector<double> pure1, pure2;    // index k-1 holds order k, k >= 1
  std::vector<double> mixed1, mixed2;  // mixed_i[k] = d_j d_i^k W, k >= 0
};
Towers derivative_towers(const TimeVector& t, const RiemannPoint& p,
                         int depth);

// Elliptic ladder: d^k W / d beta^k at (beta, conj beta), k = 1..max_k.
std::vector<std::complex<double>> beta_tower(const TimeVector& t,
                                             std::complex<double> beta,
                                             int max_k);

// Mixed second derivative W_12; real on conjugate pairs.
double mixed_12(const TimeVector& t, const RiemannPoint& p);

// Characteristic speed of the n-th flow in invariant i at p:
//   Benney sum_{k<=n-1} C_k^(1/2) beta_i^{n-1-k}   (n >= 1)
//   dToda  sum_{k<=n}   C_k^(-1/2) beta_i^{n-k}    (n >= 0)
double char_speed(Hierarchy h, int n, const RiemannPoint& p, int invariant);

// h ladder for a unit time vector concentrated in one slot; linearity in t
// makes these the time-columns of solver Jacobians.
std::vector<double> slot_tower(const TimeVector& shape, int slot,
                               const RiemannPoint& p, int invariant,
                               int max_k);

}  // namespace hodo
