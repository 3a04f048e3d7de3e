#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hodo/poly.hpp"
#include "hodo/rational.hpp"
#include "hodo/types.hpp"

namespace hodo {

// Sector verdict on the elliptic side. n + 1 is the number of vanishing
// ladder entries d^k W / d conj(beta)^k, so n = 0 is a regular critical
// point and n >= 1 lies on the codimension-2n singular stratum.
struct EllipticClass {
  int n = 0;
  bool regular() const { return n == 0; }
  std::string label() const;
};

struct EllipticCriticalPoint {
  TimeVector t;
  std::complex<double> beta;  // normalized to Im(beta) > 0
  EllipticClass cls;
  double grad_norm = 0;   // |dW/d conj(beta)|
  double hess_norm = 0;   // |d^2 W / d conj(beta)^2|
  double third_norm = 0;  // |d^3 W / d conj(beta)^3|
  double w = 0;
  int iterations = 0;
};

// Complex pure ladder P_k = d^k W / d beta^k, k = 1..depth, together with
// the mixed ladder M_k = d_conj d^k W, k = 0..depth-1, at (beta, conj beta).
// M_0 = conj(P_1); the rest follow from the defining identity across the
// gap beta - conj(beta) = 2i Im(beta). Symmetry of the second derivative
// makes M_1 real; higher entries are genuinely complex.
struct EllipticTowers {
  std::vector<std::complex<double>> pure;
  std::vector<std::complex<double>> mixed;
};
EllipticTowers elliptic_towers(const TimeVector& t, std::complex<double> beta,
                               int depth);

double eval_w_elliptic(const TimeVector& t, double bu, double bv);

// First- and second-order data in the (u, v) chart at an elliptic point,
// u = -(beta1+beta2), v = (beta1-beta2)^2/4 < 0.
struct ChartDerivs {
  double u = 0, v = 0;
  double w = 0;
  double wu = 0, wv = 0;
  double wuu = 0, wuv = 0, wvv = 0;
};
ChartDerivs chart_derivs(const TimeVector& t, std::complex<double> beta);

// Vanishing order of the ladder at beta, relative to the largest Taylor
// coefficient of h there. Off the critical manifold raises NotOnManifold;
// verdicts within a decade of the threshold raise ToleranceAmbiguity.
EllipticClass classify_elliptic(const TimeVector& t,
                                std::complex<double> beta,
                                const SolveOptions& opt = {});

// Newton on Re/Im of dW/d conj(beta) = 0 over (Re beta, Im beta). Returns
// the critical point with its sector verdict; does not insist on a regular
// Hessian. Pairs drifting into the real axis raise RealCollapse.
EllipticCriticalPoint solve_elliptic(const TimeVector& t,
                                     std::complex<double> seed,
                                     const SolveOptions& opt = {});

// Newton on the four real conditions d W/d conj(beta) = d^2 W/d conj(beta)^2
// = 0 over (two free time slots, Re beta, Im beta); this is the first
// singular stratum, codimension two. free_slots.size() must be 2. A third
// ladder entry below tolerance raises DeeperSingularity.
EllipticCriticalPoint find_catastrophe(const TimeVector& t,
                                       const std::vector<int>& free_slots,
                                       std::complex<double> seed,
                                       const SolveOptions& opt = {});

// Exact series entries as polynomials: entry k is C_k evaluated on
// a = U, b = U^2 + V^2 (variables x = U, y = V), or on a = -u/2,
// b = u^2/4 - v (variables x = u, y = v). Index 0 holds C_0 = 1.
std::vector<Poly2<Rational>> series_entries_bUV(const Rational& eps,
                                                int order);
std::vector<Poly2<Rational>> series_entries_uv(const Rational& eps,
                                               int order);

}  // namespace hodo
