#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodo/rational.hpp"

namespace hodo {

enum class Status {
  Ok = 0,
  InvalidInput,
  NoConvergence,
  Collapse,          // hyperbolic roots merged below merge tolerance
  RealCollapse,      // elliptic pair hit the real axis
  SingularHessian,
  DegenerateDelta,
  BadArity,
  RadicandNegative,
  ToleranceAmbiguity,
  AllCoefficientsVanish,
  EmptyLocus,
  DeeperSingularity,
  GridCrossesSingularity,
  NotOnManifold,
  Unsupported,
  Internal,
};

const char* status_name(Status s);

struct HodoError : std::runtime_error {
  Status status;
  HodoError(Status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
};

enum class Hierarchy { Benney, DToda, GeneralEps };

const char* hierarchy_name(Hierarchy h);
Hierarchy hierarchy_from_name(const std::string& name);

// Exponent in the generating function (1 - 2 a w + b w^2)^(-eps).
Rational hierarchy_eps(Hierarchy h);

// Times for one hierarchy. Benney slots are x=t_1, t_2, ..., t_N (index 1
// based); dToda slots are x_0, x_1, ..., x_N (index 0 based). GeneralEps
// follows the Benney indexing with a caller-chosen eps.
struct TimeVector {
  Hierarchy hierarchy = Hierarchy::Benney;
  Rational eps = Rational(1, 2);
  int first = 1;                // lowest slot index
  std::vector<double> values;   // values[k] is slot first+k

  static TimeVector benney(std::vector<double> vals);
  static TimeVector dtoda(std::vector<double> vals);
  static TimeVector general(const Rational& eps, std::vector<double> vals);

  // "x=1,t2=-0.5,t4=1/3" (benney) or "x0=1,x1=2" (dtoda). Omitted slots in
  // between are zero. "x" and "t1" are synonyms, as are "x0" and "t0".
  static TimeVector parse(Hierarchy h, const std::string& spec,
                          const Rational& eps = Rational(1, 2));

  int top() const { return first + static_cast<int>(values.size()) - 1; }
  double at(int n) const {
    int k = n - first;
    if (k < 0 || k >= static_cast<int>(values.size())) return 0.0;
    return values[k];
  }
  void set(int n, double v);
  std::string slot_name(int n) const;
  // Slot index from a name like "t3" or "x2"; throws on unknown names.
  int slot_index(const std::string& name) const;
  std::string format() const;
};

// A point of the Riemann-invariant plane. Hyperbolic points are two real
// values; elliptic points are a conjugate pair with nonzero imaginary part.
struct RiemannPoint {
  std::complex<double> b1, b2;

  static RiemannPoint hyperbolic(double beta1, double beta2) {
    return {std::complex<double>(beta1, 0.0), std::complex<double>(beta2, 0.0)};
  }
  static RiemannPoint elliptic(std::complex<double> beta) {
    return {beta, std::conj(beta)};
  }

  bool is_hyperbolic() const { return b1.imag() == 0.0 && b2.imag() == 0.0; }
  std::complex<double> a() const { return 0.5 * (b1 + b2); }
  std::complex<double> bprod() const { return b1 * b2; }
};

// u = -(beta1+beta2), v = (beta1-beta2)^2/4. Both real on either sector;
// v > 0 on hyperbolic points, v < 0 on elliptic ones (beta = U +- iV gives
// u = -2U, v = -V^2).
struct UV {
  double u, v;
};
UV uv_map(const RiemannPoint& p);
// v > 0: returns the ordered real pair (beta1 >= beta2). v < 0: returns the
// conjugate pair with Im(beta1) > 0. v == 0 is rejected.
RiemannPoint uv_unmap(double u, double v);

struct SolveOptions {
  double tol = 1e-12;        // Newton residual target (max norm)
  int max_iter = 100;
  double merge_tol = 1e-8;   // |b1-b2| (or |Im beta|) below this -> collapse
  double zero_tol = 1e-8;    // relative threshold for classification
  double sing_tol = 1e-8;    // Hessian-diagonal degeneracy threshold
  double seed_range = 3.0;   // half-width of the coarse seeding scan
  int order = 0;             // series truncation override, 0 = automatic
};

// Gaussian elimination with partial pivoting for the small dense systems the
// solvers produce (n <= 6). Throws SingularHessian on pivot collapse.
std::vector<double> solve_linear(std::vector<std::vector<double>> A,
                                 std::vector<double> rhs);

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace hodo
