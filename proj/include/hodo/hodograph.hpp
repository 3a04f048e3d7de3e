#pragma once

#include <string>
#include <vector>

#include "hodo/potential.hpp"
#include "hodo/types.hpp"

namespace hodo {

// Sector verdict. n_i + 1 is the vanishing order of h at beta_i; (0, 0)
// is the regular sector, anything deeper is a gradient catastrophe class.
struct SingularClass {
  int n1 = 0, n2 = 0;
  bool regular() const { return n1 == 0 && n2 == 0; }
  std::string label() const;
};

struct HodographPoint {
  TimeVector t;  // includes solved time slots
  RiemannPoint p;
  SingularClass cls;
  double grad_norm = 0;        // max |W_i|
  double constraint_norm = 0;  // max |required vanishing ladder entry|
  double offdiag = 0;          // |(b1 - b2) W_12|
  double hess1 = 0, hess2 = 0; // W_11, W_22
  double delta = 0;            // transversality product for singular classes
  int order = 0;
  int iterations = 0;
};

// Newton on (W_1, W_2) = 0 in (beta1, beta2) with the analytic Jacobian
// [[W_11, W_12], [W_12, W_22]], W_12 off-shell from the defining identity.
// Converged points falling into a singular class raise SingularHessian.
HodographPoint solve_regular(const TimeVector& t, const RiemannPoint& seed,
                             const SolveOptions& opt = {});

// Vanishing-order classification from the Taylor coefficients of h at each
// invariant, relative to the largest coefficient there; band within 10x of
// the threshold raises ToleranceAmbiguity instead of guessing.
SingularClass classify(const TimeVector& t, const RiemannPoint& p,
                       const SolveOptions& opt = {});

// Classification plus the full diagnostic block for a point that already
// sits on the hodograph manifold; nothing is solved for.
HodographPoint describe_point(const TimeVector& t, const RiemannPoint& p,
                              const SolveOptions& opt = {});

// Augmented Newton for class (n1, n2): ladder entries k = 1..n_i+1 vanish at
// both invariants. Unknowns are the free time slots plus (beta1, beta2);
// arity requires free_slots.size() == n1 + n2. Free slots start from their
// values in t.
HodographPoint solve_singular(const TimeVector& t, int n1, int n2,
                              const std::vector<int>& free_slots,
                              const RiemannPoint& seed,
                              const SolveOptions& opt = {});

struct GridAxis {
  int slot = 0;
  double lo = 0, hi = 0;
  int count = 1;
  double value(int i) const {
    return count < 2 ? lo : lo + (hi - lo) * i / (count - 1);
  }
};

struct LocusSample {
  double g1 = 0, g2 = 0;
  Status status = Status::Ok;
  HodographPoint point;  // meaningful when status == Ok
};

struct Locus {
  GridAxis a1, a2;
  std::vector<LocusSample> samples;  // row-major, a1 fastest
  int converged = 0;
};

// Catastrophe locus over a rectangle of two fixed-time slots, solving the
// class-(n1, n2) system at every node with continuation seeding from
// neighboring nodes and a coarse scan fallback.
Locus trace_locus(const TimeVector& t, int n1, int n2,
                  const std::vector<int>& free_slots, GridAxis a1, GridAxis a2,
                  const RiemannPoint& seed, const SolveOptions& opt = {});

struct BranchValues {
  double x = 0, b1 = 0, b2 = 0;
};

struct Section3Item {
  int item = 0;  // 1..4
  SingularClass cls;
  BranchValues printed;    // closed form exactly as printed
  BranchValues corrected;  // with the two repaired terms
  BranchValues solver;
  Status solver_status = Status::Ok;
  double solver_residual = 0;
  double printed_dist = 0, corrected_dist = 0;
};

struct Section3Report {
  double t2 = 0, t3 = 0, t4 = 0;
  double radicand = 0;  // 3 t3^2 - 8 t2 t4
  std::vector<Section3Item> items;
};

// Solves both branches of the (1,0) and (0,1) loci for the three-parameter
// family and compares against the four printed closed-form branches and
// their corrected variants.
Section3Report compare_section3(double t2, double t3, double t4,
                                const SolveOptions& opt = {});

}  // namespace hodo
