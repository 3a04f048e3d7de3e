#pragma once

#include <vector>

#include "hodo/hodograph.hpp"

namespace hodo {

// Rectangular verification patch in (x, s), where x is the space slot
// (t_1 or x_0) and s the driving flow time. Node counts of zero pick the
// default resolution, steps of 1e-3 of the patch width per axis.
struct FlowGrid {
  double x_lo = 0, x_hi = 0;
  double s_lo = 0, s_hi = 0;
  int nx = 0, ns = 0;
};

struct FlowSample {
  double x = 0, s = 0;
  RiemannPoint p;
  double res1 = 0, res2 = 0;    // invariant-form residuals
  double res_u = 0, res_v = 0;  // chart-form residuals, when chart_form
};

struct FlowField {
  Hierarchy hierarchy = Hierarchy::Benney;
  int flow = 0;
  TimeVector t;  // base time vector the patch was cut from
  double hx = 0, hs = 0;
  std::vector<FlowSample> samples;  // interior nodes, x fastest
  double max_res1 = 0, max_res2 = 0;
  double max_res_u = 0, max_res_v = 0;
  // res_u/res_v carry the long-wave system (t2 flow) or its dual (x1 flow);
  // other flows have no two-field chart form and leave them zero.
  bool chart_form = false;
  double min_v = 0;  // invariant gap squared over 4; positive means hyperbolic
  int nodes = 0;     // solver calls made
};

// Solve the hodograph system on every node of the patch (continuation
// seeding along the first column, then along rows; rows are independent,
// so jobs > 1 splits them across threads without changing any result),
// then form centered-difference residuals of the n-th flow
//   d beta_i / d s - speed_i * d beta_i / d x
// on interior nodes. Any failed node raises GridCrossesSingularity.
FlowField benney_flow_residual(int n, const TimeVector& t,
                               const RiemannPoint& seed, const FlowGrid& g,
                               int jobs = 1, const SolveOptions& opt = {});
FlowField dtoda_flow_residual(int n, const TimeVector& x,
                              const RiemannPoint& seed, const FlowGrid& g,
                              int jobs = 1, const SolveOptions& opt = {});

// The same patch at steps (h, h/2): observed convergence order per
// invariant, log2 of the max-norm ratio.
struct FlowOrder {
  FlowField coarse, fine;
  double order1 = 0, order2 = 0;
};
FlowOrder flow_convergence(Hierarchy hy, int n, const TimeVector& t,
                           const RiemannPoint& seed, const FlowGrid& g,
                           int jobs = 1, const SolveOptions& opt = {});

// beta(x) at t2 = 0: the curve of initial data the higher times t3, t4
// parametrize for the long-wave system.
struct InitialSlice {
  std::vector<double> x;
  std::vector<RiemannPoint> beta;
};
InitialSlice initial_data_slice(double t3, double t4, double x_lo,
                                double x_hi, int count,
                                const RiemannPoint& seed,
                                const SolveOptions& opt = {});

}  // namespace hodo
