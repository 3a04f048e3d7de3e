#include "hodo/flows.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "hodo/potential.hpp"

namespace hodo {

namespace {

struct NodeFailure {
  int ix = -1, is = -1;
  Status status = Status::Ok;
  std::string message;
};

// Full grid of converged points. Column ix = 0 is a sequential continuation
// chain in s; every row then continues in x from its head. Rows only read
// the shared column head, so splitting rows across threads is safe and the
// results do not depend on the thread count.
class PatchSolver {
 public:
  PatchSolver(const TimeVector& base, int xslot, int sslot, const FlowGrid& g,
              const SolveOptions& opt)
      : base_(base), xslot_(xslot), sslot_(sslot), g_(g), opt_(opt) {
    pts_.resize(g.nx * g.ns);
    failures_.resize(g.ns);
  }

  double xval(int ix) const {
    return g_.x_lo + ix * (g_.x_hi - g_.x_lo) / (g_.nx - 1);
  }
  double sval(int is) const {
    return g_.s_lo + is * (g_.s_hi - g_.s_lo) / (g_.ns - 1);
  }
  const RiemannPoint& at(int ix, int is) const {
    return pts_[is * g_.nx + ix];
  }

  void run(const RiemannPoint& seed, int jobs) {
    for (int is = 0; is < g_.ns; ++is) {
      if (!solve_node(0, is, is == 0 ? seed : at(0, is - 1))) break;
    }
    int rows = g_.ns;
    int threads = std::max(1, std::min(jobs, rows));
    if (threads == 1) {
      for (int is = 0; is < rows; ++is) sweep_row(is);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([this, w, threads, rows] {
          for (int is = w; is < rows; is += threads) sweep_row(is);
        });
      for (auto& th : pool) th.join();
    }
    for (const auto& f : failures_)
      if (f.ix >= 0) {
        std::ostringstream os;
        os << "hodograph solve failed at node (" << f.ix << ", " << f.is
           << "): " << f.message;
        throw HodoError(Status::GridCrossesSingularity, os.str());
      }
  }

 private:
  void sweep_row(int is) {
    if (failures_[is].ix == 0) return;  // column head already failed
    for (int ix = 1; ix < g_.nx; ++ix)
      if (!solve_node(ix, is, at(ix - 1, is))) break;
  }

  bool solve_node(int ix, int is, const RiemannPoint& from) {
    TimeVector t = base_;
    if (xslot_ == sslot_)
      t.set(xslot_, xval(ix) + sval(is));
    else {
      t.set(xslot_, xval(ix));
      t.set(sslot_, sval(is));
    }
    try {
      pts_[is * g_.nx + ix] = solve_regular(t, from, opt_).p;
      return true;
    } catch (const HodoError& e) {
      failures_[is] = {ix, is, e.status, e.what()};
      return false;
    }
  }

  const TimeVector& base_;
  int xslot_, sslot_;
  FlowGrid g_;
  const SolveOptions& opt_;
  std::vector<RiemannPoint> pts_;
  std::vector<NodeFailure> failures_;  // at most one per row
};

FlowGrid with_defaults(FlowGrid g) {
  if (g.nx <= 0) g.nx = 1001;
  if (g.ns <= 0) g.ns = 1001;
  if (g.nx < 3 || g.ns < 3)
    throw HodoError(Status::InvalidInput,
                    "flow grids need at least three nodes per axis");
  if (!(g.x_hi > g.x_lo) || !(g.s_hi > g.s_lo))
    throw HodoError(Status::InvalidInput, "empty flow patch");
  return g;
}

FlowField flow_residual(Hierarchy hy, int n, const TimeVector& base,
                        const RiemannPoint& seed, const FlowGrid& grid,
                        int jobs, const SolveOptions& opt) {
  if (base.hierarchy != hy)
    throw HodoError(Status::InvalidInput, "time vector hierarchy mismatch");
  int xslot = hy == Hierarchy::Benney ? 1 : 0;
  if (n < xslot)
    throw HodoError(Status::InvalidInput, "flow index below the space slot");
  FlowGrid g = with_defaults(grid);

  PatchSolver ps(base, xslot, n, g, opt);
  ps.run(seed, jobs);

  FlowField out;
  out.hierarchy = hy;
  out.flow = n;
  out.t = base;
  out.hx = (g.x_hi - g.x_lo) / (g.nx - 1);
  out.hs = (g.s_hi - g.s_lo) / (g.ns - 1);
  out.chart_form = n == xslot + 1;
  out.nodes = g.nx * g.ns;
  out.min_v = uv_map(ps.at(0, 0)).v;
  out.samples.reserve((g.nx - 2) * (g.ns - 2));

  TimeVector tnode = base;
  for (int is = 1; is + 1 < g.ns; ++is)
    for (int ix = 1; ix + 1 < g.nx; ++ix) {
      FlowSample smp;
      smp.x = ps.xval(ix);
      smp.s = ps.sval(is);
      smp.p = ps.at(ix, is);
      out.min_v = std::min(out.min_v, uv_map(smp.p).v);

      if (xslot == n) {
        tnode.set(xslot, smp.x + smp.s);
      } else {
        tnode.set(xslot, smp.x);
        tnode.set(n, smp.s);
      }
      const auto &xm = ps.at(ix - 1, is), &xp = ps.at(ix + 1, is);
      const auto &sm = ps.at(ix, is - 1), &sp = ps.at(ix, is + 1);
      double b1x = (xp.b1.real() - xm.b1.real()) / (2 * out.hx);
      double b2x = (xp.b2.real() - xm.b2.real()) / (2 * out.hx);
      double b1s = (sp.b1.real() - sm.b1.real()) / (2 * out.hs);
      double b2s = (sp.b2.real() - sm.b2.real()) / (2 * out.hs);
      smp.res1 = b1s - char_speed(hy, n, smp.p, 1) * b1x;
      smp.res2 = b2s - char_speed(hy, n, smp.p, 2) * b2x;
      out.max_res1 = std::max(out.max_res1, std::abs(smp.res1));
      out.max_res2 = std::max(out.max_res2, std::abs(smp.res2));

      if (out.chart_form) {
        UV c = uv_map(smp.p);
        UV cxm = uv_map(xm), cxp = uv_map(xp);
        UV csm = uv_map(sm), csp = uv_map(sp);
        double ux = (cxp.u - cxm.u) / (2 * out.hx);
        double vx = (cxp.v - cxm.v) / (2 * out.hx);
        double us = (csp.u - csm.u) / (2 * out.hs);
        double vs = (csp.v - csm.v) / (2 * out.hs);
        if (hy == Hierarchy::Benney) {
          smp.res_u = us + c.u * ux + vx;
          smp.res_v = vs + ux * c.v + c.u * vx;
        } else {
          smp.res_u = us + vx;
          smp.res_v = vs + c.v * ux;
        }
        out.max_res_u = std::max(out.max_res_u, std::abs(smp.res_u));
        out.max_res_v = std::max(out.max_res_v, std::abs(smp.res_v));
      }
      out.samples.push_back(smp);
    }
  return out;
}

}  // namespace

FlowField benney_flow_residual(int n, const TimeVector& t,
                               const RiemannPoint& seed, const FlowGrid& g,
                               int jobs, const SolveOptions& opt) {
  return flow_residual(Hierarchy::Benney, n, t, seed, g, jobs, opt);
}

FlowField dtoda_flow_residual(int n, const TimeVector& x,
                              const RiemannPoint& seed, const FlowGrid& g,
                              int jobs, const SolveOptions& opt) {
  return flow_residual(Hierarchy::DToda, n, x, seed, g, jobs, opt);
}

FlowOrder flow_convergence(Hierarchy hy, int n, const TimeVector& t,
                           const RiemannPoint& seed, const FlowGrid& g,
                           int jobs, const SolveOptions& opt) {
  FlowOrder ord;
  ord.coarse = flow_residual(hy, n, t, seed, with_defaults(g), jobs, opt);
  FlowGrid fine = with_defaults(g);
  fine.nx = 2 * fine.nx - 1;
  fine.ns = 2 * fine.ns - 1;
  ord.fine = flow_residual(hy, n, t, seed, fine, jobs, opt);
  ord.order1 = std::log2(ord.coarse.max_res1 / ord.fine.max_res1);
  ord.order2 = std::log2(ord.coarse.max_res2 / ord.fine.max_res2);
  return ord;
}

InitialSlice initial_data_slice(double t3, double t4, double x_lo,
                                double x_hi, int count,
                                const RiemannPoint& seed,
                                const SolveOptions& opt) {
  if (count < 2) throw HodoError(Status::InvalidInput, "need two samples");
  InitialSlice out;
  out.x.reserve(count);
  out.beta.reserve(count);
  RiemannPoint from = seed;
  for (int i = 0; i < count; ++i) {
    double x = x_lo + i * (x_hi - x_lo) / (count - 1);
    TimeVector t = TimeVector::benney({x, 0.0, t3, t4});
    try {
      from = solve_regular(t, from, opt).p;
    } catch (const HodoError& e) {
      std::ostringstream os;
      os << "initial slice breaks down at x = " << x << ": " << e.what();
      throw HodoError(Status::GridCrossesSingularity, os.str());
    }
    out.x.push_back(x);
    out.beta.push_back(from);
  }
  return out;
}

}  // namespace hodo
