#include "hodo/hodograph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "newton.hpp"

namespace hodo {

namespace {

// A converged root is spurious when the iteration was still marching
// relative to the separation of the invariants, or when that separation
// sits below the resolution of the classification ladders; both mean the
// branch has collapsed.
void reject_merged(const NewtonResult& res, double b1, double b2,
                   const SolveOptions& opt) {
  double gap = std::abs(b1 - b2);
  if (res.last_step > 0.05 * gap ||
      gap < std::sqrt(opt.sing_tol) * (1.0 + std::abs(b1) + std::abs(b2)))
    throw HodoError(Status::Collapse, "invariants merge along this branch");
}

void require_hyperbolic_seed(const RiemannPoint& p) {
  if (!p.is_hyperbolic())
    throw HodoError(Status::InvalidInput, "seed must be hyperbolic");
}

int h_degree(const TimeVector& t) {
  return t.first == 0 ? t.top() : t.top() - 1;
}

// Vanishing order of h at beta and the ambiguity verdict: first Taylor
// coefficient above zero_tol relative to the largest one, flagged when any
// decision sits within a factor 10 of the threshold.
std::pair<int, bool> vanishing_order(const std::vector<double>& h, double beta,
                                     double zero_tol) {
  auto tay = taylor_at(h, beta, static_cast<int>(h.size()));
  double scale = max_abs(tay);
  if (scale == 0.0)
    throw HodoError(Status::AllCoefficientsVanish,
                    "h vanishes identically to truncation order");
  if (!std::isfinite(scale))
    throw HodoError(Status::InvalidInput, "h coefficients are not finite");
  const double thr = zero_tol * scale;
  int f = 0;
  while (std::abs(tay[f]) <= thr) ++f;
  bool amb = std::abs(tay[f]) < 10.0 * thr;
  for (int j = 0; j < f; ++j)
    if (std::abs(tay[j]) > 0.1 * thr) amb = true;
  return {f, amb};
}

}  // namespace

std::string SingularClass::label() const {
  if (regular()) return "regular";
  std::ostringstream os;
  os << "sing(" << n1 << "," << n2 << ")";
  return os.str();
}

SingularClass classify(const TimeVector& t, const RiemannPoint& p,
                       const SolveOptions& opt) {
  require_hyperbolic_seed(p);
  double b1 = p.b1.real(), b2 = p.b2.real();
  if (std::abs(b1 - b2) < opt.merge_tol)
    throw HodoError(Status::Collapse, "invariants coincide; class undefined");
  auto h = h_polynomial(t, p).c;
  auto [f1, a1] = vanishing_order(h, b1, opt.zero_tol);
  auto [f2, a2] = vanishing_order(h, b2, opt.zero_tol);
  if (a1 || a2)
    throw HodoError(Status::ToleranceAmbiguity,
                    "coefficient within a decade of zero_tol; verdict withheld");
  if (f1 == 0 || f2 == 0)
    throw HodoError(Status::NotOnManifold,
                    "point does not satisfy the hodograph equations");
  return {f1 - 1, f2 - 1};
}

HodographPoint describe_point(const TimeVector& t, const RiemannPoint& p,
                              const SolveOptions& opt) {
  HodographPoint out;
  out.t = t;
  out.p = p;
  out.cls = classify(t, p, opt);
  int depth = std::max(out.cls.n1, out.cls.n2) + 2;
  auto tw = derivative_towers(t, p, depth);
  out.grad_norm = std::max(std::abs(tw.pure1[0]), std::abs(tw.pure2[0]));
  double cmax = 0.0;
  for (int k = 0; k <= out.cls.n1; ++k)
    cmax = std::max(cmax, std::abs(tw.pure1[k]));
  for (int k = 0; k <= out.cls.n2; ++k)
    cmax = std::max(cmax, std::abs(tw.pure2[k]));
  out.constraint_norm = cmax;
  out.offdiag =
      std::abs((p.b1.real() - p.b2.real()) * tw.mixed1[1]);
  out.hess1 = tw.pure1[1];
  out.hess2 = tw.pure2[1];
  if (!out.cls.regular())
    out.delta = tw.pure1[out.cls.n1 + 1] * tw.pure2[out.cls.n2 + 1];
  out.order = t.top();
  return out;
}

HodographPoint solve_regular(const TimeVector& t, const RiemannPoint& seed,
                             const SolveOptions& opt) {
  require_hyperbolic_seed(seed);
  std::vector<double> z = {seed.b1.real(), seed.b2.real()};
  Problem pb;
  pb.guard = [&](const std::vector<double>& w) {
    if (std::abs(w[0] - w[1]) < opt.merge_tol)
      throw HodoError(Status::Collapse, "invariants merged");
  };
  pb.eval = [&](const std::vector<double>& w, std::vector<double>& F,
                std::vector<std::vector<double>>* J) {
    RiemannPoint p = RiemannPoint::hyperbolic(w[0], w[1]);
    if (J) {
      auto tw = derivative_towers(t, p, 2);
      F = {tw.pure1[0], tw.pure2[0]};
      *J = {{tw.pure1[1], tw.mixed1[1]}, {tw.mixed2[1], tw.pure2[1]}};
    } else {
      F = {derivative_tower(t, p, 1, 1)[0], derivative_tower(t, p, 2, 1)[0]};
    }
  };
  HodographPoint out;
  NewtonResult res = newton(z, pb, opt);
  reject_merged(res, z[0], z[1], opt);
  out.iterations = res.iterations;
  out.t = t;
  out.p = RiemannPoint::hyperbolic(z[0], z[1]);
  auto tw = derivative_towers(t, out.p, 2);
  out.grad_norm = std::max(std::abs(tw.pure1[0]), std::abs(tw.pure2[0]));
  out.offdiag = std::abs((z[0] - z[1]) * tw.mixed1[1]);
  out.hess1 = tw.pure1[1];
  out.hess2 = tw.pure2[1];
  out.order = t.top();
  out.cls = classify(t, out.p, opt);
  if (!out.cls.regular())
    throw HodoError(Status::SingularHessian,
                    "converged onto the singular locus " + out.cls.label() +
                        "; reclassify with the singular solver");
  return out;
}

HodographPoint solve_singular(const TimeVector& t0, int n1, int n2,
                              const std::vector<int>& free_slots,
                              const RiemannPoint& seed,
                              const SolveOptions& opt) {
  require_hyperbolic_seed(seed);
  if (n1 < 0 || n2 < 0 || n1 + n2 < 1)
    throw HodoError(Status::InvalidInput,
                    "class orders must be nonnegative with n1 + n2 >= 1");
  if (static_cast<int>(free_slots.size()) != n1 + n2)
    throw HodoError(Status::BadArity,
                    "class (" + std::to_string(n1) + "," + std::to_string(n2) +
                        ") needs exactly " + std::to_string(n1 + n2) +
                        " free time slots");
  for (std::size_t i = 0; i < free_slots.size(); ++i) {
    if (free_slots[i] < t0.first || free_slots[i] > t0.top())
      throw HodoError(Status::InvalidInput, "free slot out of range");
    for (std::size_t j = i + 1; j < free_slots.size(); ++j)
      if (free_slots[i] == free_slots[j])
        throw HodoError(Status::InvalidInput, "duplicate free slot");
  }
  if (h_degree(t0) < n1 + n2 + 2)
    throw HodoError(Status::InvalidInput,
                    "not enough active times for this class");
  const int nf = n1 + n2;
  const int m1 = n1 + 1, m2 = n2 + 1;
  const int depth = std::max(n1, n2) + 2;
  std::vector<double> z(nf + 2);
  for (int i = 0; i < nf; ++i) z[i] = t0.at(free_slots[i]);
  z[nf] = seed.b1.real();
  z[nf + 1] = seed.b2.real();

  auto with_times = [&](const std::vector<double>& w) {
    TimeVector tt = t0;
    for (int i = 0; i < nf; ++i) tt.set(free_slots[i], w[i]);
    return tt;
  };

  Problem pb;
  pb.guard = [&](const std::vector<double>& w) {
    if (std::abs(w[nf] - w[nf + 1]) < opt.merge_tol)
      throw HodoError(Status::Collapse, "invariants merged");
  };
  pb.eval = [&](const std::vector<double>& w, std::vector<double>& F,
                std::vector<std::vector<double>>* J) {
    TimeVector tt = with_times(w);
    RiemannPoint p = RiemannPoint::hyperbolic(w[nf], w[nf + 1]);
    auto tw = derivative_towers(tt, p, depth);
    F.assign(m1 + m2, 0.0);
    for (int k = 0; k < m1; ++k) F[k] = tw.pure1[k];
    for (int k = 0; k < m2; ++k) F[m1 + k] = tw.pure2[k];
    if (!J) return;
    J->assign(m1 + m2, std::vector<double>(nf + 2, 0.0));
    for (int c = 0; c < nf; ++c) {
      auto col1 = slot_tower(tt, free_slots[c], p, 1, m1);
      auto col2 = slot_tower(tt, free_slots[c], p, 2, m2);
      for (int k = 0; k < m1; ++k) (*J)[k][c] = col1[k];
      for (int k = 0; k < m2; ++k) (*J)[m1 + k][c] = col2[k];
    }
    for (int k = 0; k < m1; ++k) {
      (*J)[k][nf] = tw.pure1[k + 1];
      (*J)[k][nf + 1] = tw.mixed1[k + 1];
    }
    for (int k = 0; k < m2; ++k) {
      (*J)[m1 + k][nf] = tw.mixed2[k + 1];
      (*J)[m1 + k][nf + 1] = tw.pure2[k + 1];
    }
  };

  HodographPoint out;
  NewtonResult res = newton(z, pb, opt);
  reject_merged(res, z[nf], z[nf + 1], opt);
  out.iterations = res.iterations;
  out.t = with_times(z);
  out.p = RiemannPoint::hyperbolic(z[nf], z[nf + 1]);
  auto tw = derivative_towers(out.t, out.p, depth);
  out.grad_norm = std::max(std::abs(tw.pure1[0]), std::abs(tw.pure2[0]));
  double cmax = 0.0;
  for (int k = 0; k < m1; ++k) cmax = std::max(cmax, std::abs(tw.pure1[k]));
  for (int k = 0; k < m2; ++k) cmax = std::max(cmax, std::abs(tw.pure2[k]));
  out.constraint_norm = cmax;
  out.offdiag = std::abs((z[nf] - z[nf + 1]) * tw.mixed1[1]);
  out.hess1 = tw.pure1[1];
  out.hess2 = tw.pure2[1];
  out.delta = tw.pure1[n1 + 1] * tw.pure2[n2 + 1];
  out.order = out.t.top();
  out.cls = classify(out.t, out.p, opt);
  if (out.cls.n1 != n1 || out.cls.n2 != n2) {
    if (out.cls.n1 >= n1 && out.cls.n2 >= n2)
      throw HodoError(Status::DegenerateDelta,
                      "transversality product vanishes; the point lies in " +
                          out.cls.label());
    throw HodoError(Status::NoConvergence,
                    "converged point classifies as " + out.cls.label());
  }
  return out;
}

namespace {

// Best (beta1, beta2) over a coarse grid around the seed, free times kept at
// their initial values. Used to restart locus tracing.
std::vector<double> scan_seed(const TimeVector& t, int n1, int n2,
                              const std::vector<int>& free_slots,
                              const RiemannPoint& seed,
                              const SolveOptions& opt) {
  const int nf = static_cast<int>(free_slots.size());
  const int m1 = n1 + 1, m2 = n2 + 1;
  std::vector<double> best(nf + 2, 0.0);
  for (int i = 0; i < nf; ++i) best[i] = t.at(free_slots[i]);
  double c1 = seed.b1.real(), c2 = seed.b2.real();
  double R = opt.seed_range;
  double best_score = std::numeric_limits<double>::infinity();
  const int m = 25;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double b1 = c1 - R + 2.0 * R * i / (m - 1);
      double b2 = c2 - R + 2.0 * R * j / (m - 1);
      if (b1 - b2 < 0.05 * R) continue;
      RiemannPoint p = RiemannPoint::hyperbolic(b1, b2);
      auto tw = derivative_towers(t, p, std::max(n1, n2) + 2);
      double s = 0.0;
      for (int k = 0; k < m1; ++k) s += tw.pure1[k] * tw.pure1[k];
      for (int k = 0; k < m2; ++k) s += tw.pure2[k] * tw.pure2[k];
      if (std::isfinite(s) && s < best_score) {
        best_score = s;
        best[nf] = b1;
        best[nf + 1] = b2;
      }
    }
  if (!std::isfinite(best_score)) {
    best[nf] = c1;
    best[nf + 1] = c2;
  }
  return best;
}

std::vector<double> point_to_z(const HodographPoint& pt,
                               const std::vector<int>& free_slots) {
  std::vector<double> z;
  z.reserve(free_slots.size() + 2);
  for (int s : free_slots) z.push_back(pt.t.at(s));
  z.push_back(pt.p.b1.real());
  z.push_back(pt.p.b2.real());
  return z;
}

}  // namespace

Locus trace_locus(const TimeVector& t0, int n1, int n2,
                  const std::vector<int>& free_slots, GridAxis a1, GridAxis a2,
                  const RiemannPoint& seed, const SolveOptions& opt) {
  if (a1.count < 1 || a2.count < 1)
    throw HodoError(Status::InvalidInput, "grid must have at least one node");
  for (int s : free_slots)
    if (s == a1.slot || s == a2.slot)
      throw HodoError(Status::InvalidInput,
                      "grid slots cannot also be unknowns");
  Locus out;
  out.a1 = a1;
  out.a2 = a2;
  out.samples.assign(static_cast<std::size_t>(a1.count) * a2.count, {});
  const int nf = static_cast<int>(free_slots.size());
  std::vector<std::optional<std::vector<double>>> above(a1.count);
  for (int i2 = 0; i2 < a2.count; ++i2) {
    std::optional<std::vector<double>> prev;
    for (int step = 0; step < a1.count; ++step) {
      int i1 = (i2 % 2 == 0) ? step : a1.count - 1 - step;
      TimeVector tn = t0;
      tn.set(a1.slot, a1.value(i1));
      tn.set(a2.slot, a2.value(i2));
      LocusSample& sample = out.samples[i1 + static_cast<std::size_t>(i2) * a1.count];
      sample.g1 = a1.value(i1);
      sample.g2 = a2.value(i2);
      std::vector<std::vector<double>> candidates;
      if (prev) candidates.push_back(*prev);
      if (above[i1]) candidates.push_back(*above[i1]);
      {
        std::vector<double> z0(nf + 2);
        for (int i = 0; i < nf; ++i) z0[i] = tn.at(free_slots[i]);
        z0[nf] = seed.b1.real();
        z0[nf + 1] = seed.b2.real();
        candidates.push_back(z0);
      }
      candidates.push_back(scan_seed(tn, n1, n2, free_slots, seed, opt));
      Status last = Status::NoConvergence;
      bool done = false;
      for (const auto& z0 : candidates) {
        TimeVector ts = tn;
        for (int i = 0; i < nf; ++i) ts.set(free_slots[i], z0[i]);
        try {
          HodographPoint pt = solve_singular(
              ts, n1, n2, free_slots,
              RiemannPoint::hyperbolic(z0[nf], z0[nf + 1]), opt);
          sample.status = Status::Ok;
          sample.point = pt;
          prev = point_to_z(pt, free_slots);
          above[i1] = prev;
          ++out.converged;
          done = true;
          break;
        } catch (const HodoError& e) {
          last = e.status;
        }
      }
      if (!done) {
        sample.status = last;
        prev.reset();
        above[i1].reset();
      }
    }
  }
  if (out.converged == 0)
    throw HodoError(Status::EmptyLocus, "no grid node converged");
  return out;
}

namespace {

BranchValues closed_form(int item, double t2, double t3, double t4,
                         bool corrected) {
  const double R = 3 * t3 * t3 - 8 * t2 * t4;
  const double s15 = std::sqrt(15.0);
  const double s4 = std::sqrt(t4 * t4 * R);
  const double s3 = std::sqrt(t3 * t3 * R);
  const double A = 8 * t2 * t4 - 3 * t3 * t3;
  const double den_x = 360 * t4 * t4 * t4;
  const double den20 = 20 * t4 * t4, den12 = 12 * t4 * t4;
  const double x_sym = -45 * t4 * t3 * t3 * t3 + 180 * t2 * t4 * t4 * t3;
  // Item 2's x is printed with 180 t2 t3^2 t3 in place of 180 t2 t4^2 t3.
  const double x_sym_misprint =
      -45 * t4 * t3 * t3 * t3 + 180 * t2 * t3 * t3 * t3;
  BranchValues v;
  switch (item) {
    case 1:
      v.x = (x_sym + s15 * A * s4) / den_x;
      v.b1 = -(5 * t3 * t4 + s15 * s4) / den20;
      // Printed radicand carries t3^2 where the branch needs t4^2.
      v.b2 = (-3 * t3 * t4 + s15 * (corrected ? s4 : s3)) / den12;
      break;
    case 2:
      v.x = ((corrected ? x_sym : x_sym_misprint) - s15 * A * s4) / den_x;
      v.b1 = (-5 * t3 * t4 + s15 * s4) / den20;
      v.b2 = -(3 * t3 * t4 + s15 * s4) / den12;
      break;
    case 3:
      v.x = (x_sym - s15 * A * s4) / den_x;
      v.b1 = -(3 * t3 * t4 + s15 * s4) / den12;
      v.b2 = (-5 * t3 * t4 + s15 * s4) / den20;
      break;
    case 4:
      v.x = (x_sym + s15 * A * s4) / den_x;
      v.b1 = (-3 * t3 * t4 + s15 * s4) / den12;
      v.b2 = -(5 * t3 * t4 + s15 * s4) / den20;
      break;
  }
  return v;
}

double branch_dist(const BranchValues& a, const BranchValues& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.b1 - b.b1),
                   std::abs(a.b2 - b.b2)});
}

}  // namespace

Section3Report compare_section3(double t2, double t3, double t4,
                                const SolveOptions& opt) {
  if (t4 == 0.0)
    throw HodoError(Status::InvalidInput, "t4 must be nonzero");
  Section3Report rep;
  rep.t2 = t2;
  rep.t3 = t3;
  rep.t4 = t4;
  rep.radicand = 3 * t3 * t3 - 8 * t2 * t4;
  if (rep.radicand < 0.0)
    throw HodoError(Status::RadicandNegative,
                    "no real branch: 3 t3^2 - 8 t2 t4 < 0");

  // Solve both branches per class, seeding near the corrected forms.
  auto solve_branch = [&](int n1, int n2, const BranchValues& near)
      -> std::pair<Status, HodographPoint> {
    TimeVector t = TimeVector::benney({near.x + 1e-3, t2, t3, t4});
    RiemannPoint sp =
        RiemannPoint::hyperbolic(near.b1 + 1e-3, near.b2 - 1e-3);
    try {
      return {Status::Ok, solve_singular(t, n1, n2, {1}, sp, opt)};
    } catch (const HodoError& e) {
      return {e.status, {}};
    }
  };

  std::vector<std::pair<Status, HodographPoint>> branches;
  for (int item = 1; item <= 4; ++item) {
    int n1 = item <= 2 ? 1 : 0, n2 = 1 - n1;
    branches.push_back(
        solve_branch(n1, n2, closed_form(item, t2, t3, t4, true)));
  }

  for (int item = 1; item <= 4; ++item) {
    Section3Item it;
    it.item = item;
    it.cls.n1 = item <= 2 ? 1 : 0;
    it.cls.n2 = 1 - it.cls.n1;
    it.printed = closed_form(item, t2, t3, t4, false);
    it.corrected = closed_form(item, t2, t3, t4, true);
    // Nearest converged solver branch of the same class.
    double best = std::numeric_limits<double>::infinity();
    Status st = Status::NoConvergence;
    bool found = false;
    for (int b = 0; b < 4; ++b) {
      if ((b < 2) != (item <= 2)) continue;
      if (branches[b].first != Status::Ok) {
        st = branches[b].first;
        continue;
      }
      const HodographPoint& pt = branches[b].second;
      BranchValues sv{pt.t.at(1), pt.p.b1.real(), pt.p.b2.real()};
      double d = branch_dist(sv, it.corrected);
      if (d < best) {
        best = d;
        it.solver = sv;
        it.solver_residual = pt.constraint_norm;
        found = true;
      }
    }
    it.solver_status = found ? Status::Ok : st;
    if (it.solver_status == Status::Ok) {
      it.corrected_dist = branch_dist(it.solver, it.corrected);
      it.printed_dist = branch_dist(it.solver, it.printed);
    } else {
      it.corrected_dist = it.printed_dist =
          std::numeric_limits<double>::quiet_NaN();
    }
    rep.items.push_back(it);
  }
  return rep;
}

}  // namespace hodo
