// Release gate. Each numbered block checks one contract item end to end and
// prints a single verdict line; the process exits nonzero if any block fails.
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hodo/elliptic.hpp"
#include "hodo/epd_operator.hpp"
#include "hodo/flows.hpp"
#include "hodo/hodograph.hpp"
#include "hodo/potential.hpp"
#include "hodo/series.hpp"

using namespace hodo;

namespace {

using P = Poly2<Rational>;

int g_failures = 0;

void verdict(int n, const char* name, bool ok, const std::string& why = "") {
  if (ok) {
    std::printf("[PASS] %d. %s\n", n, name);
  } else {
    std::printf("[FAIL] %d. %s%s%s\n", n, name, why.empty() ? "" : ": ",
                why.c_str());
    ++g_failures;
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

P term(long n, long d, int i, int j) {
  P p;
  p.set(i, j, Rational(n, d));
  return p;
}

// Ascending coefficients of prod (x - r).
std::vector<double> poly_from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> n(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= r * c[i];
    }
    c = n;
  }
  return c;
}

// Times realizing a prescribed h at a fixed hyperbolic point; the slot map
// is unit triangular, so any target of the right degree is reachable.
TimeVector times_for_h(Hierarchy hy, const std::vector<double>& hstar,
                       double b1, double b2) {
  int first = hy == Hierarchy::Benney ? 1 : 0;
  Rational eps = hy == Hierarchy::Benney ? Rational(1, 2) : Rational(-1, 2);
  int rows = static_cast<int>(hstar.size());
  int N = first == 1 ? rows : rows - 1;
  auto C = coeff_values(eps, (b1 + b2) / 2, b1 * b2, N);
  int shift = first == 1 ? 1 : 0;
  std::vector<std::vector<double>> A(rows, std::vector<double>(rows, 0.0));
  for (int j = 0; j < rows; ++j)
    for (int n = j + shift; n <= N; ++n) A[j][n - first] = C[n - j - shift];
  auto vals = solve_linear(A, hstar);
  return first == 1 ? TimeVector::benney(vals) : TimeVector::dtoda(vals);
}

RationalXY random_rational_input(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 6), pw(0, 3);
  P p;
  int dx = deg(rng), dy = deg(rng);
  while (dx + dy > 6) {
    dx = deg(rng);
    dy = deg(rng);
  }
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j) p.set(i, j, Rational(coeff(rng)));
  if (p.is_zero()) p.set(0, 0, Rational(1));
  RationalXY f = RationalXY::from_poly(p);
  f.pow = pw(rng);
  f.normalize();
  return f;
}

// 1. Exact series table for the positive half-integer exponent through
// order four, no tolerance anywhere.
bool series_table_exact(std::string& why) {
  auto tbl = coeff_table(Rational(1, 2), 4);
  std::vector<P> want = {
      term(1, 1, 0, 0),
      term(1, 2, 1, 0) + term(1, 2, 0, 1),
      term(3, 8, 2, 0) + term(1, 4, 1, 1) + term(3, 8, 0, 2),
      term(5, 16, 3, 0) + term(3, 16, 2, 1) + term(3, 16, 1, 2) +
          term(5, 16, 0, 3),
      term(35, 128, 4, 0) + term(20, 128, 3, 1) + term(18, 128, 2, 2) +
          term(20, 128, 1, 3) + term(35, 128, 0, 4)};
  for (int k = 0; k <= 4; ++k)
    if (!(tbl.entry[k] == want[k])) {
      why = "entry " + std::to_string(k) + " differs";
      return false;
    }
  return true;
}

// 2. Dual-hierarchy slot polynomials through the fourth slot, plus the
// same polynomials rewritten in mean/half-difference variables.
bool dual_slot_polynomials(std::string& why) {
  std::vector<P> want = {
      term(-1, 2, 1, 0) + term(-1, 2, 0, 1),
      term(-1, 8, 2, 0) + term(1, 4, 1, 1) + term(-1, 8, 0, 2),
      term(-1, 16, 3, 0) + term(1, 16, 2, 1) + term(1, 16, 1, 2) +
          term(-1, 16, 0, 3),
      term(-5, 128, 4, 0) + term(4, 128, 3, 1) + term(2, 128, 2, 2) +
          term(4, 128, 1, 3) + term(-5, 128, 0, 4)};
  // X = (b1 + b2)/2, Y = (b1 - b2)/2, so the substitution below feeds
  // b1 = X + Y, b2 = X - Y into each slot polynomial.
  std::vector<P> want_xy = {
      term(-1, 1, 1, 0),
      term(-1, 2, 0, 2),
      term(-1, 2, 1, 2),
      term(-1, 2, 2, 2) + term(-1, 8, 0, 4)};
  P A = term(1, 1, 1, 0) + term(1, 1, 0, 1);
  P B = term(1, 1, 1, 0) + term(-1, 1, 0, 1);
  for (int k = 0; k <= 3; ++k) {
    std::vector<Rational> unit(k + 1, Rational(0));
    unit[k] = Rational(1);
    P w = w_polynomial(Rational(-1, 2), 0, unit);
    if (!(w == want[k])) {
      why = "slot " + std::to_string(k) + " differs";
      return false;
    }
    if (!(compose2(w, A, B) == want_xy[k])) {
      why = "slot " + std::to_string(k) + " differs in mean variables";
      return false;
    }
  }
  return true;
}

// 3. Operator annihilation of the first seven entries on both half-integer
// exponents, exactly; float defining-identity residual at random points.
bool annihilation_and_float(std::string& why) {
  for (int s : {1, -1}) {
    Rational eps(s, 2);
    auto tbl = coeff_table(eps, 6);
    for (int n = 0; n <= 6; ++n)
      if (!apply_epd(eps, RationalXY::from_poly(tbl.entry[n])).is_zero()) {
        why = "entry " + std::to_string(n) + " survives on " +
              (s > 0 ? "1/2" : "-1/2");
        return false;
      }
  }
  auto rep = identity_battery(33, 100, 6);
  for (const auto& c : rep.checks) {
    if (c.name == "float-defining-identity") {
      if (c.cases != 100 || c.failures != 0 || c.max_residual >= 1e-9) {
        why = "float residual " + num(c.max_residual) + " over " +
              std::to_string(c.cases) + " points";
        return false;
      }
      return true;
    }
  }
  why = "float check missing from the battery";
  return false;
}

// 4. Commutation across the full half-integer exponent grid and the
// transpose duality, both exactly zero on random rational inputs.
bool commutation_and_duality(std::string& why) {
  std::mt19937 rng(404);
  std::vector<Rational> grid;
  for (int k = -3; k <= 3; ++k) grid.push_back(Rational(k, 2));
  for (int trial = 0; trial < 50; ++trial) {
    RationalXY f = random_rational_input(rng);
    if (!tilde_duality_residual(f).is_zero()) {
      why = "duality fails on trial " + std::to_string(trial);
      return false;
    }
    for (const auto& eps : grid)
      for (const auto& mu : grid)
        if (!commutation_residual(eps, mu, f).is_zero()) {
          why = "commutation fails on trial " + std::to_string(trial);
          return false;
        }
  }
  return true;
}

// 5. Random three-slot instances on the hyperbolic side of the quadratic
// family: the solver lands on the root pair and the cross derivative
// vanishes on shell.
bool quadratic_family_oracle(std::string& why) {
  std::mt19937 rng(501);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst_beta = 0, worst_cross = 0;
  for (int i = 0; i < 20; ++i) {
    double t3 = (U(rng) < 0 ? -1 : 1) * (0.5 + 0.5 * std::abs(U(rng)));
    double t2 = U(rng);
    double r = 0.3 + 0.9 * std::abs(U(rng));
    double sg = -2 * t2 / (3 * t3);
    double pr = sg * sg / 4 - r * r;  // roots sg/2 +- r by construction
    double x = (24 * t3 * pr - 8 * t2 * sg - 6 * t3 * sg * sg) / 16;
    auto t = TimeVector::benney({x, t2, t3});
    double r1 = sg / 2 + r, r2 = sg / 2 - r;
    auto pt = solve_regular(t, RiemannPoint::hyperbolic(r1 + 0.03, r2 - 0.03));
    worst_beta = std::max({worst_beta, std::abs(pt.p.b1.real() - r1),
                           std::abs(pt.p.b2.real() - r2)});
    worst_cross = std::max(
        worst_cross, std::abs(derivative_towers(t, pt.p, 1).mixed1[1]));
  }
  if (worst_beta >= 1e-10) {
    why = "root error " + num(worst_beta);
    return false;
  }
  if (worst_cross >= 1e-9) {
    why = "cross derivative " + num(worst_cross);
    return false;
  }
  return true;
}

// 6. First singular class: converged residuals, transversality bounded
// away from zero, and classification round-trips every class of total
// depth at most three on both hierarchies.
bool singular_roundtrip(std::string& why) {
  auto t = TimeVector::parse(Hierarchy::Benney, "x=0,t2=-1,t4=1");
  auto pt = solve_singular(t, 1, 0, {1}, RiemannPoint::hyperbolic(0.6, -0.9));
  if (pt.grad_norm >= 1e-10 || pt.constraint_norm >= 1e-10) {
    why = "residuals " + num(pt.grad_norm) + ", " + num(pt.constraint_norm);
    return false;
  }
  if (std::abs(pt.delta) <= 1e-3) {
    why = "transversality " + num(pt.delta);
    return false;
  }
  const double b1 = 0.9, b2 = -0.6;
  for (Hierarchy hy : {Hierarchy::Benney, Hierarchy::DToda})
    for (int n1 = 0; n1 <= 3; ++n1)
      for (int n2 = 0; n1 + n2 <= 3; ++n2) {
        std::vector<double> roots(n1 + 1, b1);
        roots.insert(roots.end(), n2 + 1, b2);
        if (hy == Hierarchy::DToda) roots.push_back(1.7);
        auto tc = times_for_h(hy, poly_from_roots(roots), b1, b2);
        auto cls = classify(tc, RiemannPoint::hyperbolic(b1, b2));
        if (cls.n1 != n1 || cls.n2 != n2) {
          why = "(" + std::to_string(n1) + "," + std::to_string(n2) +
                ") came back as " + cls.label();
          return false;
        }
      }
  return true;
}

// 7. Three-parameter family: at random points with positive radicand the
// solver matches a closed-form branch per class after the corrections,
// and the uncorrected forms show a reported discrepancy.
bool closed_form_branches(std::string& why) {
  std::mt19937 rng(701);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst = 0;
  int reported = 0;
  for (int i = 0; i < 10; ++i) {
    double t4 = (i % 2 ? -1 : 1) * (0.3 + 0.6 * std::abs(U(rng)));
    double t3 = U(rng);
    double rad = 0.3 + 1.0 * std::abs(U(rng));
    double t2 = (3 * t3 * t3 - rad) / (8 * t4);
    auto rep = compare_section3(t2, t3, t4);
    double best10 = 1e300, best01 = 1e300, printed_max = 0;
    for (const auto& item : rep.items) {
      if (item.printed_dist > printed_max) printed_max = item.printed_dist;
      if (item.solver_status != Status::Ok) continue;
      double& best = item.cls.n1 == 1 ? best10 : best01;
      best = std::min(best, item.corrected_dist);
    }
    worst = std::max({worst, best10, best01});
    if (printed_max > 1e-6) ++reported;
  }
  if (worst >= 1e-8) {
    why = "corrected branch distance " + num(worst);
    return false;
  }
  if (reported < 8) {
    why = "uncorrected discrepancy reported at only " +
          std::to_string(reported) + "/10 points";
    return false;
  }
  return true;
}

// 8. Flow residuals on both hierarchies: second-order decay under step
// halving and small absolute residual on the coarse patch.
bool flow_orders(std::string& why) {
  const FlowGrid near_zero{-1.01, -0.99, -0.01, 0.01, 21, 21};  // h = 1e-3
  const FlowGrid near_one{-1.01, -0.99, 0.99, 1.01, 21, 21};
  struct Run {
    const char* tag;
    FlowOrder o;
  };
  auto seed_b = RiemannPoint::hyperbolic(0.8, -0.8);
  auto seed_d = RiemannPoint::hyperbolic(1.4, -1.4);
  std::vector<Run> runs;
  runs.push_back({"benney n=2",
                  flow_convergence(Hierarchy::Benney, 2,
                                   TimeVector::benney({-1.0, 0.0, 1.0}),
                                   seed_b, near_zero, 4)});
  runs.push_back({"benney n=3",
                  flow_convergence(Hierarchy::Benney, 3,
                                   TimeVector::benney({-1.0, 0.0, 1.0, 0.0}),
                                   seed_b, near_one, 4)});
  runs.push_back({"dual n=1",
                  flow_convergence(Hierarchy::DToda, 1,
                                   TimeVector::dtoda({-1.0, 0.0, 1.0}),
                                   seed_d, near_zero, 4)});
  runs.push_back({"dual n=2",
                  flow_convergence(Hierarchy::DToda, 2,
                                   TimeVector::dtoda({-1.0, 0.0, 1.0}),
                                   seed_d, near_one, 4)});
  for (const auto& r : runs) {
    if (r.o.order1 < 1.9 || r.o.order2 < 1.9) {
      why = std::string(r.tag) + " orders " + num(r.o.order1) + ", " +
            num(r.o.order2);
      return false;
    }
    if (r.o.coarse.max_res1 >= 1e-5 || r.o.coarse.max_res2 >= 1e-5) {
      why = std::string(r.tag) + " coarse residual " +
            num(std::max(r.o.coarse.max_res1, r.o.coarse.max_res2));
      return false;
    }
  }
  return true;
}

// 9. Pair-coordinate series entries exactly, and the catastrophe point:
// chart gradient and all three chart second derivatives vanish while the
// third stays away from zero; the ladder form of the degeneracy condition
// agrees with the chart form in both directions.
bool elliptic_catastrophe(std::string& why) {
  auto E = series_entries_bUV(Rational(1, 2), 5);
  std::vector<P> want = {
      term(1, 1, 0, 0),
      term(1, 1, 1, 0),
      term(1, 1, 2, 0) + term(-1, 2, 0, 2),
      term(1, 1, 3, 0) + term(-3, 2, 1, 2),
      term(1, 1, 4, 0) + term(-3, 1, 2, 2) + term(3, 8, 0, 4),
      term(1, 1, 5, 0) + term(-5, 1, 3, 2) + term(15, 8, 1, 4)};
  for (int k = 0; k <= 5; ++k)
    if (!(E[k] == want[k])) {
      why = "pair entry " + std::to_string(k) + " differs";
      return false;
    }
  // The same sum through the complex recurrence at a generic point.
  auto ts = TimeVector::parse(Hierarchy::Benney,
                              "x=0.4,t2=-0.7,t3=0.2,t4=0.9,t5=-0.3");
  double Uc = 0.43, Vc = 0.67, w = 0;
  for (int n = 1; n <= 5; ++n)
    w += ts.at(n) * to_double_poly(E[n]).eval(Uc, Vc);
  if (std::abs(w - eval_w_elliptic(ts, Uc, Vc)) >= 1e-12) {
    why = "series sum and recurrence disagree";
    return false;
  }

  auto t = TimeVector::parse(Hierarchy::Benney,
                             "x=0.25,t2=0.25,t3=1,t4=0.5,t5=1");
  auto pt = find_catastrophe(t, {1, 2}, {-0.05, 0.55});
  auto d = chart_derivs(pt.t, pt.beta);
  double first = std::max(std::abs(d.wu), std::abs(d.wv));
  double second =
      std::max({std::abs(d.wuu), std::abs(d.wuv), std::abs(d.wvv)});
  if (first >= 1e-9 || second >= 1e-9) {
    why = "chart derivatives " + num(first) + ", " + num(second);
    return false;
  }
  if (pt.third_norm <= 1e-6) {
    why = "third derivative " + num(pt.third_norm);
    return false;
  }
  // |d2W/dbeta2|^2 = 4 (W_uu^2 - v W_uv^2) at critical points: vanishing
  // chart Hessian forces the ladder entry down, and a regular critical
  // point keeps both sides equal and bounded away from zero.
  auto tw = elliptic_towers(pt.t, pt.beta, 2);
  if (std::abs(tw.pure[1]) >= 1e-9) {
    why = "ladder entry " + num(std::abs(tw.pure[1])) + " at the catastrophe";
    return false;
  }
  auto reg = solve_elliptic(TimeVector::benney({1.0, 0.0, 1.0}), {0.1, 0.9});
  auto dr = chart_derivs(reg.t, reg.beta);
  double lhs = std::abs(elliptic_towers(reg.t, reg.beta, 2).pure[1]);
  double rhs = 2 * std::sqrt(dr.wuu * dr.wuu - dr.v * dr.wuv * dr.wuv);
  if (lhs <= 1e-2 || rhs <= 1e-2 || std::abs(lhs - rhs) >= 1e-10) {
    why = "regular point sides " + num(lhs) + ", " + num(rhs);
    return false;
  }
  return true;
}

// 10. Two active slots leave a linear gradient with no critical pair.
bool two_slot_collapse(std::string& why) {
  try {
    solve_regular(TimeVector::benney({0.0, 1.0}),
                  RiemannPoint::hyperbolic(0.5, -0.5));
  } catch (const HodoError& e) {
    if (e.status == Status::Collapse) return true;
    why = std::string("raised ") + status_name(e.status);
    return false;
  }
  why = "converged";
  return false;
}

void run(int n, const char* name, bool (*fn)(std::string&)) {
  std::string why;
  bool ok = false;
  try {
    ok = fn(why);
  } catch (const HodoError& e) {
    why = std::string("unexpected ") + status_name(e.status) + ": " + e.what();
  } catch (const std::exception& e) {
    why = std::string("unexpected exception: ") + e.what();
  }
  verdict(n, name, ok, why);
}

}  // namespace

int main() {
  run(1, "exact series table through order four", series_table_exact);
  run(2, "dual-hierarchy slot polynomials and mean-variable form",
      dual_slot_polynomials);
  run(3, "operator annihilation and float defining identity",
      annihilation_and_float);
  run(4, "commutation grid and transpose duality", commutation_and_duality);
  run(5, "quadratic-family root oracle, twenty instances",
      quadratic_family_oracle);
  run(6, "singular solve and classification round-trips", singular_roundtrip);
  run(7, "closed-form branch comparison with discrepancy report",
      closed_form_branches);
  run(8, "flow residual convergence orders", flow_orders);
  run(9, "pair-coordinate series and the catastrophe conditions",
      elliptic_catastrophe);
  run(10, "two-slot collapse", two_slot_collapse);
  return g_failures == 0 ? 0 : 1;
}
