#include "hodo/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hodo/potential.hpp"
#include "hodo/series.hpp"
#include "newton.hpp"

namespace hodo {

namespace {

using cplx = std::complex<double>;

// Vanishing order of h at a complex invariant, same decade-band policy as
// the hyperbolic classifier.
std::pair<int, bool> vanishing_order_c(const std::vector<double>& h, cplx beta,
                                       double zero_tol) {
  std::vector<cplx> c(h.begin(), h.end());
  auto tay = taylor_at(c, beta, static_cast<int>(c.size()));
  double scale = 0.0;
  for (const auto& v : tay) scale = std::max(scale, std::abs(v));
  if (scale == 0.0)
    throw HodoError(Status::AllCoefficientsVanish,
                    "h vanishes identically to truncation order");
  const double thr = zero_tol * scale;
  int f = 0;
  while (f < static_cast<int>(tay.size()) && std::abs(tay[f]) <= thr) ++f;
  bool amb = f < static_cast<int>(tay.size()) && std::abs(tay[f]) < 10 * thr;
  for (int j = 0; j < f; ++j)
    if (std::abs(tay[j]) > 0.1 * thr) amb = true;
  return {f, amb};
}

void check_off_axis(cplx beta, double merge_tol) {
  if (std::abs(beta.imag()) < merge_tol)
    throw HodoError(Status::RealCollapse,
                    "conjugate pair degenerates to the real axis");
}

// Same fold policy as the hyperbolic solvers: a point is not trusted while
// the iteration is still marching relative to the pair separation, or once
// the separation drops below class resolution.
void reject_real_merge(const NewtonResult& res, cplx beta,
                       const SolveOptions& opt) {
  double gap = 2 * std::abs(beta.imag());
  if (res.last_step > 0.05 * gap ||
      gap < std::sqrt(opt.sing_tol) * (1.0 + 2 * std::abs(beta)))
    throw HodoError(Status::RealCollapse,
                    "conjugate pair merges into the real axis on this branch");
}

void validate_free_slots(const TimeVector& t, const std::vector<int>& slots) {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] < t.first || slots[i] > t.top())
      throw HodoError(Status::InvalidInput, "free slot outside the active range");
    for (std::size_t j = 0; j < i; ++j)
      if (slots[i] == slots[j])
        throw HodoError(Status::InvalidInput, "duplicate free slot");
  }
}

int h_degree(const TimeVector& t) {
  return t.first == 0 ? t.top() : t.top() - 1;
}

// Columns of d P_k / d(U, V): dU P_k = P_{k+1} + M_k, dV P_k = i(P_{k+1} - M_k).
struct BetaCols {
  cplx du, dv;
};
BetaCols beta_columns(const EllipticTowers& tw, int k) {
  cplx p_next = tw.pure[k];  // P_{k+1}
  cplx m = tw.mixed[k];      // M_k
  return {p_next + m, cplx(0, 1) * (p_next - m)};
}

EllipticCriticalPoint finish_point(const TimeVector& t, cplx beta,
                                   int iterations, const SolveOptions& opt) {
  if (beta.imag() < 0) beta = std::conj(beta);
  EllipticCriticalPoint out;
  out.t = t;
  out.beta = beta;
  out.iterations = iterations;
  auto tw = elliptic_towers(t, beta, 3);
  out.grad_norm = std::abs(tw.pure[0]);
  out.hess_norm = std::abs(tw.pure[1]);
  out.third_norm = std::abs(tw.pure[2]);
  out.w = eval_w(t, RiemannPoint::elliptic(beta));
  out.cls = classify_elliptic(t, beta, opt);
  return out;
}

}  // namespace

std::string EllipticClass::label() const {
  if (regular()) return "regular";
  std::ostringstream os;
  os << "sing(" << n << ")";
  return os.str();
}

EllipticTowers elliptic_towers(const TimeVector& t, cplx beta, int depth) {
  if (beta.imag() == 0.0)
    throw HodoError(Status::InvalidInput,
                    "elliptic ladders need Im(beta) != 0");
  EllipticTowers tw;
  tw.pure = beta_tower(t, beta, depth);
  tw.mixed.resize(depth);
  tw.mixed[0] = std::conj(tw.pure[0]);
  const cplx den = beta - std::conj(beta);
  const double eps = to_double(t.eps);
  for (int k = 0; k + 1 < depth; ++k)
    tw.mixed[k + 1] = (eps * tw.pure[k] - (eps + k) * tw.mixed[k]) / den;
  return tw;
}

double eval_w_elliptic(const TimeVector& t, double bu, double bv) {
  return eval_w(t, RiemannPoint::elliptic(cplx(bu, bv)));
}

ChartDerivs chart_derivs(const TimeVector& t, cplx beta) {
  if (beta.imag() < 0) beta = std::conj(beta);
  const double V = beta.imag();
  if (V == 0.0)
    throw HodoError(Status::InvalidInput, "chart derivatives need v < 0");
  auto tw = elliptic_towers(t, beta, 2);
  const cplx p1 = tw.pure[0], p2 = tw.pure[1];
  const double m1 = tw.mixed[1].real();

  const double wU = 2 * p1.real();
  const double wV = -2 * p1.imag();
  const double wUU = 2 * p2.real() + 2 * m1;
  const double wUV = -2 * p2.imag();
  const double wVV = -2 * p2.real() + 2 * m1;

  ChartDerivs d;
  d.u = -2 * beta.real();
  d.v = -V * V;
  d.w = eval_w(t, RiemannPoint::elliptic(beta));
  d.wu = -wU / 2;
  d.wv = -wV / (2 * V);
  d.wuu = wUU / 4;
  d.wuv = wUV / (4 * V);
  d.wvv = wVV / (4 * V * V) - wV / (4 * V * V * V);
  return d;
}

EllipticClass classify_elliptic(const TimeVector& t, cplx beta,
                                const SolveOptions& opt) {
  check_off_axis(beta, opt.merge_tol);
  auto h = h_polynomial(t, RiemannPoint::elliptic(beta)).c;
  auto [f, amb] = vanishing_order_c(h, beta, opt.zero_tol);
  if (amb)
    throw HodoError(Status::ToleranceAmbiguity,
                    "coefficient within a decade of zero_tol; verdict withheld");
  if (f == 0)
    throw HodoError(Status::NotOnManifold,
                    "point is not critical for the potential");
  return {f - 1};
}

EllipticCriticalPoint solve_elliptic(const TimeVector& t, cplx seed,
                                     const SolveOptions& opt) {
  if (seed.imag() == 0.0)
    throw HodoError(Status::InvalidInput, "seed must be off the real axis");

  Problem pb;
  pb.guard = [&](const std::vector<double>& z) {
    check_off_axis(cplx(z[0], z[1]), opt.merge_tol);
  };
  pb.eval = [&](const std::vector<double>& z, std::vector<double>& F,
                std::vector<std::vector<double>>* J) {
    cplx beta(z[0], z[1]);
    if (J == nullptr) {
      cplx p1 = beta_tower(t, beta, 1)[0];
      F = {p1.real(), p1.imag()};
      return;
    }
    auto tw = elliptic_towers(t, beta, 2);
    F = {tw.pure[0].real(), tw.pure[0].imag()};
    auto col = beta_columns(tw, 1);
    *J = {{col.du.real(), col.dv.real()}, {col.du.imag(), col.dv.imag()}};
  };

  std::vector<double> z = {seed.real(), std::abs(seed.imag())};
  NewtonResult res = newton(z, pb, opt);
  cplx beta(z[0], z[1]);
  reject_real_merge(res, beta, opt);
  return finish_point(t, beta, res.iterations, opt);
}

EllipticCriticalPoint find_catastrophe(const TimeVector& t,
                                       const std::vector<int>& free_slots,
                                       cplx seed, const SolveOptions& opt) {
  if (free_slots.size() != 2)
    throw HodoError(Status::BadArity,
                    "this stratum has codimension two; pass two free slots");
  validate_free_slots(t, free_slots);
  // Real coefficients pair every root with its conjugate, so a double root
  // at complex beta needs h of degree at least four.
  if (h_degree(t) < 4)
    throw HodoError(Status::InvalidInput,
                    "not enough active times for this stratum");
  if (seed.imag() == 0.0)
    throw HodoError(Status::InvalidInput, "seed must be off the real axis");

  // Ladder of a unit vector in one slot: the time-columns of the Jacobian.
  std::vector<TimeVector> unit(free_slots.size());
  for (std::size_t s = 0; s < free_slots.size(); ++s) {
    unit[s] = t;
    std::fill(unit[s].values.begin(), unit[s].values.end(), 0.0);
    unit[s].set(free_slots[s], 1.0);
  }

  Problem pb;
  pb.guard = [&](const std::vector<double>& z) {
    check_off_axis(cplx(z[2], z[3]), opt.merge_tol);
  };
  pb.eval = [&](const std::vector<double>& z, std::vector<double>& F,
                std::vector<std::vector<double>>* J) {
    TimeVector tt = t;
    for (std::size_t s = 0; s < free_slots.size(); ++s)
      tt.set(free_slots[s], z[s]);
    cplx beta(z[2], z[3]);
    if (J == nullptr) {
      auto pure = beta_tower(tt, beta, 2);
      F = {pure[0].real(), pure[0].imag(), pure[1].real(), pure[1].imag()};
      return;
    }
    auto tw = elliptic_towers(tt, beta, 3);
    F = {tw.pure[0].real(), tw.pure[0].imag(), tw.pure[1].real(),
         tw.pure[1].imag()};
    J->assign(4, std::vector<double>(4, 0.0));
    for (std::size_t s = 0; s < free_slots.size(); ++s) {
      auto q = beta_tower(unit[s], beta, 2);
      (*J)[0][s] = q[0].real();
      (*J)[1][s] = q[0].imag();
      (*J)[2][s] = q[1].real();
      (*J)[3][s] = q[1].imag();
    }
    for (int k = 1; k <= 2; ++k) {
      auto col = beta_columns(tw, k);
      (*J)[2 * k - 2][2] = col.du.real();
      (*J)[2 * k - 1][2] = col.du.imag();
      (*J)[2 * k - 2][3] = col.dv.real();
      (*J)[2 * k - 1][3] = col.dv.imag();
    }
  };

  std::vector<double> z = {t.at(free_slots[0]), t.at(free_slots[1]),
                           seed.real(), std::abs(seed.imag())};
  NewtonResult res = newton(z, pb, opt);
  cplx beta(z[2], z[3]);
  reject_real_merge(res, beta, opt);

  TimeVector tt = t;
  for (std::size_t s = 0; s < free_slots.size(); ++s)
    tt.set(free_slots[s], z[s]);
  auto pt = finish_point(tt, beta, res.iterations, opt);
  if (pt.cls.n > 1)
    throw HodoError(Status::DeeperSingularity,
                    "third ladder entry vanishes; the point lies in " +
                        pt.cls.label());
  if (pt.cls.n < 1)
    throw HodoError(Status::Internal, "constraints converged but class is " +
                                          pt.cls.label());
  return pt;
}

std::vector<Poly2<Rational>> series_entries_bUV(const Rational& eps,
                                                int order) {
  auto U = Poly2<Rational>::var_x();
  auto V = Poly2<Rational>::var_y();
  return gegenbauer_sequence(eps, U, U * U + V * V, order);
}

std::vector<Poly2<Rational>> series_entries_uv(const Rational& eps,
                                               int order) {
  auto u = Poly2<Rational>::var_x();
  auto v = Poly2<Rational>::var_y();
  auto a = u.scaled(Rational(-1, 2));
  auto b = (u * u).scaled(Rational(1, 4)) - v;
  return gegenbauer_sequence(eps, a, b, order);
}

}  // namespace hodo
