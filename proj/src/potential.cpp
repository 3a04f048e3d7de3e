#include "hodo/potential.hpp"

#include <cmath>

namespace hodo {

namespace {

constexpr double kPairTol = 1e-12;

// The recurrence arguments a = (b1+b2)/2 and b = b1 b2 are real exactly when
// the point is hyperbolic or a conjugate pair.
std::pair<double, double> real_ab(const RiemannPoint& p) {
  std::complex<double> a = p.a(), b = p.bprod();
  double scale = 1.0 + std::abs(a) + std::abs(b);
  if (std::abs(a.imag()) > kPairTol * scale ||
      std::abs(b.imag()) > kPairTol * scale)
    throw HodoError(Status::InvalidInput,
                    "point must be hyperbolic or a conjugate pair");
  return {a.real(), b.real()};
}

int coeff_index_top(const TimeVector& t) { return t.top() - t.first + 1; }

template <class S>
S sum_w(const TimeVector& t, const std::vector<S>& C) {
  S w{};
  for (int n = t.first; n <= t.top(); ++n) {
    double tn = t.at(n);
    if (tn == 0.0) continue;
    w += S(tn) * C[n - t.first + 1];
  }
  return w;
}

// Coefficients of h, ascending in lambda. Depends on the point through
// (a, b) only. Benney slot n contributes C_{n-1-j} to lambda^j (j <= n-1),
// dToda slot n contributes C_{n-j} (j <= n).
std::vector<double> h_coeffs(const TimeVector& t, double a, double b) {
  if (t.hierarchy == Hierarchy::GeneralEps)
    throw HodoError(Status::Unsupported,
                    "h ladder is defined for the two distinguished hierarchies");
  const int N = t.top();
  const int deg = t.first == 0 ? N : N - 1;
  auto C = coeff_values(t.eps, a, b, N);
  std::vector<double> h(deg + 1, 0.0);
  for (int n = t.first; n <= N; ++n) {
    double tn = t.at(n);
    if (tn == 0.0) continue;
    int shift = t.first == 0 ? n : n - 1;
    for (int j = 0; j <= shift; ++j) h[j] += tn * C[shift - j];
  }
  return h;
}

// Ladder prefactor: order-k pure derivative over the order-(k-1) Taylor
// coefficient of h.
double ladder_factor(Hierarchy hier, int k) {
  Rational f;
  if (hier == Hierarchy::Benney)
    f = odd_double_factorial(k) / Rational(mpz_class(1) << k);
  else
    f = -odd_double_factorial(k - 1) / Rational(mpz_class(1) << k);
  return to_double(f);
}

template <class S>
std::vector<S> ladder(Hierarchy hier, const std::vector<S>& h, const S& beta,
                      int max_k) {
  auto tay = taylor_at(h, beta, max_k);
  std::vector<S> out(max_k);
  for (int k = 1; k <= max_k; ++k)
    out[k - 1] = S(ladder_factor(hier, k)) * tay[k - 1];
  return out;
}

}  // namespace

double eval_w(const TimeVector& t, const RiemannPoint& p) {
  auto [a, b] = real_ab(p);
  auto C = coeff_values(t.eps, a, b, coeff_index_top(t));
  return sum_w(t, C);
}

std::complex<double> eval_w_complex(const TimeVector& t,
                                    std::complex<double> b1,
                                    std::complex<double> b2) {
  auto C = coeff_values(t.eps, 0.5 * (b1 + b2), b1 * b2, coeff_index_top(t));
  return sum_w(t, C);
}

double eval_w_uv(const TimeVector& t, double u, double v) {
  auto C = coeff_values(t.eps, -0.5 * u, 0.25 * u * u - v, coeff_index_top(t));
  return sum_w(t, C);
}

Poly1<double> h_polynomial(const TimeVector& t, const RiemannPoint& p) {
  auto [a, b] = real_ab(p);
  return Poly1<double>{h_coeffs(t, a, b)};
}

std::vector<double> derivative_tower(const TimeVector& t,
                                     const RiemannPoint& p, int invariant,
                                     int max_k) {
  if (invariant != 1 && invariant != 2)
    throw HodoError(Status::InvalidInput, "invariant must be 1 or 2");
  if (!p.is_hyperbolic())
    throw HodoError(Status::InvalidInput,
                    "pure ladders per invariant need a hyperbolic point");
  auto [a, b] = real_ab(p);
  auto h = h_coeffs(t, a, b);
  double beta = invariant == 1 ? p.b1.real() : p.b2.real();
  return ladder(t.hierarchy, h, beta, max_k);
}

Towers derivative_towers(const TimeVector& t, const RiemannPoint& p,
                         int depth) {
  if (!p.is_hyperbolic())
    throw HodoError(Status::InvalidInput, "towers need a hyperbolic point");
  auto [a, b] = real_ab(p);
  auto h = h_coeffs(t, a, b);
  double b1 = p.b1.real(), b2 = p.b2.real();
  Towers tw;
  tw.pure1 = ladder(t.hierarchy, h, b1, depth);
  tw.pure2 = ladder(t.hierarchy, h, b2, depth);
  const double eps = to_double(t.eps);
  auto mixed = [&](const std::vector<double>& pure, double num_den,
                   double other_w1) {
    // M_{k+1} = (eps P_{k+1} - (eps + k) M_k) / (bi - bj), M_0 = W_j.
    std::vector<double> m(depth);
    m[0] = other_w1;
    for (int k = 0; k + 1 < depth; ++k)
      m[k + 1] = (eps * pure[k] - (eps + k) * m[k]) / num_den;
    return m;
  };
  tw.mixed1 = mixed(tw.pure1, b1 - b2, tw.pure2[0]);
  tw.mixed2 = mixed(tw.pure2, b2 - b1, tw.pure1[0]);
  return tw;
}

std::vector<std::complex<double>> beta_tower(const TimeVector& t,
                                             std::complex<double> beta,
                                             int max_k) {
  RiemannPoint p = RiemannPoint::elliptic(beta);
  auto [a, b] = real_ab(p);
  auto hr = h_coeffs(t, a, b);
  std::vector<std::complex<double>> h(hr.begin(), hr.end());
  return ladder(t.hierarchy, h, beta, max_k);
}

double mixed_12(const TimeVector& t, const RiemannPoint& p) {
  const double eps = to_double(t.eps);
  if (p.is_hyperbolic()) {
    auto tw = derivative_towers(t, p, 1);
    return eps * (tw.pure1[0] - tw.pure2[0]) / (p.b1.real() - p.b2.real());
  }
  auto pt = beta_tower(t, p.b1, 1);
  // W_2 = conj(W_1) on a conjugate pair, so W_12 = eps Im(W_1) / Im(b1).
  return eps * pt[0].imag() / p.b1.imag();
}

double char_speed(Hierarchy h, int n, const RiemannPoint& p, int invariant) {
  if (invariant != 1 && invariant != 2)
    throw HodoError(Status::InvalidInput, "invariant must be 1 or 2");
  int first = h == Hierarchy::DToda ? 0 : 1;
  if (h == Hierarchy::GeneralEps)
    throw HodoError(Status::Unsupported, "speeds are per hierarchy");
  if (n < first)
    throw HodoError(Status::InvalidInput, "flow index below range");
  if (!p.is_hyperbolic())
    throw HodoError(Status::InvalidInput, "speeds need a hyperbolic point");
  auto [a, b] = real_ab(p);
  int shift = first == 0 ? n : n - 1;
  auto C = coeff_values(hierarchy_eps(h), a, b, shift);
  double beta = invariant == 1 ? p.b1.real() : p.b2.real();
  double s = 0.0;
  for (int k = 0; k <= shift; ++k) s = s * beta + C[k];
  return s;
}

std::vector<double> slot_tower(const TimeVector& shape, int slot,
                               const RiemannPoint& p, int invariant,
                               int max_k) {
  TimeVector unit = shape;
  std::fill(unit.values.begin(), unit.values.end(), 0.0);
  unit.set(slot, 1.0);
  return derivative_tower(unit, p, invariant, max_k);
}

}  // namespace hodo
