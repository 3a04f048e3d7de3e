#include "hodo/epd_operator.hpp"

#include <random>

#include "hodo/potential.hpp"
#include "hodo/series.hpp"
#include "hodo/types.hpp"

namespace hodo {

namespace {

Poly2<Rational> x_minus_y() {
  return Poly2<Rational>::var_x() - Poly2<Rational>::var_y();
}

}  // namespace

void RationalXY::normalize() {
  if (num.is_zero()) {
    pow = 0;
    return;
  }
  while (pow > 0) {
    auto [q, exact] = divide_x_minus_y(num);
    if (!exact) break;
    num = q;
    --pow;
  }
  if (pow < 0) {
    // Fold negative powers back into the numerator.
    Poly2<Rational> d = x_minus_y();
    for (; pow < 0; ++pow) num = num * d;
  }
}

RationalXY operator+(const RationalXY& a, const RationalXY& b) {
  RationalXY r;
  int p = std::max(a.pow, b.pow);
  Poly2<Rational> an = a.num, bn = b.num;
  Poly2<Rational> d = x_minus_y();
  for (int k = a.pow; k < p; ++k) an = an * d;
  for (int k = b.pow; k < p; ++k) bn = bn * d;
  r.num = an + bn;
  r.pow = p;
  r.normalize();
  return r;
}

RationalXY operator-(const RationalXY& a) {
  RationalXY r = a;
  r.num = -r.num;
  return r;
}

RationalXY operator-(const RationalXY& a, const RationalXY& b) {
  return a + (-b);
}

RationalXY operator*(const RationalXY& a, const RationalXY& b) {
  RationalXY r;
  r.num = a.num * b.num;
  r.pow = a.pow + b.pow;
  r.normalize();
  return r;
}

RationalXY dx(const RationalXY& f) {
  // (p/(x-y)^m)_x = (p_x (x-y) - m p) / (x-y)^{m+1}
  RationalXY r;
  r.num = f.num.dx() * x_minus_y() - f.num.scaled(Rational(f.pow));
  r.pow = f.pow + 1;
  r.normalize();
  return r;
}

RationalXY dy(const RationalXY& f) {
  RationalXY r;
  r.num = f.num.dy() * x_minus_y() + f.num.scaled(Rational(f.pow));
  r.pow = f.pow + 1;
  r.normalize();
  return r;
}

RationalXY div_xy(const RationalXY& f, int k) {
  RationalXY r = f;
  r.pow += k;
  r.normalize();
  return r;
}

RationalXY mul_xy(const RationalXY& f, int k) {
  return div_xy(f, -k);
}

bool equal(const RationalXY& a, const RationalXY& b) {
  return (a - b).is_zero();
}

std::string format_rxy(const RationalXY& f, const std::string& v1,
                       const std::string& v2) {
  std::string s = format_poly(f.num, v1, v2);
  if (f.pow == 0) return s;
  std::string d = "(" + v1 + "-" + v2 + ")";
  if (f.pow > 1) d += "^" + std::to_string(f.pow);
  return "(" + s + ")/" + d;
}

RationalXY apply_epd(const Rational& eps, const RationalXY& f) {
  RationalXY fxy = dy(dx(f));
  RationalXY diff = dx(f) - dy(f);
  RationalXY corr = div_xy(diff, 1);
  corr.num = corr.num.scaled(eps);
  corr.normalize();
  return fxy - corr;
}

RationalXY commutation_residual(const Rational& eps, const Rational& mu,
                                const RationalXY& f) {
  RationalXY lhs = apply_epd(eps + 1, apply_epd(mu, f));
  RationalXY rhs = apply_epd(mu + 1, apply_epd(eps, f));
  return lhs - rhs;
}

RationalXY index_shift_residual(const Rational& eps, const Rational& mu,
                                int n) {
  if (n < 0) throw HodoError(Status::InvalidInput, "negative series index");
  CoeffTable low = coeff_table(eps, n);
  RationalXY lhs = apply_epd(mu, RationalXY::from_poly(low.entry[n]));
  if (n < 2) return lhs;
  CoeffTable high = coeff_table(eps + 1, n - 2);
  RationalXY rhs =
      RationalXY::from_poly(high.entry[n - 2].scaled(eps * (eps - mu)));
  return lhs - rhs;
}

RationalXY tilde_duality_residual(const RationalXY& f) {
  RationalXY lhs = dy(dx(mul_xy(apply_epd(Rational(-1, 2), f))));
  RationalXY rhs = mul_xy(apply_epd(Rational(1, 2), dy(dx(f))));
  return lhs - rhs;
}

namespace {

RationalXY random_rational_input(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 6), pw(0, 3);
  Poly2<Rational> p;
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

}  // namespace

IdentityReport identity_battery(unsigned seed, int count, int max_n) {
  if (count < 1 || max_n < 0)
    throw HodoError(Status::InvalidInput, "battery needs count >= 1, n >= 0");
  std::vector<Rational> grid;
  for (int n = -3; n <= 3; ++n) grid.emplace_back(n, 2);

  IdentityReport rep;
  rep.seed = seed;
  rep.count = count;
  rep.max_n = max_n;
  std::mt19937 rng(seed);

  IdentityCheck ann{"annihilation", 0, 0, 0};
  for (const Rational& eps : grid) {
    CoeffTable tab = coeff_table(eps, max_n);
    for (int n = 0; n <= max_n; ++n) {
      ++ann.cases;
      if (!apply_epd(eps, RationalXY::from_poly(tab.entry[n])).is_zero())
        ++ann.failures;
    }
  }
  rep.checks.push_back(ann);

  IdentityCheck com{"commutation", 0, 0, 0};
  for (int trial = 0; trial < count; ++trial) {
    RationalXY f = random_rational_input(rng);
    const Rational& eps = grid[trial % grid.size()];
    const Rational& mu = grid[(trial * 3 + 1) % grid.size()];
    ++com.cases;
    if (!commutation_residual(eps, mu, f).is_zero()) ++com.failures;
  }
  rep.checks.push_back(com);

  IdentityCheck shift{"index-shift", 0, 0, 0};
  for (const Rational& eps : grid)
    for (const Rational& mu : grid)
      for (int n = 0; n <= max_n; ++n) {
        ++shift.cases;
        if (!index_shift_residual(eps, mu, n).is_zero()) ++shift.failures;
      }
  rep.checks.push_back(shift);

  IdentityCheck dual{"duality", 0, 0, 0};
  for (int trial = 0; trial < count; ++trial) {
    ++dual.cases;
    if (!tilde_duality_residual(random_rational_input(rng)).is_zero())
      ++dual.failures;
  }
  rep.checks.push_back(dual);

  // Float spot check of the defining identity, with the mixed derivative
  // taken from exact bivariate differentiation rather than the ladder.
  IdentityCheck fl{"float-defining-identity", 0, 0, 0};
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int trial = 0; trial < count; ++trial) {
    int n = 2 + trial % 5;
    std::vector<double> vals(n);
    for (auto& v : vals) v = U(rng);
    TimeVector t =
        trial % 2 ? TimeVector::dtoda(vals) : TimeVector::benney(vals);
    double b1 = U(rng), b2 = U(rng);
    if (std::abs(b1 - b2) < 0.1) b2 += 0.5;
    RiemannPoint p = RiemannPoint::hyperbolic(b1, b2);
    auto tw = derivative_towers(t, p, 1);
    std::vector<Rational> rvals(vals.begin(), vals.end());
    auto wxy = w_polynomial(t.eps, t.first, rvals).dx().dy();
    double w12 = to_double(wxy.eval(Rational(b1), Rational(b2)));
    double eps = to_double(t.eps);
    double lhs = (b1 - b2) * w12;
    double rhs = eps * (tw.pure1[0] - tw.pure2[0]);
    double scale = std::abs(lhs) + std::abs(eps * tw.pure1[0]) +
                   std::abs(eps * tw.pure2[0]) + 1e-30;
    double res = std::abs(lhs - rhs) / scale;
    ++fl.cases;
    fl.max_residual = std::max(fl.max_residual, res);
    if (res >= 1e-9) ++fl.failures;
  }
  rep.checks.push_back(fl);
  return rep;
}

}  // namespace hodo
