#pragma once

#include "hodo/poly.hpp"
#include "hodo/rational.hpp"

namespace hodo {

// Exact rational function p(x, y) / (x - y)^pow. Kept canonical: pow >= 0
// and (x - y) does not divide p unless pow == 0.
struct RationalXY {
  Poly2<Rational> num;
  int pow = 0;

  static RationalXY from_poly(Poly2<Rational> p) {
    RationalXY f;
    f.num = std::move(p);
    return f;
  }

  bool is_zero() const { return num.is_zero(); }
  void normalize();
};

RationalXY operator+(const RationalXY& a, const RationalXY& b);
RationalXY operator-(const RationalXY& a, const RationalXY& b);
RationalXY operator*(const RationalXY& a, const RationalXY& b);
RationalXY operator-(const RationalXY& a);

RationalXY dx(const RationalXY& f);
RationalXY dy(const RationalXY& f);
// f / (x - y)^k
RationalXY div_xy(const RationalXY& f, int k = 1);
// f * (x - y)^k
RationalXY mul_xy(const RationalXY& f, int k = 1);
bool equal(const RationalXY& a, const RationalXY& b);
std::string format_rxy(const RationalXY& f, const std::string& v1 = "x",
                       const std::string& v2 = "y");

// L_eps f = f_xy - eps/(x-y) (f_x - f_y). Exact.
RationalXY apply_epd(const Rational& eps, const RationalXY& f);

// L_{eps+1} L_mu f - L_{mu+1} L_eps f; identically zero for every f.
RationalXY commutation_residual(const Rational& eps, const Rational& mu,
                                const RationalXY& f);

// L_mu C_n^eps - eps (eps - mu) C_{n-2}^{eps+1}; identically zero
// (C_k with negative index reads as 0).
RationalXY index_shift_residual(const Rational& eps, const Rational& mu,
                                int n);

// dxdy((x-y) L_{-1/2} f) - (x-y) L_{1/2}(dxdy f); identically zero.
RationalXY tilde_duality_residual(const RationalXY& f);

struct IdentityCheck {
  std::string name;
  int cases = 0;
  int failures = 0;
  double max_residual = 0;  // 0 for the exact-arithmetic checks
};

struct IdentityReport {
  unsigned seed = 0;
  int count = 0;
  int max_n = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.failures) return false;
    return true;
  }
};

// Runs the whole operator battery: annihilation of the series entries,
// commutation and index shift over the half-integer exponent grid, the
// transposed-operator duality on randomized rational inputs, and a float
// spot check of the defining identity at random hyperbolic points.
IdentityReport identity_battery(unsigned seed, int count, int max_n = 6);

}  // namespace hodo
