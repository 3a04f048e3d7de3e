#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "hodo/potential.hpp"
#include "hodo/series.hpp"
#include "hodo/types.hpp"

using namespace hodo;

namespace {

// Fourth-order central difference, step picked for ~1e-10 truncation error.
template <class F>
double fd(F f, double x, double h = 1e-4) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
         (12 * h);
}

const TimeVector kBen =
    TimeVector::benney({0.3, -1.1, 0.7, 0.25, -0.4});
const TimeVector kToda = TimeVector::dtoda({0.4, -0.9, 0.6, 0.2});

}  // namespace

TEST_CASE("frozen potential values") {
  CHECK(eval_w(TimeVector::benney({1.0}), RiemannPoint::hyperbolic(2, 4)) ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK(eval_w(TimeVector::benney({0, 1, 1}),
               RiemannPoint::hyperbolic(1, -1)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eval_w(TimeVector::dtoda({1, 1}), RiemannPoint::hyperbolic(1, -1)) ==
        doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("potential equals its exact polynomial form") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    bool toda = trial % 2;
    std::vector<double> vals(4);
    for (auto& v : vals) v = U(rng);
    TimeVector t = toda ? TimeVector::dtoda(vals) : TimeVector::benney(vals);
    std::vector<Rational> rvals(vals.begin(), vals.end());
    auto wp = w_polynomial(t.eps, t.first, rvals);
    double b1 = U(rng), b2 = U(rng);
    double exact = to_double(wp.eval(Rational(b1), Rational(b2)));
    CHECK(eval_w(t, RiemannPoint::hyperbolic(b1, b2)) ==
          doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("first ladder rung against the hodograph polynomial") {
  // dW/db1 = h(b1)/2 for Benney, -h(b1)/2 for dToda.
  RiemannPoint p = RiemannPoint::hyperbolic(1.2, -0.8);
  auto hb = h_polynomial(kBen, p);
  CHECK(derivative_tower(kBen, p, 1, 1)[0] ==
        doctest::Approx(0.5 * hb.eval(1.2)).epsilon(1e-13));
  CHECK(derivative_tower(kBen, p, 2, 1)[0] ==
        doctest::Approx(0.5 * hb.eval(-0.8)).epsilon(1e-13));
  auto ht = h_polynomial(kToda, p);
  CHECK(derivative_tower(kToda, p, 1, 1)[0] ==
        doctest::Approx(-0.5 * ht.eval(1.2)).epsilon(1e-13));
  CHECK(h_polynomial(kBen, p).degree() == 4);
  CHECK(ht.degree() == 3);
}

TEST_CASE("pure ladders validated rung by rung with finite differences") {
  for (const TimeVector& t : {kBen, kToda}) {
    const double b1 = 1.2, b2 = -0.8;
    RiemannPoint p = RiemannPoint::hyperbolic(b1, b2);
    auto tower = derivative_tower(t, p, 1, 4);
    double w1 = fd([&](double x) {
      return eval_w(t, RiemannPoint::hyperbolic(x, b2));
    }, b1);
    CHECK(tower[0] == doctest::Approx(w1).epsilon(1e-8));
    for (int k = 1; k < 4; ++k) {
      double next = fd([&](double x) {
        return derivative_tower(t, RiemannPoint::hyperbolic(x, b2), 1, k)[k - 1];
      }, b1);
      CHECK(tower[k] == doctest::Approx(next).epsilon(1e-7));
    }
    auto tower2 = derivative_tower(t, p, 2, 4);
    auto swapped = derivative_tower(t, RiemannPoint::hyperbolic(b2, b1), 1, 4);
    for (int k = 0; k < 4; ++k)
      CHECK(tower2[k] == doctest::Approx(swapped[k]).epsilon(1e-13));
  }
}

TEST_CASE("mixed ladders validated with finite differences") {
  for (const TimeVector& t : {kBen, kToda}) {
    const double b1 = 1.2, b2 = -0.8;
    RiemannPoint p = RiemannPoint::hyperbolic(b1, b2);
    auto tw = derivative_towers(t, p, 4);
    for (int k = 0; k < 4; ++k) {
      double m = fd([&](double y) {
        if (k == 0) return eval_w(t, RiemannPoint::hyperbolic(b1, y));
        return derivative_tower(t, RiemannPoint::hyperbolic(b1, y), 1, k)[k - 1];
      }, b2);
      CHECK(tw.mixed1[k] == doctest::Approx(m).epsilon(1e-7));
    }
    CHECK(tw.mixed1[1] == doctest::Approx(mixed_12(t, p)).epsilon(1e-13));
    CHECK(tw.mixed2[1] == doctest::Approx(mixed_12(t, p)).epsilon(1e-12));
  }
}

TEST_CASE("defining identity holds in float against exact mixed derivative") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 5;
    std::vector<double> vals(n);
    for (auto& v : vals) v = U(rng);
    bool toda = trial % 2;
    TimeVector t = toda ? TimeVector::dtoda(vals) : TimeVector::benney(vals);
    double b1 = U(rng), b2 = U(rng);
    if (std::abs(b1 - b2) < 0.1) b2 += 0.5;
    RiemannPoint p = RiemannPoint::hyperbolic(b1, b2);
    auto tw = derivative_towers(t, p, 1);
    // Mixed derivative from exact bivariate differentiation, evaluated in
    // exact arithmetic; nothing here reuses the ladder recursions.
    std::vector<Rational> rvals(vals.begin(), vals.end());
    auto wxy = w_polynomial(t.eps, t.first, rvals).dx().dy();
    double w12 = to_double(wxy.eval(Rational(b1), Rational(b2)));
    double eps = to_double(t.eps);
    double lhs = (b1 - b2) * w12;
    double rhs = eps * (tw.pure1[0] - tw.pure2[0]);
    double scale = std::abs(lhs) + std::abs(eps * tw.pure1[0]) +
                   std::abs(eps * tw.pure2[0]) + 1e-30;
    CHECK(std::abs(lhs - rhs) / scale < 1e-9);
  }
}

TEST_CASE("characteristic speeds") {
  RiemannPoint p = RiemannPoint::hyperbolic(1.0, 0.0);
  CHECK(char_speed(Hierarchy::Benney, 3, p, 1) ==
        doctest::Approx(15.0 / 8).epsilon(1e-14));
  // n = 2 collapses to (3 b_i + b_j)/2.
  RiemannPoint q = RiemannPoint::hyperbolic(0.7, -0.3);
  CHECK(char_speed(Hierarchy::Benney, 2, q, 1) ==
        doctest::Approx(0.5 * (3 * 0.7 - 0.3)).epsilon(1e-14));
  CHECK(char_speed(Hierarchy::Benney, 2, q, 2) ==
        doctest::Approx(0.5 * (0.7 - 3 * 0.3)).epsilon(1e-14));
  // dToda n = 1 gives +-(b1-b2)/2.
  CHECK(char_speed(Hierarchy::DToda, 1, q, 1) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(char_speed(Hierarchy::DToda, 1, q, 2) ==
        doctest::Approx(-0.5).epsilon(1e-14));
  // Benney speed is the unit-slot hodograph polynomial at beta_i.
  TimeVector unit = TimeVector::benney({0, 0, 0, 1});
  auto h = h_polynomial(unit, q);
  CHECK(char_speed(Hierarchy::Benney, 4, q, 1) ==
        doctest::Approx(h.eval(0.7)).epsilon(1e-13));
  CHECK_THROWS_AS(char_speed(Hierarchy::Benney, 0, q, 1), HodoError);
  CHECK_THROWS_AS(char_speed(Hierarchy::Benney, 2, q, 3), HodoError);
}

TEST_CASE("ladders are linear in the times") {
  RiemannPoint p = RiemannPoint::hyperbolic(0.9, -0.4);
  auto full = derivative_tower(kBen, p, 1, 3);
  std::vector<double> acc(3, 0.0);
  for (int n = 1; n <= kBen.top(); ++n) {
    auto part = slot_tower(kBen, n, p, 1, 3);
    for (int k = 0; k < 3; ++k) acc[k] += kBen.at(n) * part[k];
  }
  for (int k = 0; k < 3; ++k)
    CHECK(full[k] == doctest::Approx(acc[k]).epsilon(1e-12));
}

TEST_CASE("chart round trips and sector signs") {
  UV m = uv_map(RiemannPoint::hyperbolic(2, -2));
  CHECK(m.u == doctest::Approx(0.0));
  CHECK(m.v == doctest::Approx(4.0));
  UV m2 = uv_map(RiemannPoint::hyperbolic(3, 1));
  CHECK(m2.u == doctest::Approx(-4.0));
  CHECK(m2.v == doctest::Approx(1.0));
  RiemannPoint back = uv_unmap(-4.0, 1.0);
  CHECK(back.b1.real() == doctest::Approx(3.0));
  CHECK(back.b2.real() == doctest::Approx(1.0));
  RiemannPoint el = uv_unmap(0.0, -1.0);
  CHECK(el.b1.imag() == doctest::Approx(1.0));
  CHECK(el.b1.real() == doctest::Approx(0.0));
  UV m3 = uv_map(RiemannPoint::elliptic({0.5, 1.5}));
  CHECK(m3.u == doctest::Approx(-1.0));
  CHECK(m3.v == doctest::Approx(-2.25));
  CHECK_THROWS_AS(uv_unmap(1.0, 0.0), HodoError);
}

TEST_CASE("chart evaluation matches both sectors") {
  for (auto [u, v] : {std::pair{0.8, 2.3}, std::pair{-1.4, -0.6}}) {
    RiemannPoint p = uv_unmap(u, v);
    CHECK(eval_w_uv(kBen, u, v) ==
          doctest::Approx(eval_w(kBen, p)).epsilon(1e-13));
    CHECK(eval_w_uv(kToda, u, v) ==
          doctest::Approx(eval_w(kToda, p)).epsilon(1e-13));
  }
}

TEST_CASE("conjugate pairs give real values and real mixed derivative") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> vals(5);
    for (auto& v : vals) v = U(rng);
    TimeVector t = trial % 2 ? TimeVector::benney(vals)
                             : TimeVector::dtoda(vals);
    std::complex<double> beta(U(rng), 0.3 + std::abs(U(rng)));
    auto wc = eval_w_complex(t, beta, std::conj(beta));
    CHECK(std::abs(wc.imag()) <= 1e-12 * (1.0 + std::abs(wc.real())));
    RiemannPoint p = RiemannPoint::elliptic(beta);
    CHECK(eval_w(t, p) == doctest::Approx(wc.real()).epsilon(1e-11));
    auto bt = beta_tower(t, beta, 2);
    // d/dV of W is 2 Re(i W_1) = -2 Im W_1, finite-differenced below.
    double dv = fd([&](double V) {
      return eval_w(t, RiemannPoint::elliptic({beta.real(), V}));
    }, beta.imag());
    CHECK(-2 * bt[0].imag() == doctest::Approx(dv).epsilon(1e-7));
  }
}

TEST_CASE("general exponent evaluation via partial fractions") {
  // At eps = 1 the expansion coefficients are complete homogeneous symmetric
  // polynomials: C_k = (b1^{k+1} - b2^{k+1})/(b1 - b2).
  TimeVector t = TimeVector::general(Rational(1), {0.5, -0.3, 0.8});
  double b1 = 0.9, b2 = -0.6;
  double expect = 0.0;
  for (int n = 1; n <= 3; ++n) {
    double C = (std::pow(b1, n + 1) - std::pow(b2, n + 1)) / (b1 - b2);
    expect += t.at(n) * C;
  }
  CHECK(eval_w(t, RiemannPoint::hyperbolic(b1, b2)) ==
        doctest::Approx(expect).epsilon(1e-13));
  CHECK_THROWS_AS(derivative_tower(t, RiemannPoint::hyperbolic(b1, b2), 1, 2),
                  HodoError);
}

TEST_CASE("time vector parsing and formatting") {
  TimeVector t = TimeVector::parse(Hierarchy::Benney, "x=1,t3=-0.5,t2=1/4");
  CHECK(t.at(1) == 1.0);
  CHECK(t.at(2) == 0.25);
  CHECK(t.at(3) == -0.5);
  CHECK(t.top() == 3);
  CHECK(t.slot_name(1) == "x");
  CHECK(t.slot_index("t1") == 1);
  TimeVector d = TimeVector::parse(Hierarchy::DToda, "x0=2,x2=1");
  CHECK(d.first == 0);
  CHECK(d.at(0) == 2.0);
  CHECK(d.at(1) == 0.0);
  CHECK(d.at(2) == 1.0);
  CHECK_THROWS_AS(TimeVector::parse(Hierarchy::Benney, "x0=1"), HodoError);
  CHECK_THROWS_AS(TimeVector::parse(Hierarchy::Benney, "t2"), HodoError);
  CHECK_THROWS_AS(TimeVector::parse(Hierarchy::Benney, ""), HodoError);
  CHECK(TimeVector::parse(Hierarchy::DToda, d.format()).format() == d.format());
}

TEST_CASE("small linear solves") {
  auto x = solve_linear({{2, 1}, {1, 3}}, {5, 10});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(3.0));
  CHECK_THROWS_AS(solve_linear({{1, 2}, {2, 4}}, {1, 2}), HodoError);
}
