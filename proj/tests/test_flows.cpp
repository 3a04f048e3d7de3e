#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hodo/flows.hpp"

using namespace hodo;

namespace {

template <class F>
Status thrown_status(F&& f) {
  try {
    f();
  } catch (const HodoError& e) {
    return e.status;
  }
  return Status::Ok;
}

const FlowGrid kPatch{-1.01, -0.99, -0.01, 0.01, 21, 21};  // h = 1e-3

}  // namespace

TEST_CASE("the first flow is transport along the space slot itself") {
  auto t = TimeVector::benney({-1.0, 0.0, 1.0});
  auto f = benney_flow_residual(1, t, RiemannPoint::hyperbolic(0.8, -0.8),
                                kPatch, 2);
  CHECK(f.max_res1 < 1e-12);
  CHECK(f.max_res2 < 1e-12);
  CHECK_FALSE(f.chart_form);

  auto td = TimeVector::dtoda({-1.0, 0.0, 1.0});
  auto fd = dtoda_flow_residual(0, td, RiemannPoint::hyperbolic(1.4, -1.4),
                                kPatch, 2);
  CHECK(fd.max_res1 < 1e-12);
  CHECK(fd.max_res2 < 1e-12);
}

TEST_CASE("long-wave flow: second-order residuals, deterministic threading") {
  auto t = TimeVector::benney({-1.0, 0.0, 1.0});
  auto seed = RiemannPoint::hyperbolic(0.8, -0.8);
  auto f = benney_flow_residual(2, t, seed, kPatch, 1);
  CHECK(f.max_res1 < 1e-5);
  CHECK(f.max_res2 < 1e-5);
  CHECK(f.max_res1 > 1e-9);  // genuinely finite-difference, not exact
  CHECK(f.min_v > 0);
  CHECK(f.nodes == 21 * 21);
  CHECK(f.samples.size() == 19u * 19u);

  // On this cubic family u is linear and v quadratic in the patch
  // variables, so the chart-form residuals sit at round-off.
  CHECK(f.chart_form);
  CHECK(f.max_res_u < 1e-10);
  CHECK(f.max_res_v < 1e-10);

  // Thread count must not change a single bit of the result.
  auto f4 = benney_flow_residual(2, t, seed, kPatch, 4);
  REQUIRE(f4.samples.size() == f.samples.size());
  CHECK(f4.max_res1 == f.max_res1);
  for (std::size_t i = 0; i < f.samples.size(); i += 37) {
    CHECK(f4.samples[i].p.b1 == f.samples[i].p.b1);
    CHECK(f4.samples[i].res1 == f.samples[i].res1);
  }

  auto ord = flow_convergence(Hierarchy::Benney, 2, t, seed, kPatch, 4);
  CHECK(ord.order1 > 1.9);
  CHECK(ord.order2 > 1.9);
}

TEST_CASE("higher flows and a quartic family with curved chart fields") {
  auto t3 = TimeVector::benney({-1.0, 0.0, 1.0, 0.0});
  auto seed = RiemannPoint::hyperbolic(0.8, -0.8);
  FlowGrid g3{-1.01, -0.99, 0.99, 1.01, 21, 21};
  auto o3 = flow_convergence(Hierarchy::Benney, 3, t3, seed, g3, 4);
  CHECK(o3.coarse.max_res1 < 1e-5);
  CHECK(o3.coarse.max_res2 < 1e-5);
  CHECK(o3.order1 > 1.9);
  CHECK(o3.order2 > 1.9);

  // t4 != 0 bends u and v, so the chart residuals become honest O(h^2)
  // fields; they must shrink at the same rate as the invariant form.
  auto tq = TimeVector::benney({-1.0, 0.0, 1.0, 0.3});
  auto oq = flow_convergence(Hierarchy::Benney, 2, tq,
                             RiemannPoint::hyperbolic(0.7, -0.9), kPatch, 4);
  CHECK(oq.coarse.max_res_u > 1e-8);
  CHECK(oq.coarse.max_res_u < 1e-5);
  CHECK(oq.coarse.max_res_v < 1e-5);
  CHECK(std::log2(oq.coarse.max_res_u / oq.fine.max_res_u) > 1.9);
  CHECK(std::log2(oq.coarse.max_res_v / oq.fine.max_res_v) > 1.9);
  CHECK(oq.order1 > 1.9);
  CHECK(oq.order2 > 1.9);
}

TEST_CASE("dual hierarchy flows and the exactly linear chart family") {
  auto td = TimeVector::dtoda({-1.0, 0.0, 1.0});
  auto sd = RiemannPoint::hyperbolic(1.4, -1.4);
  auto od = flow_convergence(Hierarchy::DToda, 1, td, sd, kPatch, 4);
  CHECK(od.coarse.max_res1 < 1e-5);
  CHECK(od.coarse.max_res2 < 1e-5);
  CHECK(od.order1 > 1.9);
  CHECK(od.order2 > 1.9);

  // Three active slots force u = 2 x_1 and v = -2 x_0 exactly, a linear
  // solution of the dual system; centered differences resolve it to
  // round-off, and the samples sit on that plane.
  CHECK(od.coarse.chart_form);
  CHECK(od.coarse.max_res_u < 1e-9);
  CHECK(od.coarse.max_res_v < 1e-9);
  for (std::size_t i = 0; i < od.coarse.samples.size(); i += 53) {
    const auto& s = od.coarse.samples[i];
    UV c = uv_map(s.p);
    CHECK(c.u == doctest::Approx(2 * s.s).epsilon(1e-10));
    CHECK(c.v == doctest::Approx(-2 * s.x).epsilon(1e-10));
  }

  FlowGrid g2{-1.01, -0.99, 0.99, 1.01, 21, 21};
  auto o2 = flow_convergence(Hierarchy::DToda, 2, td, sd, g2, 4);
  CHECK(o2.coarse.max_res1 < 1e-5);
  CHECK(o2.order1 > 1.9);
  CHECK(o2.order2 > 1.9);

  // A fourth slot bends the chart fields here as well.
  auto tq = TimeVector::dtoda({-1.0, 0.0, 1.0, 0.2});
  auto fq = dtoda_flow_residual(1, tq, RiemannPoint::hyperbolic(1.3, -1.5),
                                kPatch, 4);
  CHECK(fq.max_res_u > 1e-8);
  CHECK(fq.max_res_u < 1e-5);
  CHECK(fq.max_res_v < 1e-5);
}

TEST_CASE("patches that cross the singular locus are refused") {
  auto t = TimeVector::benney({-1.0, 0.0, 1.0});
  auto seed = RiemannPoint::hyperbolic(0.8, -0.8);
  // The cubic family merges its invariants at x = 0.
  CHECK(thrown_status([&] {
          benney_flow_residual(2, t, seed,
                               FlowGrid{-0.05, 0.05, -0.01, 0.01, 11, 5}, 2);
        }) == Status::GridCrossesSingularity);

  CHECK(thrown_status([&] {
          benney_flow_residual(2, TimeVector::dtoda({1.0, 1.0}), seed, kPatch);
        }) == Status::InvalidInput);
  CHECK(thrown_status([&] {
          dtoda_flow_residual(-1, TimeVector::dtoda({1.0, 0.0, 1.0}), seed,
                              kPatch);
        }) == Status::InvalidInput);
  CHECK(thrown_status([&] {
          benney_flow_residual(2, t, seed, FlowGrid{0, 1, 1, 0, 5, 5});
        }) == Status::InvalidInput);
  CHECK(thrown_status([&] {
          benney_flow_residual(2, t, seed, FlowGrid{0, 1, 0, 1, 2, 5});
        }) == Status::InvalidInput);
}

TEST_CASE("initial data slice: closed form, symmetry, evolution") {
  auto sl = initial_data_slice(1.0, 0.0, -1.5, -0.5, 11,
                               RiemannPoint::hyperbolic(1.0, -1.0));
  REQUIRE(sl.x.size() == 11);
  for (std::size_t i = 0; i < sl.x.size(); ++i) {
    double r = std::sqrt(-2 * sl.x[i] / 3);
    CHECK(sl.beta[i].b1.real() == doctest::Approx(r).epsilon(1e-10));
    CHECK(sl.beta[i].b2.real() == doctest::Approx(-r).epsilon(1e-10));
  }

  // Relabeling the invariants is a symmetry of the slice.
  auto swapped = initial_data_slice(1.0, 0.0, -1.5, -0.5, 11,
                                    RiemannPoint::hyperbolic(-1.0, 1.0));
  for (std::size_t i = 0; i < swapped.x.size(); ++i) {
    CHECK(swapped.beta[i].b1.real() ==
          doctest::Approx(sl.beta[i].b2.real()).epsilon(1e-10));
    CHECK(swapped.beta[i].b2.real() ==
          doctest::Approx(sl.beta[i].b1.real()).epsilon(1e-10));
  }

  // The potential gradient is homogeneous in t, so t3 -> c t3, x -> c x
  // leaves the invariants untouched.
  auto scaled = initial_data_slice(2.0, 0.0, -3.0, -1.0, 11,
                                   RiemannPoint::hyperbolic(1.0, -1.0));
  for (std::size_t i = 0; i < scaled.x.size(); ++i)
    CHECK(scaled.beta[i].b1.real() ==
          doctest::Approx(sl.beta[i].b1.real()).epsilon(1e-10));

  // Evolving off the slice agrees with solving directly at t2 > 0.
  auto base = TimeVector::benney({-1.0, 0.0, 1.0});
  auto grid = benney_flow_residual(
      2, base, sl.beta[5], FlowGrid{-1.05, -0.95, 0.0, 0.02, 11, 5}, 2);
  bool found = false;
  for (const auto& s : grid.samples)
    if (std::abs(s.x + 1.0) < 1e-12 && std::abs(s.s - 0.01) < 1e-12) {
      found = true;
      auto direct = solve_regular(TimeVector::benney({-1.0, 0.01, 1.0}),
                                  RiemannPoint::hyperbolic(0.9, -0.75));
      CHECK(std::abs(s.p.b1.real() - direct.p.b1.real()) < 1e-9);
      CHECK(std::abs(s.p.b2.real() - direct.p.b2.real()) < 1e-9);
    }
  CHECK(found);

  CHECK(thrown_status([&] {
          initial_data_slice(1.0, 0.0, -0.5, 0.5, 11,
                             RiemannPoint::hyperbolic(1.0, -1.0));
        }) == Status::GridCrossesSingularity);
}
