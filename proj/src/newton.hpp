#pragma once

// Damped Newton kernel shared by the hodograph and elliptic solvers.
// Internal to src/.

#include <cmath>
#include <functional>
#include <vector>

#include "hodo/types.hpp"

namespace hodo {

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

struct Problem {
  // Fills F, and J when the pointer is given.
  std::function<void(const std::vector<double>&, std::vector<double>&,
                     std::vector<std::vector<double>>*)>
      eval;
  std::function<void(const std::vector<double>&)> guard;
};

struct NewtonResult {
  int iterations = 0;
  double last_step = 0;  // max-norm of the final accepted displacement
};

inline NewtonResult newton(std::vector<double>& z, const Problem& pb,
                           const SolveOptions& opt) {
  std::vector<double> F, Ft, trial(z.size());
  std::vector<std::vector<double>> J;
  NewtonResult res;
  for (int it = 0; it < opt.max_iter; ++it) {
    pb.guard(z);
    pb.eval(z, F, &J);
    if (!all_finite(F))
      throw HodoError(Status::NoConvergence, "residual is not finite");
    double r = max_abs(F);
    if (r < opt.tol) {
      res.iterations = it;
      return res;
    }
    std::vector<double> rhs(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) rhs[i] = -F[i];
    std::vector<double> step = solve_linear(J, rhs);
    bool accepted = false;
    for (double alpha = 1.0; alpha >= 1.0 / 1024; alpha *= 0.5) {
      for (std::size_t i = 0; i < z.size(); ++i)
        trial[i] = z[i] + alpha * step[i];
      pb.eval(trial, Ft, nullptr);
      if (all_finite(Ft) && max_abs(Ft) <= (1.0 - 1e-4 * alpha) * r) {
        res.last_step = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i)
          res.last_step = std::max(res.last_step, std::abs(trial[i] - z[i]));
        z = trial;
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw HodoError(Status::NoConvergence, "line search stalled");
  }
  pb.guard(z);
  pb.eval(z, F, nullptr);
  if (max_abs(F) < opt.tol) {
    res.iterations = opt.max_iter;
    return res;
  }
  throw HodoError(Status::NoConvergence, "maximum iterations reached");
}

}  // namespace hodo
