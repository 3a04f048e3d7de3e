#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "hodo/rational.hpp"
#include "hodo/types.hpp"

namespace hodo {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::InvalidInput: return "invalid_input";
    case Status::NoConvergence: return "no_convergence";
    case Status::Collapse: return "collapse";
    case Status::RealCollapse: return "real_collapse";
    case Status::SingularHessian: return "singular_hessian";
    case Status::DegenerateDelta: return "degenerate_delta";
    case Status::BadArity: return "bad_arity";
    case Status::RadicandNegative: return "radicand_negative";
    case Status::ToleranceAmbiguity: return "tolerance_ambiguity";
    case Status::AllCoefficientsVanish: return "all_coefficients_vanish";
    case Status::EmptyLocus: return "empty_locus";
    case Status::DeeperSingularity: return "deeper_singularity";
    case Status::GridCrossesSingularity: return "grid_crosses_singularity";
    case Status::NotOnManifold: return "not_on_manifold";
    case Status::Unsupported: return "unsupported";
    case Status::Internal: return "internal";
  }
  return "unknown";
}

const char* hierarchy_name(Hierarchy h) {
  switch (h) {
    case Hierarchy::Benney: return "benney";
    case Hierarchy::DToda: return "dtoda";
    case Hierarchy::GeneralEps: return "general";
  }
  return "unknown";
}

Hierarchy hierarchy_from_name(const std::string& name) {
  if (name == "benney") return Hierarchy::Benney;
  if (name == "dtoda") return Hierarchy::DToda;
  if (name == "general") return Hierarchy::GeneralEps;
  throw HodoError(Status::InvalidInput, "unknown hierarchy '" + name + "'");
}

Rational hierarchy_eps(Hierarchy h) {
  switch (h) {
    case Hierarchy::Benney: return Rational(1, 2);
    case Hierarchy::DToda: return Rational(-1, 2);
    case Hierarchy::GeneralEps: break;
  }
  throw HodoError(Status::InvalidInput, "general hierarchy needs explicit eps");
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  if (s.empty()) throw HodoError(Status::InvalidInput, "empty number");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      mpz_class num(s.substr(0, slash), 10), den(s.substr(slash + 1), 10);
      if (den == 0) throw HodoError(Status::InvalidInput, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    auto dot = s.find('.');
    auto epos = s.find_first_of("eE");
    long expo = 0;
    if (epos != std::string::npos) {
      expo = std::strtol(s.c_str() + epos + 1, nullptr, 10);
      s = s.substr(0, epos);
      dot = s.find('.');
    }
    std::string digits = s;
    long frac = 0;
    if (dot != std::string::npos) {
      frac = static_cast<long>(s.size() - dot - 1);
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument(text);
    mpz_class num(digits, 10);
    Rational q(num);
    long net = expo - frac;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
    if (net >= 0)
      q *= Rational(p10);
    else
      q /= Rational(p10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw HodoError(Status::InvalidInput, "bad number '" + text + "'");
  }
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational odd_double_factorial(long k) {
  // (2k-1)!!, with (-1)!! = 1.
  Rational r(1);
  for (long m = 2 * k - 1; m >= 3; m -= 2) r *= m;
  return r;
}

TimeVector TimeVector::benney(std::vector<double> vals) {
  TimeVector t;
  t.hierarchy = Hierarchy::Benney;
  t.eps = Rational(1, 2);
  t.first = 1;
  t.values = std::move(vals);
  if (t.values.empty()) throw HodoError(Status::InvalidInput, "no times given");
  return t;
}

TimeVector TimeVector::dtoda(std::vector<double> vals) {
  TimeVector t;
  t.hierarchy = Hierarchy::DToda;
  t.eps = Rational(-1, 2);
  t.first = 0;
  t.values = std::move(vals);
  if (t.values.empty()) throw HodoError(Status::InvalidInput, "no times given");
  return t;
}

TimeVector TimeVector::general(const Rational& eps, std::vector<double> vals) {
  TimeVector t;
  t.hierarchy = Hierarchy::GeneralEps;
  t.eps = eps;
  t.first = 1;
  t.values = std::move(vals);
  if (t.values.empty()) throw HodoError(Status::InvalidInput, "no times given");
  return t;
}

void TimeVector::set(int n, double v) {
  if (n < first) throw HodoError(Status::InvalidInput, "slot below range");
  int k = n - first;
  if (k >= static_cast<int>(values.size())) values.resize(k + 1, 0.0);
  values[k] = v;
}

std::string TimeVector::slot_name(int n) const {
  if (first == 0) return "x" + std::to_string(n);
  if (n == 1) return "x";
  return "t" + std::to_string(n);
}

int TimeVector::slot_index(const std::string& name) const {
  if (first == 1 && (name == "x" || name == "t1")) return 1;
  if (first == 0 && (name == "x0" || name == "t0")) return 0;
  char lead = first == 0 ? 'x' : 't';
  if (name.size() >= 2 && name[0] == lead) {
    char* end = nullptr;
    long n = std::strtol(name.c_str() + 1, &end, 10);
    if (end && *end == '\0' && n >= first) return static_cast<int>(n);
  }
  throw HodoError(Status::InvalidInput, "unknown time slot '" + name + "'");
}

TimeVector TimeVector::parse(Hierarchy h, const std::string& spec,
                             const Rational& eps) {
  TimeVector t;
  switch (h) {
    case Hierarchy::Benney: t = benney({0.0}); break;
    case Hierarchy::DToda: t = dtoda({0.0}); break;
    case Hierarchy::GeneralEps: t = general(eps, {0.0}); break;
  }
  std::stringstream ss(spec);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw HodoError(Status::InvalidInput,
                      "time entry '" + item + "' is not name=value");
    int slot = t.slot_index(item.substr(0, eq));
    t.set(slot, to_double(parse_rational(item.substr(eq + 1))));
    any = true;
  }
  if (!any) throw HodoError(Status::InvalidInput, "empty time vector");
  return t;
}

std::string TimeVector::format() const {
  std::ostringstream os;
  bool first_out = true;
  for (int n = first; n <= top(); ++n) {
    if (at(n) == 0.0 && n != first) continue;
    if (!first_out) os << ",";
    os << slot_name(n) << "=" << format_double(at(n));
    first_out = false;
  }
  return os.str();
}

UV uv_map(const RiemannPoint& p) {
  std::complex<double> u = -(p.b1 + p.b2);
  std::complex<double> d = p.b1 - p.b2;
  std::complex<double> v = 0.25 * d * d;
  if (std::abs(u.imag()) > 1e-12 * (1.0 + std::abs(u.real())) ||
      std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
    throw HodoError(Status::InvalidInput,
                    "point is neither hyperbolic nor a conjugate pair");
  return {u.real(), v.real()};
}

RiemannPoint uv_unmap(double u, double v) {
  if (v == 0.0)
    throw HodoError(Status::InvalidInput, "v = 0 is the collapsed border");
  if (v > 0.0) {
    double s = std::sqrt(v);
    return RiemannPoint::hyperbolic(-0.5 * u + s, -0.5 * u - s);
  }
  double s = std::sqrt(-v);
  return RiemannPoint::elliptic({-0.5 * u, s});
}

std::vector<double> solve_linear(std::vector<std::vector<double>> A,
                                 std::vector<double> rhs) {
  const int n = static_cast<int>(A.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (A[piv][col] == 0.0 || !std::isfinite(A[piv][col]))
      throw HodoError(Status::SingularHessian, "singular linear system");
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < n; ++r) {
      double f = A[r][col] / A[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return x;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back = std::strtod(buf, nullptr);
  for (int prec = 1; prec <= 16; ++prec) {
    char trial[40];
    std::snprintf(trial, sizeof trial, "%.*g", prec, v);
    if (std::strtod(trial, nullptr) == back) return trial;
  }
  return buf;
}

}  // namespace hodo
