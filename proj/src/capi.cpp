#include "hodo.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "hodo/records.hpp"

using namespace hodo;

struct hodo_times {
  TimeVector t;
};

struct hodo_records {
  std::vector<std::string> lines;
  std::string summary;
};

namespace {

thread_local std::string g_error;

template <class F>
hodo_status guarded(F&& body) {
  g_error.clear();
  try {
    body();
    return HODO_OK;
  } catch (const HodoError& e) {
    g_error = e.what();
    return static_cast<hodo_status>(static_cast<int>(e.status));
  } catch (const std::exception& e) {
    g_error = e.what();
    return HODO_INTERNAL;
  }
}

SolveOptions to_options(const hodo_opts* o) {
  SolveOptions s;
  if (!o) return s;
  s.tol = o->tol;
  s.max_iter = o->max_iter;
  s.merge_tol = o->merge_tol;
  s.zero_tol = o->zero_tol;
  s.sing_tol = o->sing_tol;
  s.seed_range = o->seed_range;
  s.order = o->order;
  return s;
}

int jobs_of(const hodo_opts* o) { return o && o->jobs > 1 ? o->jobs : 1; }

hodo_records* make_records(std::vector<std::string> lines,
                           std::string summary) {
  auto* r = new hodo_records;
  r->lines = std::move(lines);
  r->summary = std::move(summary);
  return r;
}

void require(bool ok, const char* msg) {
  if (!ok) throw HodoError(Status::InvalidInput, msg);
}

Rational parse_eps(const char* eps) {
  require(eps && *eps, "missing exponent");
  return parse_rational(eps);
}

}  // namespace

extern "C" {

const char* hodo_version(void) {
  static const std::string v = tool_version();
  return v.c_str();
}

const char* hodo_status_name(hodo_status s) {
  return status_name(static_cast<Status>(static_cast<int>(s)));
}

const char* hodo_last_error(void) { return g_error.c_str(); }

hodo_status hodo_times_parse(const char* hierarchy, const char* spec,
                             hodo_times** out) {
  return guarded([&] {
    require(hierarchy && spec && out, "null argument");
    Hierarchy h = hierarchy_from_name(hierarchy);
    *out = new hodo_times{TimeVector::parse(h, spec)};
  });
}

void hodo_times_free(hodo_times* t) { delete t; }

hodo_status hodo_times_slot(const hodo_times* t, const char* name, int* slot) {
  return guarded([&] {
    require(t && name && slot, "null argument");
    *slot = t->t.slot_index(name);
  });
}

void hodo_opts_init(hodo_opts* o) {
  if (!o) return;
  SolveOptions s;
  o->tol = s.tol;
  o->merge_tol = s.merge_tol;
  o->zero_tol = s.zero_tol;
  o->sing_tol = s.sing_tol;
  o->seed_range = s.seed_range;
  o->max_iter = s.max_iter;
  o->order = s.order;
  o->jobs = 1;
  if (const char* env = std::getenv("HODO_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end && end != env && *end == '\0' && v > 0) o->tol = v;
  }
}

int hodo_records_count(const hodo_records* r) {
  return r ? static_cast<int>(r->lines.size()) : 0;
}

const char* hodo_records_line(const hodo_records* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->lines.size())) return nullptr;
  return r->lines[i].c_str();
}

const char* hodo_records_summary(const hodo_records* r) {
  return r ? r->summary.c_str() : "";
}

void hodo_records_free(hodo_records* r) { delete r; }

hodo_status hodo_solve(const hodo_times* t, double b1, double b2,
                       const hodo_opts* o, hodo_records** out) {
  return guarded([&] {
    require(t && out, "null argument");
    HodographPoint pt =
        solve_regular(t->t, RiemannPoint::hyperbolic(b1, b2), to_options(o));
    *out = make_records({point_record(pt)}, point_summary(pt));
  });
}

hodo_status hodo_classify(const hodo_times* t, double b1, double b2,
                          const hodo_opts* o, hodo_records** out) {
  return guarded([&] {
    require(t && out, "null argument");
    HodographPoint pt =
        describe_point(t->t, RiemannPoint::hyperbolic(b1, b2), to_options(o));
    *out = make_records({point_record(pt, "classification")},
                        point_summary(pt));
  });
}

hodo_status hodo_solve_singular(const hodo_times* t, int n1, int n2,
                                const int* free_slots, int n_free, double b1,
                                double b2, const hodo_opts* o,
                                hodo_records** out) {
  return guarded([&] {
    require(t && out, "null argument");
    require(free_slots || n_free == 0, "null free-slot list");
    std::vector<int> slots(free_slots, free_slots + std::max(n_free, 0));
    HodographPoint pt = solve_singular(
        t->t, n1, n2, slots, RiemannPoint::hyperbolic(b1, b2), to_options(o));
    *out = make_records({point_record(pt, "singular-point")},
                        point_summary(pt));
  });
}

hodo_status hodo_trace_locus(const hodo_times* t, int n1, int n2,
                             const int* free_slots, int n_free, int slot1,
                             double lo1, double hi1, int count1, int slot2,
                             double lo2, double hi2, int count2, double b1,
                             double b2, int csv, const hodo_opts* o,
                             hodo_records** out) {
  return guarded([&] {
    require(t && out, "null argument");
    require(free_slots || n_free == 0, "null free-slot list");
    std::vector<int> slots(free_slots, free_slots + std::max(n_free, 0));
    GridAxis a1{slot1, lo1, hi1, count1};
    GridAxis a2{slot2, lo2, hi2, count2};
    Locus l = trace_locus(t->t, n1, n2, slots, a1, a2,
                          RiemannPoint::hyperbolic(b1, b2), to_options(o));
    *out = make_records(csv ? locus_csv(l) : locus_records(l),
                        locus_summary(l));
  });
}

hodo_status hodo_compare_section3(double t2, double t3, double t4,
                                  const hodo_opts* o, hodo_records** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    Section3Report rep = compare_section3(t2, t3, t4, to_options(o));
    *out = make_records(section3_records(rep), section3_summary(rep));
  });
}

hodo_status hodo_solve_elliptic(const hodo_times* t, double re, double im,
                                const hodo_opts* o, hodo_records** out) {
  return guarded([&] {
    require(t && out, "null argument");
    EllipticCriticalPoint pt =
        solve_elliptic(t->t, {re, im}, to_options(o));
    *out = make_records({elliptic_record(pt)}, elliptic_summary(pt));
  });
}

hodo_status hodo_find_catastrophe(const hodo_times* t, int slot_a, int slot_b,
                                  double re, double im, const hodo_opts* o,
                                  hodo_records** out) {
  return guarded([&] {
    require(t && out, "null argument");
    EllipticCriticalPoint pt =
        find_catastrophe(t->t, {slot_a, slot_b}, {re, im}, to_options(o));
    *out = make_records({elliptic_record(pt)}, elliptic_summary(pt));
  });
}

hodo_status hodo_elliptic_entries(const char* eps, int order, int chart_uv,
                                  hodo_records** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    Rational e = parse_eps(eps);
    auto entries =
        chart_uv ? series_entries_uv(e, order) : series_entries_bUV(e, order);
    auto lines = entry_records(e, entries, chart_uv ? "u" : "U",
                               chart_uv ? "v" : "V");
    std::string vars = chart_uv ? "(u, v)" : "(U, V)";
    *out = make_records(std::move(lines),
                        "entries 0.." + std::to_string(order) + " in " + vars +
                            " for eps = " + format_rational(e));
  });
}

hodo_status hodo_series(const char* eps, int order, const double* at,
                        hodo_records** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    Rational e = parse_eps(eps);
    require(order >= 0, "order must be nonnegative");
    if (at) {
      *out = make_records({value_record(e, at[0], at[1], order)},
                          "float entries 0.." + std::to_string(order) +
                              " at a = " + format_double(at[0]) +
                              ", b = " + format_double(at[1]));
      return;
    }
    CoeffTable tab = coeff_table(e, order);
    *out = make_records(entry_records(e, tab.entry, "b1", "b2"),
                        "exact entries 0.." + std::to_string(order) +
                            " for eps = " + format_rational(e));
  });
}

hodo_status hodo_flow_residual(const hodo_times* t, int n, double b1,
                               double b2, double x_lo, double x_hi,
                               double s_lo, double s_hi, int nx, int ns,
                               int convergence, int with_samples,
                               const hodo_opts* o, hodo_records** out) {
  return guarded([&] {
    require(t && out, "null argument");
    FlowGrid g{x_lo, x_hi, s_lo, s_hi, nx, ns};
    RiemannPoint seed = RiemannPoint::hyperbolic(b1, b2);
    SolveOptions opt = to_options(o);
    int jobs = jobs_of(o);
    std::vector<std::string> lines;
    std::string summary;
    if (convergence) {
      FlowOrder ord =
          flow_convergence(t->t.hierarchy, n, t->t, seed, g, jobs, opt);
      lines.push_back(flow_record(ord.coarse));
      lines.push_back(convergence_record(ord));
      if (with_samples)
        for (auto& s : flow_sample_records(ord.coarse))
          lines.push_back(std::move(s));
      summary = convergence_summary(ord);
    } else {
      FlowField f = t->t.hierarchy == Hierarchy::Benney
                        ? benney_flow_residual(n, t->t, seed, g, jobs, opt)
                        : dtoda_flow_residual(n, t->t, seed, g, jobs, opt);
      lines.push_back(flow_record(f));
      if (with_samples)
        for (auto& s : flow_sample_records(f)) lines.push_back(std::move(s));
      summary = flow_summary(f);
    }
    *out = make_records(std::move(lines), std::move(summary));
  });
}

hodo_status hodo_verify_identities(unsigned seed, int trials, int max_n,
                                   hodo_records** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    IdentityReport rep = identity_battery(seed, trials, max_n);
    if (!rep.all_pass())
      throw HodoError(Status::Internal, identity_summary(rep));
    *out = make_records(identity_records(rep), identity_summary(rep));
  });
}

hodo_status hodo_eval_w(const hodo_times* t, double b1_re, double b1_im,
                        double b2_re, double b2_im, double* w) {
  return guarded([&] {
    require(t && w, "null argument");
    RiemannPoint p;
    p.b1 = {b1_re, b1_im};
    p.b2 = {b2_re, b2_im};
    *w = eval_w(t->t, p);
  });
}

}  // extern "C"
