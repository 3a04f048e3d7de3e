#include "hodo/records.hpp"

#include <json.hpp>
#include <sstream>

#include "hodo/potential.hpp"
#include "hodo/series.hpp"

#ifndef HODO_VERSION
#define HODO_VERSION "0.0.0"
#endif

namespace hodo {

using nlohmann::json;  // std::map keyed, so dump() emits sorted keys

std::string tool_version() { return "hodo " HODO_VERSION; }

namespace {

json beta_pair(const RiemannPoint& p) {
  return json::array({json::array({p.b1.real(), p.b1.imag()}),
                      json::array({p.b2.real(), p.b2.imag()})});
}

json envelope(const std::string& kind, const std::string& hierarchy,
              const std::string& times, int order) {
  json j;
  j["kind"] = kind;
  j["hierarchy"] = hierarchy;
  j["times"] = times;
  j["order"] = order;
  j["tool"] = tool_version();
  return j;
}

json envelope(const std::string& kind, const TimeVector& t, int order) {
  json j = envelope(kind, hierarchy_name(t.hierarchy), t.format(), order);
  j["eps"] = format_rational(t.eps);
  return j;
}

std::string brief(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

std::string point_record(const HodographPoint& pt, const std::string& kind) {
  json j = envelope(kind, pt.t, pt.order);
  j["beta"] = beta_pair(pt.p);
  j["sector"] = pt.cls.label();
  j["residuals"] = {{"gradient", pt.grad_norm},
                    {"constraint", pt.constraint_norm},
                    {"offdiag", pt.offdiag}};
  j["hessian"] = json::array({pt.hess1, pt.hess2});
  if (!pt.cls.regular()) j["delta"] = pt.delta;
  j["w"] = eval_w(pt.t, pt.p);
  j["iterations"] = pt.iterations;
  return j.dump();
}

std::string point_summary(const HodographPoint& pt) {
  std::ostringstream os;
  os << pt.cls.label() << " at beta=(" << format_double(pt.p.b1.real()) << ", "
     << format_double(pt.p.b2.real()) << "), " << pt.t.format()
     << "; gradient " << brief(pt.grad_norm);
  if (!pt.cls.regular())
    os << ", constraint " << brief(pt.constraint_norm) << ", delta "
       << brief(pt.delta);
  if (pt.iterations) os << ", " << pt.iterations << " iterations";
  return os.str();
}

std::string elliptic_record(const EllipticCriticalPoint& pt) {
  json j = envelope("elliptic-point", pt.t, pt.t.top());
  j["beta"] = json::array(
      {json::array({pt.beta.real(), pt.beta.imag()}),
       json::array({pt.beta.real(), -pt.beta.imag()})});
  j["sector"] = pt.cls.label();
  j["residuals"] = {{"gradient", pt.grad_norm}};
  j["hessian"] = pt.hess_norm;
  j["third"] = pt.third_norm;
  j["w"] = pt.w;
  j["iterations"] = pt.iterations;
  return j.dump();
}

std::string elliptic_summary(const EllipticCriticalPoint& pt) {
  std::ostringstream os;
  os << pt.cls.label() << " at beta=" << format_double(pt.beta.real())
     << "+" << format_double(pt.beta.imag()) << "i, " << pt.t.format()
     << "; gradient " << brief(pt.grad_norm) << ", |W_bb| "
     << brief(pt.hess_norm) << ", |W_bbb| " << brief(pt.third_norm);
  if (pt.iterations) os << ", " << pt.iterations << " iterations";
  return os.str();
}

namespace {

json flow_json(const FlowField& f) {
  json j = envelope("flow-residual", f.t, f.t.top());
  j["flow"] = f.t.slot_name(f.flow);
  const FlowSample& mid = f.samples[f.samples.size() / 2];
  j["beta"] = beta_pair(mid.p);
  j["sector"] = "hyperbolic";
  json res = {{"res1", f.max_res1}, {"res2", f.max_res2}};
  if (f.chart_form) {
    res["chart_u"] = f.max_res_u;
    res["chart_v"] = f.max_res_v;
  }
  j["residuals"] = res;
  j["hx"] = f.hx;
  j["hs"] = f.hs;
  j["nodes"] = f.nodes;
  j["min_v"] = f.min_v;
  return j;
}

}  // namespace

std::string flow_record(const FlowField& f) { return flow_json(f).dump(); }

std::vector<std::string> flow_sample_records(const FlowField& f) {
  std::vector<std::string> out;
  out.reserve(f.samples.size());
  for (const FlowSample& s : f.samples) {
    json j = envelope("flow-sample", f.t, f.t.top());
    j["flow"] = f.t.slot_name(f.flow);
    j["x"] = s.x;
    j["s"] = s.s;
    j["beta"] = beta_pair(s.p);
    j["sector"] = "hyperbolic";
    json res = {{"res1", s.res1}, {"res2", s.res2}};
    if (f.chart_form) {
      res["chart_u"] = s.res_u;
      res["chart_v"] = s.res_v;
    }
    j["residuals"] = res;
    out.push_back(j.dump());
  }
  return out;
}

std::string flow_summary(const FlowField& f) {
  std::ostringstream os;
  os << hierarchy_name(f.hierarchy) << " " << f.t.slot_name(f.flow)
     << " flow: max residual (" << brief(f.max_res1) << ", "
     << brief(f.max_res2) << ")";
  if (f.chart_form)
    os << ", chart (" << brief(f.max_res_u) << ", " << brief(f.max_res_v)
       << ")";
  os << " over " << f.nodes << " nodes, h=(" << brief(f.hx) << ", "
     << brief(f.hs) << ")";
  return os.str();
}

std::string convergence_record(const FlowOrder& o) {
  json j = envelope("flow-convergence", o.coarse.t, o.coarse.t.top());
  j["flow"] = o.coarse.t.slot_name(o.coarse.flow);
  const FlowSample& mid = o.coarse.samples[o.coarse.samples.size() / 2];
  j["beta"] = beta_pair(mid.p);
  j["sector"] = "hyperbolic";
  j["residuals"] = {{"coarse1", o.coarse.max_res1},
                    {"coarse2", o.coarse.max_res2},
                    {"fine1", o.fine.max_res1},
                    {"fine2", o.fine.max_res2}};
  j["orders"] = json::array({o.order1, o.order2});
  j["hx"] = json::array({o.coarse.hx, o.fine.hx});
  return j.dump();
}

std::string convergence_summary(const FlowOrder& o) {
  std::ostringstream os;
  os << hierarchy_name(o.coarse.hierarchy) << " "
     << o.coarse.t.slot_name(o.coarse.flow) << " flow: orders ("
     << brief(o.order1) << ", " << brief(o.order2) << "), fine residual ("
     << brief(o.fine.max_res1) << ", " << brief(o.fine.max_res2) << ")";
  return os.str();
}

std::vector<std::string> section3_records(const Section3Report& rep) {
  std::vector<std::string> out;
  for (const Section3Item& it : rep.items) {
    bool solved = it.solver_status == Status::Ok;
    const BranchValues& best = solved ? it.solver : it.corrected;
    TimeVector t = TimeVector::benney({best.x, rep.t2, rep.t3, rep.t4});
    json j = envelope("branch-comparison", t, t.top());
    j["item"] = it.item;
    j["sector"] = it.cls.label();
    j["beta"] = json::array({json::array({best.b1, 0.0}),
                             json::array({best.b2, 0.0})});
    j["printed"] = json::array({it.printed.x, it.printed.b1, it.printed.b2});
    j["corrected"] =
        json::array({it.corrected.x, it.corrected.b1, it.corrected.b2});
    j["solver_status"] = status_name(it.solver_status);
    if (solved)
      j["solver"] = json::array({it.solver.x, it.solver.b1, it.solver.b2});
    j["residuals"] = {{"solver", it.solver_residual},
                      {"printed_dist", it.printed_dist},
                      {"corrected_dist", it.corrected_dist}};
    j["radicand"] = rep.radicand;
    out.push_back(j.dump());
  }
  return out;
}

std::string section3_summary(const Section3Report& rep) {
  std::ostringstream os;
  os << "family (t2, t3, t4) = (" << format_double(rep.t2) << ", "
     << format_double(rep.t3) << ", " << format_double(rep.t4)
     << "), radicand " << brief(rep.radicand);
  for (const Section3Item& it : rep.items) {
    os << "\nitem " << it.item << " " << it.cls.label() << ": ";
    if (it.solver_status != Status::Ok) {
      os << "solver " << status_name(it.solver_status);
      continue;
    }
    os << "corrected branch off by " << brief(it.corrected_dist)
       << ", printed off by " << brief(it.printed_dist);
    if (it.printed_dist > 1e3 * (it.corrected_dist + 1e-15))
      os << " (misprint)";
  }
  return os.str();
}

std::vector<std::string> locus_records(const Locus& l) {
  std::vector<std::string> out;
  for (const LocusSample& s : l.samples) {
    if (s.status != Status::Ok) continue;
    json j = json::parse(point_record(s.point, "locus-point"));
    j["grid"] = json::array({s.g1, s.g2});
    out.push_back(j.dump());
  }
  return out;
}

std::vector<std::string> locus_csv(const Locus& l) {
  std::vector<std::string> out;
  out.push_back(
      "param1,param2,x,beta1_re,beta1_im,beta2_re,beta2_im,class,residual");
  for (const LocusSample& s : l.samples) {
    std::ostringstream os;
    os << format_double(s.g1) << "," << format_double(s.g2) << ",";
    if (s.status == Status::Ok) {
      const HodographPoint& pt = s.point;
      double res = std::max(pt.grad_norm, pt.constraint_norm);
      os << format_double(pt.t.values.empty() ? 0.0 : pt.t.values[0]) << ","
         << format_double(pt.p.b1.real()) << ","
         << format_double(pt.p.b1.imag()) << ","
         << format_double(pt.p.b2.real()) << ","
         << format_double(pt.p.b2.imag()) << "," << pt.cls.label() << ","
         << format_double(res);
    } else {
      os << ",,,,," << status_name(s.status) << ",";
    }
    out.push_back(os.str());
  }
  return out;
}

std::string locus_summary(const Locus& l) {
  std::ostringstream os;
  os << "locus over " << l.a1.count << "x" << l.a2.count << " grid: "
     << l.converged << " of " << l.samples.size() << " nodes converged";
  return os.str();
}

std::vector<std::string> entry_records(
    const Rational& eps, const std::vector<Poly2<Rational>>& entries,
    const std::string& v1, const std::string& v2) {
  std::string hier = "general";
  if (eps == Rational(1, 2)) hier = "benney";
  if (eps == Rational(-1, 2)) hier = "dtoda";
  std::vector<std::string> out;
  for (size_t k = 0; k < entries.size(); ++k) {
    json j = envelope("series-entry", hier, "",
                      static_cast<int>(entries.size()) - 1);
    j["eps"] = format_rational(eps);
    j["k"] = k;
    j["vars"] = json::array({v1, v2});
    j["poly"] = format_rxy(RationalXY::from_poly(entries[k]), v1, v2);
    j["beta"] = json::array();
    j["sector"] = "exact-series";
    j["residuals"] = json::object();
    out.push_back(j.dump());
  }
  return out;
}

std::string value_record(const Rational& eps, double a, double b, int order) {
  std::string hier = "general";
  if (eps == Rational(1, 2)) hier = "benney";
  if (eps == Rational(-1, 2)) hier = "dtoda";
  json j = envelope("series-values", hier, "", order);
  j["eps"] = format_rational(eps);
  j["a"] = a;
  j["b"] = b;
  j["values"] = coeff_values(eps, a, b, order);
  j["beta"] = json::array();
  j["sector"] = "float-series";
  j["residuals"] = json::object();
  return j.dump();
}

std::vector<std::string> identity_records(const IdentityReport& rep) {
  std::vector<std::string> out;
  for (const IdentityCheck& c : rep.checks) {
    json j = envelope("identity-check", "general", "", rep.max_n);
    j["name"] = c.name;
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    j["seed"] = rep.seed;
    j["trials"] = rep.count;
    j["beta"] = json::array();
    j["sector"] = c.failures ? "violated" : "exact";
    j["residuals"] = {{"max", c.max_residual}};
    out.push_back(j.dump());
  }
  return out;
}

std::string identity_summary(const IdentityReport& rep) {
  int cases = 0, failures = 0;
  double fmax = 0;
  for (const IdentityCheck& c : rep.checks) {
    cases += c.cases;
    failures += c.failures;
    fmax = std::max(fmax, c.max_residual);
  }
  std::ostringstream os;
  if (failures == 0)
    os << "all zero: " << rep.checks.size() << " identities, " << cases
       << " cases (float spot check max " << brief(fmax) << ")";
  else
    os << "FAIL: " << failures << " of " << cases << " cases violated";
  return os.str();
}

}  // namespace hodo
