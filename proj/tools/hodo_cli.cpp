// Command line front end. Everything below talks to the library through
// the C interface in hodo.h; records go to stdout (or --out), the human
// summary to stderr.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hodo.h"

namespace {

struct Common {
  hodo_opts opts;
  std::string out;
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int fail(hodo_status s) {
  std::cerr << "error (" << hodo_status_name(s) << "): " << hodo_last_error()
            << "\n";
  if (s == HODO_INVALID_INPUT || s == HODO_BAD_ARITY || s == HODO_UNSUPPORTED)
    return 2;
  return 1;
}

int emit(hodo_records* r, const Common& c) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!c.out.empty() && c.out != "-") {
    file.open(c.out);
    if (!file) {
      hodo_records_free(r);
      return usage_error("--out: cannot open '" + c.out + "'");
    }
    os = &file;
  }
  for (int i = 0; i < hodo_records_count(r); ++i)
    *os << hodo_records_line(r, i) << "\n";
  std::cerr << hodo_records_summary(r) << "\n";
  hodo_records_free(r);
  return 0;
}

bool split_pair(const std::string& text, double& a, double& b) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    size_t used = 0;
    a = std::stod(text.substr(0, comma), &used);
    if (used != comma) return false;
    std::string rest = text.substr(comma + 1);
    b = std::stod(rest, &used);
    return used == rest.size();
  } catch (...) {
    return false;
  }
}

// Every operation needs the solver options; most need a time vector too.
void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--tol", c.opts.tol, "Newton residual target");
  sub->add_option("--max-iter", c.opts.max_iter, "Newton iteration cap");
  sub->add_option("--merge-tol", c.opts.merge_tol,
                  "invariant-collision threshold");
  sub->add_option("--zero-tol", c.opts.zero_tol,
                  "relative classification threshold");
  sub->add_option("--sing-tol", c.opts.sing_tol,
                  "Hessian degeneracy threshold");
  sub->add_option("--trunc", c.opts.order, "series truncation override");
  sub->add_option("--out", c.out, "write records to this file");
}

struct TimesArgs {
  std::string hierarchy = "benney";
  std::string spec;
};

void add_times(CLI::App* sub, TimesArgs& a) {
  sub->add_option("--hier,--hierarchy", a.hierarchy, "benney or dtoda");
  sub->add_option("--t,--times", a.spec, "comma list like x=0,t2=-1,t4=1")
      ->required();
}

hodo_times* open_times(const TimesArgs& a) {
  hodo_times* t = nullptr;
  if (hodo_times_parse(a.hierarchy.c_str(), a.spec.c_str(), &t) != HODO_OK)
    return nullptr;
  return t;
}

struct TimesGuard {
  hodo_times* t;
  ~TimesGuard() { hodo_times_free(t); }
};

int resolve_slots(const hodo_times* t, const std::vector<std::string>& names,
                  std::vector<int>& slots) {
  for (const auto& name : names) {
    int s = 0;
    if (hodo_times_slot(t, name.c_str(), &s) != HODO_OK)
      return usage_error("--free: " + std::string(hodo_last_error()));
    slots.push_back(s);
  }
  return 0;
}

struct AxisArgs {
  std::string spec;  // name:lo:hi:count
  int slot = 0;
  double lo = 0, hi = 0;
  int count = 0;
};

int parse_axis(const hodo_times* t, const char* flag, AxisArgs& a) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : a.spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    return usage_error(std::string(flag) + " expects name:lo:hi:count");
  if (hodo_times_slot(t, parts[0].c_str(), &a.slot) != HODO_OK)
    return usage_error(std::string(flag) + ": " +
                       std::string(hodo_last_error()));
  try {
    a.lo = std::stod(parts[1]);
    a.hi = std::stod(parts[2]);
    a.count = std::stoi(parts[3]);
  } catch (...) {
    return usage_error(std::string(flag) + " expects name:lo:hi:count");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hodograph method for the Benney and dToda hierarchies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hodo_version());
  app.set_config("--config", "", "flags from a key=value file");

  hodo_opts defaults;
  hodo_opts_init(&defaults);  // HODO_TOL applies here

  int exit_code = 0;
  auto run = [&](int code) { exit_code = code; };

  // solve -------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "regular critical point");
  {
    static Common c{defaults, ""};
    static TimesArgs ta;
    static std::string seed;
    add_common(solve, c);
    add_times(solve, ta);
    solve->add_option("--seed", seed, "b1,b2 start point")->required();
    solve->callback([&] {
      double b1, b2;
      if (!split_pair(seed, b1, b2))
        return run(usage_error("--seed expects two numbers like 1,-1"));
      TimesGuard tg{open_times(ta)};
      if (!tg.t) return run(fail(HODO_INVALID_INPUT));
      hodo_records* r = nullptr;
      hodo_status s = hodo_solve(tg.t, b1, b2, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // classify ----------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "sector of a point");
  {
    static Common c{defaults, ""};
    static TimesArgs ta;
    static std::string point;
    add_common(classify, c);
    add_times(classify, ta);
    classify->add_option("--point", point, "b1,b2 to classify")->required();
    classify->callback([&] {
      double b1, b2;
      if (!split_pair(point, b1, b2))
        return run(usage_error("--point expects two numbers like 1,-1"));
      TimesGuard tg{open_times(ta)};
      if (!tg.t) return run(fail(HODO_INVALID_INPUT));
      hodo_records* r = nullptr;
      hodo_status s = hodo_classify(tg.t, b1, b2, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // singular ----------------------------------------------------------
  auto* singular = app.add_subcommand("singular", "gradient catastrophe of "
                                                  "class (n1,n2)");
  {
    static Common c{defaults, ""};
    static TimesArgs ta;
    static std::string cls, seed;
    static std::vector<std::string> free_names;
    add_common(singular, c);
    add_times(singular, ta);
    singular->add_option("--class", cls, "n1,n2")->required();
    singular->add_option("--free", free_names, "time slots solved for")
        ->required()
        ->delimiter(',');
    singular->add_option("--seed", seed, "b1,b2 start point")->required();
    singular->callback([&] {
      double n1d, n2d, b1, b2;
      if (!split_pair(cls, n1d, n2d))
        return run(usage_error("--class expects n1,n2 like 1,0"));
      if (!split_pair(seed, b1, b2))
        return run(usage_error("--seed expects two numbers like 1,-1"));
      TimesGuard tg{open_times(ta)};
      if (!tg.t) return run(fail(HODO_INVALID_INPUT));
      std::vector<int> slots;
      if (int rc = resolve_slots(tg.t, free_names, slots)) return run(rc);
      hodo_records* r = nullptr;
      hodo_status s = hodo_solve_singular(
          tg.t, static_cast<int>(n1d), static_cast<int>(n2d), slots.data(),
          static_cast<int>(slots.size()), b1, b2, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // trace-locus ---------------------------------------------------------
  auto* locus = app.add_subcommand("trace-locus", "catastrophe locus over a "
                                                  "parameter rectangle");
  {
    static Common c{defaults, ""};
    static TimesArgs ta;
    static std::string cls, seed;
    static std::vector<std::string> free_names;
    static AxisArgs a1, a2;
    static bool csv = false;
    add_common(locus, c);
    add_times(locus, ta);
    locus->add_option("--class", cls, "n1,n2")->required();
    locus->add_option("--free", free_names, "time slots solved for")
        ->required()
        ->delimiter(',');
    locus->add_option("--axis1", a1.spec, "name:lo:hi:count")->required();
    locus->add_option("--axis2", a2.spec, "name:lo:hi:count")->required();
    locus->add_option("--seed", seed, "b1,b2 start point")->required();
    locus->add_flag("--csv", csv, "emit CSV rows instead of JSON lines");
    locus->callback([&] {
      double n1d, n2d, b1, b2;
      if (!split_pair(cls, n1d, n2d))
        return run(usage_error("--class expects n1,n2 like 1,0"));
      if (!split_pair(seed, b1, b2))
        return run(usage_error("--seed expects two numbers like 1,-1"));
      TimesGuard tg{open_times(ta)};
      if (!tg.t) return run(fail(HODO_INVALID_INPUT));
      std::vector<int> slots;
      if (int rc = resolve_slots(tg.t, free_names, slots)) return run(rc);
      if (int rc = parse_axis(tg.t, "--axis1", a1)) return run(rc);
      if (int rc = parse_axis(tg.t, "--axis2", a2)) return run(rc);
      hodo_records* r = nullptr;
      hodo_status s = hodo_trace_locus(
          tg.t, static_cast<int>(n1d), static_cast<int>(n2d), slots.data(),
          static_cast<int>(slots.size()), a1.slot, a1.lo, a1.hi, a1.count,
          a2.slot, a2.lo, a2.hi, a2.count, b1, b2, csv ? 1 : 0, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // compare-s3 ----------------------------------------------------------
  auto* cmp = app.add_subcommand("compare-s3", "closed-form branches of the "
                                               "(t2,t3,t4) family");
  {
    static Common c{defaults, ""};
    static double t2 = 0, t3 = 0, t4 = 0;
    add_common(cmp, c);
    cmp->add_option("--t2", t2, "second time")->required();
    cmp->add_option("--t3", t3, "third time")->required();
    cmp->add_option("--t4", t4, "fourth time")->required();
    cmp->callback([&] {
      hodo_records* r = nullptr;
      hodo_status s = hodo_compare_section3(t2, t3, t4, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // elliptic ------------------------------------------------------------
  auto* ell = app.add_subcommand("elliptic", "conjugate-pair sector");
  ell->require_subcommand(1);
  {
    auto* esolve = ell->add_subcommand("solve", "elliptic critical point");
    static Common c{defaults, ""};
    static TimesArgs ta;
    static std::string seed;
    add_common(esolve, c);
    add_times(esolve, ta);
    esolve->add_option("--seed", seed, "re,im start point")->required();
    esolve->callback([&] {
      double re, im;
      if (!split_pair(seed, re, im))
        return run(usage_error("--seed expects two numbers like 0.1,0.8"));
      TimesGuard tg{open_times(ta)};
      if (!tg.t) return run(fail(HODO_INVALID_INPUT));
      hodo_records* r = nullptr;
      hodo_status s = hodo_solve_elliptic(tg.t, re, im, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }
  {
    auto* ecat = ell->add_subcommand(
        "catastrophe", "double zero of the restricted potential");
    static Common c{defaults, ""};
    static TimesArgs ta;
    static std::string seed;
    static std::vector<std::string> free_names;
    add_common(ecat, c);
    add_times(ecat, ta);
    ecat->add_option("--free", free_names, "two time slots solved for")
        ->required()
        ->delimiter(',');
    ecat->add_option("--seed", seed, "re,im start point")->required();
    ecat->callback([&] {
      double re, im;
      if (!split_pair(seed, re, im))
        return run(usage_error("--seed expects two numbers like 0.05,0.7"));
      TimesGuard tg{open_times(ta)};
      if (!tg.t) return run(fail(HODO_INVALID_INPUT));
      std::vector<int> slots;
      if (int rc = resolve_slots(tg.t, free_names, slots)) return run(rc);
      if (slots.size() != 2)
        return run(usage_error("--free needs exactly two slots"));
      hodo_records* r = nullptr;
      hodo_status s =
          hodo_find_catastrophe(tg.t, slots[0], slots[1], re, im, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }
  {
    auto* ecoef = ell->add_subcommand(
        "coeffs", "exact series entries on a conjugate pair");
    static Common c{defaults, ""};
    static std::string eps = "1/2";
    static int order = 5;
    static std::string chart = "bUV";
    add_common(ecoef, c);
    ecoef->add_option("--eps", eps, "exponent p/q");
    ecoef->add_option("--order", order, "top entry index");
    ecoef->add_option("--chart", chart, "bUV (default) or uv variables");
    ecoef->callback([&] {
      if (chart != "bUV" && chart != "uv")
        return run(usage_error("--chart expects bUV or uv"));
      hodo_records* r = nullptr;
      hodo_status s =
          hodo_elliptic_entries(eps.c_str(), order, chart == "uv" ? 1 : 0, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // verify-flows ----------------------------------------------------------
  auto* flows = app.add_subcommand("verify-flows", "finite-difference flow "
                                                   "residuals on a patch");
  {
    static Common c{defaults, ""};
    static TimesArgs ta;
    static std::string seed;
    static int flow = 2, nx = 0, ns = 0, jobs = 1;
    static double x_lo = -1.01, x_hi = -0.99, s_lo = -0.01, s_hi = 0.01;
    static bool convergence = false, samples = false;
    add_common(flows, c);
    add_times(flows, ta);
    flows->add_option("--flow", flow, "flow slot index n")->required();
    flows->add_option("--seed", seed, "b1,b2 start point")->required();
    flows->add_option("--x-lo", x_lo, "patch x lower edge");
    flows->add_option("--x-hi", x_hi, "patch x upper edge");
    flows->add_option("--s-lo", s_lo, "patch time lower edge");
    flows->add_option("--s-hi", s_hi, "patch time upper edge");
    flows->add_option("--nx", nx, "x nodes (0 = step 1e-3)");
    flows->add_option("--ns", ns, "time nodes (0 = step 1e-3)");
    flows->add_option("--jobs", jobs, "grid worker threads");
    flows->add_flag("--convergence", convergence, "add a step-halving record");
    flows->add_flag("--samples", samples, "emit one record per node");
    flows->callback([&] {
      double b1, b2;
      if (!split_pair(seed, b1, b2))
        return run(usage_error("--seed expects two numbers like 0.5,-0.5"));
      TimesGuard tg{open_times(ta)};
      if (!tg.t) return run(fail(HODO_INVALID_INPUT));
      c.opts.jobs = jobs;
      hodo_records* r = nullptr;
      hodo_status s = hodo_flow_residual(
          tg.t, flow, b1, b2, x_lo, x_hi, s_lo, s_hi, nx, ns,
          convergence ? 1 : 0, samples ? 1 : 0, &c.opts, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // verify-identities -------------------------------------------------------
  auto* ids = app.add_subcommand("verify-identities", "exact operator "
                                                      "battery");
  {
    static Common c{defaults, ""};
    static unsigned seed = 1234;
    static int trials = 50, max_n = 6;
    add_common(ids, c);
    ids->add_option("--trials", trials, "randomized cases per identity");
    ids->add_option("--seed-value", seed, "RNG seed");
    ids->add_option("--max-n", max_n, "top series index checked");
    ids->callback([&] {
      hodo_records* r = nullptr;
      hodo_status s = hodo_verify_identities(seed, trials, max_n, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  // series --------------------------------------------------------------
  auto* series = app.add_subcommand("series", "coefficient table");
  {
    static Common c{defaults, ""};
    static std::string eps = "1/2";
    static int order = 4;
    static bool exact = false;
    static std::string at;
    add_common(series, c);
    series->add_option("--eps", eps, "exponent p/q");
    series->add_option("--order", order, "top entry index");
    series->add_flag("--exact", exact, "exact polynomials (default)");
    series->add_option("--at", at, "a,b float evaluation point");
    series->callback([&] {
      if (exact && !at.empty())
        return run(usage_error("--exact and --at are mutually exclusive"));
      double ab[2] = {0, 0};
      bool use_at = !at.empty();
      if (use_at && !split_pair(at, ab[0], ab[1]))
        return run(usage_error("--at expects two numbers like 0.5,0.25"));
      hodo_records* r = nullptr;
      hodo_status s =
          hodo_series(eps.c_str(), order, use_at ? ab : nullptr, &r);
      run(s == HODO_OK ? emit(r, c) : fail(s));
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic naming the flag
    return 2;
  }
  return exit_code;
}
