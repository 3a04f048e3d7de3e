#pragma once

#include <string>
#include <vector>

#include "hodo/elliptic.hpp"
#include "hodo/epd_operator.hpp"
#include "hodo/flows.hpp"
#include "hodo/hodograph.hpp"

namespace hodo {

// "hodo <version>", stamped at build time.
std::string tool_version();

// One JSON object per line, keys sorted, floats rendered as the shortest
// decimal that round-trips; equal inputs therefore serialize to equal
// bytes. Each record carries the hierarchy, the time vector, beta, a
// sector label, residual norms, the truncation order of the finite
// expansion, and the tool version. Summaries are the human-readable
// one-liners the command line prints alongside the records.

std::string point_record(const HodographPoint& pt,
                         const std::string& kind = "hodograph-point");
std::string point_summary(const HodographPoint& pt);

std::string elliptic_record(const EllipticCriticalPoint& pt);
std::string elliptic_summary(const EllipticCriticalPoint& pt);

std::string flow_record(const FlowField& f);
std::string flow_summary(const FlowField& f);
// One record per interior node, for plotting.
std::vector<std::string> flow_sample_records(const FlowField& f);
std::string convergence_record(const FlowOrder& o);
std::string convergence_summary(const FlowOrder& o);

std::vector<std::string> section3_records(const Section3Report& rep);
std::string section3_summary(const Section3Report& rep);

std::vector<std::string> locus_records(const Locus& l);
// CSV rows, header first: param1, param2, x, beta1_re, beta1_im, beta2_re,
// beta2_im, class, residual. Nodes that failed keep their grid coordinates
// and report the status name in the class column, numbers left empty.
std::vector<std::string> locus_csv(const Locus& l);
std::string locus_summary(const Locus& l);

// Exact series entries rendered as polynomials in the named variables;
// entries[k] is taken as the k-th coefficient.
std::vector<std::string> entry_records(const Rational& eps,
                                       const std::vector<Poly2<Rational>>& entries,
                                       const std::string& v1,
                                       const std::string& v2);
// Float coefficient values C_0..C_order at a point of the (a, b) plane.
std::string value_record(const Rational& eps, double a, double b, int order);

std::vector<std::string> identity_records(const IdentityReport& rep);
std::string identity_summary(const IdentityReport& rep);

}  // namespace hodo
