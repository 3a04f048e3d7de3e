#include "hodo/series.hpp"

#include <algorithm>
#include <sstream>

namespace hodo {

CoeffTable coeff_table(const Rational& eps, int order) {
  if (order < 0) throw HodoError(Status::InvalidInput, "negative table order");
  using P = Poly2<Rational>;
  P x = P::var_x(), y = P::var_y();
  P a = (x + y).scaled(Rational(1, 2));
  P b = x * y;
  CoeffTable t;
  t.eps = eps;
  t.order = order;
  t.entry = gegenbauer_sequence(eps, a, b, order);
  return t;
}

std::vector<double> coeff_values(const Rational& eps, double a, double b,
                                 int order) {
  return gegenbauer_sequence(eps, a, b, order);
}

std::vector<std::complex<double>> coeff_values(const Rational& eps,
                                               std::complex<double> a,
                                               std::complex<double> b,
                                               int order) {
  return gegenbauer_sequence(eps, a, b, order);
}

Poly2<Rational> w_polynomial(const Rational& eps, int first,
                             const std::vector<Rational>& times) {
  if (first != 0 && first != 1)
    throw HodoError(Status::InvalidInput, "first slot must be 0 or 1");
  const int top = first + static_cast<int>(times.size()) - 1;
  // Slot n couples to C_{n-first+1}: t_n C_n for first=1, x_n C_{n+1}
  // for first=0.
  CoeffTable tab = coeff_table(eps, top - first + 1);
  Poly2<Rational> w;
  for (int n = first; n <= top; ++n) {
    const Rational& tn = times[n - first];
    if (sgn(tn) == 0) continue;
    w = w + tab.entry[n - first + 1].scaled(tn);
  }
  return w;
}

int default_order(const TimeVector& t) { return t.top() + 6; }

namespace {

std::string monomial(const mpz_class& coeff, int i, int j,
                     const std::string& v1, const std::string& v2) {
  std::ostringstream os;
  mpz_class mag = abs(coeff);
  bool printed_num = false;
  if (mag != 1 || (i == 0 && j == 0)) {
    os << mag.get_str();
    printed_num = true;
  }
  auto var = [&](const std::string& v, int p) {
    if (p == 0) return;
    if (printed_num || os.tellp() > 0) os << "*";
    os << v;
    if (p > 1) os << "^" << p;
  };
  var(v1, i);
  var(v2, j);
  return os.str();
}

}  // namespace

std::string format_poly(const Poly2<Rational>& p, const std::string& v1,
                        const std::string& v2) {
  struct Term {
    int i, j;
    Rational q;
  };
  std::vector<Term> terms;
  for (int i = 0; i <= p.deg_x(); ++i)
    for (int j = 0; j <= p.deg_y(); ++j) {
      const Rational& q = p.at(i, j);
      if (sgn(q) != 0) terms.push_back({i, j, q});
    }
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.i > b.i;
  });
  mpz_class den(1);
  for (const auto& t : terms) den = lcm(den, t.q.get_den());
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    mpz_class n = t.q.get_num() * (den / t.q.get_den());
    if (first) {
      if (n < 0) os << "-";
      first = false;
    } else {
      os << (n < 0 ? " - " : " + ");
    }
    os << monomial(n, t.i, t.j, v1, v2);
  }
  std::string body = os.str();
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

}  // namespace hodo
