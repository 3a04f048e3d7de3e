#pragma once

#include <complex>
#include <vector>

#include "hodo/poly.hpp"
#include "hodo/rational.hpp"
#include "hodo/types.hpp"

namespace hodo {

// Coefficients C_k of the expansion (1 - 2 a w + b w^2)^(-eps) =
// sum_k C_k(a, b) w^k, generated by the three-term recurrence
//   (k+1) C_{k+1} = 2 a (k+eps) C_k - b (k+2 eps-1) C_{k-1},
// C_0 = 1, C_1 = 2 eps a. Works over any ring with +, -, * and exact
// rational scalars: numbers for evaluation, Poly2 for symbolic tables.
template <class R>
std::vector<R> gegenbauer_sequence(const Rational& eps, const R& a, const R& b,
                                   int order) {
  std::vector<R> c;
  c.reserve(order + 1);
  c.push_back(from_rational<R>(1));
  if (order >= 1) c.push_back(scale_rational(a, 2 * eps));
  for (int k = 1; k < order; ++k) {
    R t1 = scale_rational(a * c[k], 2 * (k + eps) / (k + 1));
    R t2 = scale_rational(b * c[k - 1], (k + 2 * eps - 1) / (k + 1));
    c.push_back(t1 - t2);
  }
  return c;
}

// Symbolic table over exact rationals, in the invariants themselves:
// entries are polynomials in (beta1, beta2) with a = (beta1+beta2)/2,
// b = beta1 beta2.
struct CoeffTable {
  Rational eps;
  int order;
  std::vector<Poly2<Rational>> entry;  // entry[k] = C_k(beta1, beta2)
};

CoeffTable coeff_table(const Rational& eps, int order);

std::vector<double> coeff_values(const Rational& eps, double a, double b,
                                 int order);
std::vector<std::complex<double>> coeff_values(
    const Rational& eps, std::complex<double> a, std::complex<double> b,
    int order);

// Exact potential as a polynomial in (beta1, beta2) for rational time values.
// times[k] multiplies slot first+k. Benney-type indexing (first = 1) pairs
// t_n with C_n; dToda indexing (first = 0) pairs x_n with C_{n+1}.
Poly2<Rational> w_polynomial(const Rational& eps, int first,
                             const std::vector<Rational>& times);

// Default displayed truncation order for a time vector: top slot + 6.
int default_order(const TimeVector& t);

}  // namespace hodo
