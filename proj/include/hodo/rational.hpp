#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace hodo {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Parses "p", "p/q", or a plain decimal such as "-0.125" (exact: 125/1000).
Rational parse_rational(const std::string& text);

// "p/q" with q > 0, or "p" when q == 1.
std::string format_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

// (2k-1)!! with the convention (-1)!! = 1.
Rational odd_double_factorial(long k);

// Conversion of exact scalars into the working ring. Poly2 specializes this
// in poly.hpp.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
};

template <>
struct RingTraits<double> {
  static double from_rational(const Rational& q) { return q.get_d(); }
  static bool is_zero(double v) { return v == 0.0; }
};

template <>
struct RingTraits<std::complex<double>> {
  static std::complex<double> from_rational(const Rational& q) {
    return {q.get_d(), 0.0};
  }
  static bool is_zero(const std::complex<double>& v) {
    return v.real() == 0.0 && v.imag() == 0.0;
  }
};

template <class R>
R from_rational(const Rational& q) {
  return RingTraits<R>::from_rational(q);
}

}  // namespace hodo
