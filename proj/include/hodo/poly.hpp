#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hodo/rational.hpp"

namespace hodo {

// Dense univariate polynomial, coefficients ascending.
template <class T>
struct Poly1 {
  std::vector<T> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  void trim() {
    while (!c.empty() && RingTraits<T>::is_zero(c.back())) c.pop_back();
  }

  template <class S>
  S eval(const S& x) const {
    if (c.empty()) return S{};
    S r = S(c.back());
    for (int i = degree() - 1; i >= 0; --i) r = r * x + S(c[i]);
    return r;
  }

  Poly1 derivative() const {
    Poly1 d;
    for (std::size_t i = 1; i < c.size(); ++i)
      d.c.push_back(c[i] * from_rational<T>(Rational(static_cast<long>(i))));
    return d;
  }
};

// First `count` Taylor coefficients of p about x0, by repeated synthetic
// division. Exact for exact T.
template <class T>
std::vector<T> taylor_at(std::vector<T> c, const T& x0, int count) {
  std::vector<T> out;
  out.reserve(count);
  for (int m = 0; m < count; ++m) {
    if (c.empty()) {
      out.push_back(T{});
      continue;
    }
    const int deg = static_cast<int>(c.size()) - 1;
    std::vector<T> q(deg >= 1 ? deg : 0);
    T r;
    if (deg == 0) {
      r = c[0];
    } else {
      q[deg - 1] = c[deg];
      for (int j = deg - 1; j >= 1; --j) q[j - 1] = c[j] + x0 * q[j];
      r = c[0] + x0 * q[0];
    }
    out.push_back(r);
    c = std::move(q);
  }
  return out;
}

// Dense bivariate polynomial. c[i][j] multiplies x^i y^j, where (x, y) name
// whatever pair the caller works in.
template <class T>
struct Poly2 {
  std::vector<std::vector<T>> c;

  Poly2() = default;

  static Poly2 constant(const T& v) {
    Poly2 p;
    p.c = {{v}};
    p.trim();
    return p;
  }
  static Poly2 var_x() {
    Poly2 p;
    p.c = {{T{}}, {from_rational<T>(1)}};
    return p;
  }
  static Poly2 var_y() {
    Poly2 p;
    p.c = {{T{}, from_rational<T>(1)}};
    return p;
  }
  // c[i][j] = table[i][j].
  static Poly2 from_rows(std::vector<std::vector<T>> rows) {
    Poly2 p;
    p.c = std::move(rows);
    p.trim();
    return p;
  }

  bool is_zero() const {
    for (const auto& row : c)
      for (const auto& v : row)
        if (!RingTraits<T>::is_zero(v)) return false;
    return true;
  }

  int deg_x() const { return static_cast<int>(c.size()) - 1; }
  int deg_y() const {
    int d = -1;
    for (const auto& row : c) d = std::max<int>(d, static_cast<int>(row.size()) - 1);
    return d;
  }

  const T& at(int i, int j) const {
    static const T zero{};
    if (i < 0 || i >= static_cast<int>(c.size())) return zero;
    if (j < 0 || j >= static_cast<int>(c[i].size())) return zero;
    return c[i][j];
  }

  void set(int i, int j, const T& v) {
    if (i >= static_cast<int>(c.size())) c.resize(i + 1);
    if (j >= static_cast<int>(c[i].size())) c[i].resize(j + 1, T{});
    c[i][j] = v;
  }

  void trim() {
    for (auto& row : c)
      while (!row.empty() && RingTraits<T>::is_zero(row.back())) row.pop_back();
    while (!c.empty() && c.back().empty()) c.pop_back();
  }

  Poly2 operator-() const {
    Poly2 r = *this;
    for (auto& row : r.c)
      for (auto& v : row) v = -v;
    return r;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      for (std::size_t j = 0; j < b.c[i].size(); ++j)
        r.set(static_cast<int>(i), static_cast<int>(j),
              r.at(static_cast<int>(i), static_cast<int>(j)) + b.c[i][j]);
    r.trim();
    return r;
  }

  friend Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < a.c[i].size(); ++j) {
        if (RingTraits<T>::is_zero(a.c[i][j])) continue;
        for (std::size_t k = 0; k < b.c.size(); ++k)
          for (std::size_t l = 0; l < b.c[k].size(); ++l) {
            if (RingTraits<T>::is_zero(b.c[k][l])) continue;
            int I = static_cast<int>(i + k), J = static_cast<int>(j + l);
            r.set(I, J, r.at(I, J) + a.c[i][j] * b.c[k][l]);
          }
      }
    r.trim();
    return r;
  }

  Poly2 scaled(const T& s) const {
    Poly2 r = *this;
    for (auto& row : r.c)
      for (auto& v : row) v = v * s;
    r.trim();
    return r;
  }

  Poly2 dx() const {
    Poly2 r;
    for (std::size_t i = 1; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        r.set(static_cast<int>(i) - 1, static_cast<int>(j),
              c[i][j] * from_rational<T>(Rational(static_cast<long>(i))));
    r.trim();
    return r;
  }

  Poly2 dy() const {
    Poly2 r;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 1; j < c[i].size(); ++j)
        r.set(static_cast<int>(i), static_cast<int>(j) - 1,
              c[i][j] * from_rational<T>(Rational(static_cast<long>(j))));
    r.trim();
    return r;
  }

  Poly2 swap_vars() const {
    Poly2 r;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        r.set(static_cast<int>(j), static_cast<int>(i), c[i][j]);
    r.trim();
    return r;
  }

  template <class S>
  S eval(const S& x, const S& y) const {
    S r{};
    for (int i = deg_x(); i >= 0; --i) {
      S row{};
      if (i < static_cast<int>(c.size()))
        for (int j = static_cast<int>(c[i].size()) - 1; j >= 0; --j)
          row = row * y + S(c[i][j]);
      r = r * x + row;
    }
    return r;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) {
    return (a - b).is_zero();
  }
};

// p(A(x,y), B(x,y)).
template <class T>
Poly2<T> compose2(const Poly2<T>& p, const Poly2<T>& A, const Poly2<T>& B) {
  Poly2<T> r;
  for (int i = p.deg_x(); i >= 0; --i) {
    Poly2<T> row;
    for (int j = p.deg_y(); j >= 0; --j)
      row = row * B + Poly2<T>::constant(p.at(i, j));
    r = r * A + row;
  }
  return r;
}

// Divides p by (x - y). Returns {quotient, exact}; when exact is false the
// remainder p(y, y) was nonzero and quotient is unspecified.
template <class T>
std::pair<Poly2<T>, bool> divide_x_minus_y(const Poly2<T>& p) {
  // Synthetic division in x at x = y: multiplying by y shifts j by one.
  const int dx = p.deg_x();
  if (dx < 0) return {Poly2<T>{}, true};
  std::vector<Poly2<T>> rows(dx + 1);  // rows[i] = coefficient of x^i, in y
  for (int i = 0; i <= dx; ++i) {
    Poly2<T> row;
    for (int j = 0; j <= p.deg_y(); ++j)
      if (!RingTraits<T>::is_zero(p.at(i, j))) row.set(0, j, p.at(i, j));
    rows[i] = row;
  }
  std::vector<Poly2<T>> q(dx >= 1 ? dx : 0);
  Poly2<T> shift = Poly2<T>::var_y();
  Poly2<T> rem;
  if (dx == 0) {
    rem = rows[0];
  } else {
    q[dx - 1] = rows[dx];
    for (int j = dx - 1; j >= 1; --j) q[j - 1] = rows[j] + shift * q[j];
    rem = rows[0] + shift * q[0];
  }
  if (!rem.is_zero()) return {Poly2<T>{}, false};
  Poly2<T> quot;
  for (int i = 0; i < static_cast<int>(q.size()); ++i)
    for (int j = 0; j <= q[i].deg_y(); ++j) {
      const T& v = q[i].at(0, j);
      if (!RingTraits<T>::is_zero(v)) quot.set(i, j, v);
    }
  quot.trim();
  return {quot, true};
}

template <class R>
struct RingTraits<Poly2<R>> {
  static Poly2<R> from_rational(const Rational& q) {
    return Poly2<R>::constant(hodo::from_rational<R>(q));
  }
  static bool is_zero(const Poly2<R>& p) { return p.is_zero(); }
};

template <class R>
R scale_rational(const R& v, const Rational& q) {
  return v * from_rational<R>(q);
}
template <class R>
Poly2<R> scale_rational(const Poly2<R>& p, const Rational& q) {
  return p.scaled(from_rational<R>(q));
}

template <class To, class From, class F>
Poly2<To> map_poly2(const Poly2<From>& p, F f) {
  Poly2<To> r;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t j = 0; j < p.c[i].size(); ++j)
      r.set(static_cast<int>(i), static_cast<int>(j), f(p.c[i][j]));
  r.trim();
  return r;
}

inline Poly2<double> to_double_poly(const Poly2<Rational>& p) {
  return map_poly2<double>(p, [](const Rational& q) { return q.get_d(); });
}

// Exact common-denominator rendering, terms by descending total degree then
// descending first-variable power. Defined in series.cpp.
std::string format_poly(const Poly2<Rational>& p, const std::string& v1,
                        const std::string& v2);

}  // namespace hodo
