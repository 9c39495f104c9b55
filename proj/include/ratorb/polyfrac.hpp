// SPDX-License-Identifier: Apache-2.0
// The field Q(z) as reduced numerator/denominator pairs, and polynomials in
// a second variable t over that field, with the Euclidean gcd used by the
// common-right-factor computation.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace ratorb {

// Invariant: den monic and nonzero, gcd(num, den) = 1.
struct PolyFrac {
  Poly num, den;

  PolyFrac() : num(Poly::zero()), den(Poly::one()) {}
  explicit PolyFrac(const Poly& n) : num(n), den(Poly::one()) {}
  explicit PolyFrac(const Rat& c) : num(Poly(c)), den(Poly::one()) {}
  PolyFrac(Poly n, Poly d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (n.is_zero()) {
      num = Poly::zero();
      den = Poly::one();
      return;
    }
    Poly g = poly_gcd(n, d);
    if (g.degree() > 0) {
      n = poly_div_exact(n, g);
      d = poly_div_exact(d, g);
    }
    Rat s = 1 / d.lc();
    num = s * n;
    den = s * d;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_constant() const { return num.is_constant() && den.is_constant(); }

  friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
    return PolyFrac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) {
    return PolyFrac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  PolyFrac operator-() const {
    PolyFrac r = *this;
    r.num = -r.num;
    return r;
  }
  friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
    return PolyFrac(a.num * b.num, a.den * b.den);
  }
  friend PolyFrac operator/(const PolyFrac& a, const PolyFrac& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return PolyFrac(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const PolyFrac& a, const PolyFrac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const PolyFrac& a, const PolyFrac& b) { return !(a == b); }

  PolyFrac inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return PolyFrac(den, num);
  }

  std::string str(const std::string& var = "z") const {
    if (den == Poly::one()) return num.str(var);
    return "(" + num.str(var) + ")/(" + den.str(var) + ")";
  }
};

// Polynomial in t with coefficients in Q(z). Invariant: no trailing zeros.
class FFPoly {
 public:
  FFPoly() = default;
  explicit FFPoly(std::vector<PolyFrac> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit FFPoly(const PolyFrac& c) {
    if (!c.is_zero()) c_.push_back(c);
  }

  static FFPoly variable() {
    return FFPoly(std::vector<PolyFrac>{PolyFrac(), PolyFrac(rat(1))});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  PolyFrac coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return PolyFrac();
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<PolyFrac>& coeffs() const { return c_; }
  PolyFrac lc() const { return c_.empty() ? PolyFrac() : c_.back(); }

  friend FFPoly operator+(const FFPoly& a, const FFPoly& b) {
    std::vector<PolyFrac> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return FFPoly(std::move(v));
  }
  friend FFPoly operator-(const FFPoly& a, const FFPoly& b) {
    std::vector<PolyFrac> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return FFPoly(std::move(v));
  }
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b) {
    if (a.is_zero() || b.is_zero()) return FFPoly();
    std::vector<PolyFrac> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return FFPoly(std::move(v));
  }
  friend FFPoly operator*(const PolyFrac& s, const FFPoly& a) {
    if (s.is_zero()) return FFPoly();
    std::vector<PolyFrac> v = a.c_;
    for (auto& x : v) x = x * s;
    return FFPoly(std::move(v));
  }
  friend bool operator==(const FFPoly& a, const FFPoly& b) {
    if (a.degree() != b.degree()) return false;
    for (int i = 0; i <= a.degree(); ++i)
      if (a.coeff(i) != b.coeff(i)) return false;
    return true;
  }

  FFPoly monic() const {
    if (is_zero()) return *this;
    return lc().inverse() * (*this);
  }

 private:
  std::vector<PolyFrac> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

inline FFPoly ff_mod(const FFPoly& a, const FFPoly& b) {
  if (b.is_zero()) throw std::domain_error("function-field division by zero");
  FFPoly r = a;
  PolyFrac inv = b.lc().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    PolyFrac f = r.lc() * inv;
    std::vector<PolyFrac> shift(static_cast<size_t>(k) + 1);
    shift.back() = f;
    r = r - FFPoly(std::move(shift)) * b;
  }
  return r;
}

// Monic gcd in t over Q(z); each remainder is renormalized monic to keep the
// z-degrees of intermediate coefficients in check.
inline FFPoly function_field_gcd(FFPoly a, FFPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    FFPoly r = ff_mod(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

}  // namespace ratorb
