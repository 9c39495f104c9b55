// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>
#include <variant>

#include "ratorb/polynomial.hpp"
#include "ratorb/rational.hpp"

namespace ratorb {

// A point of the projective line over the rationals, extended with Galois
// classes: a class bundles the full conjugate orbit of an irrational algebraic
// point, keyed by its monic minimal polynomial.
class ProjectivePoint {
 public:
  static ProjectivePoint finite(const Rat& v) { return ProjectivePoint(v); }
  static ProjectivePoint infinity() { return ProjectivePoint(InfTag{}); }

  // minpoly must be irreducible over the rationals; degree 2 and 3 inputs are
  // certified here, higher degrees are the caller's contract.
  static ProjectivePoint algebraic(const Poly& minpoly) {
    if (minpoly.degree() < 2) throw std::invalid_argument("class minimal polynomial must have degree >= 2");
    Poly m = minpoly.monic();
    if (minpoly.degree() <= 3 && !rational_roots(m).empty())
      throw std::invalid_argument("class minimal polynomial is reducible");
    return ProjectivePoint(m);
  }

  bool is_finite() const { return std::holds_alternative<Rat>(rep_); }
  bool is_infinity() const { return std::holds_alternative<InfTag>(rep_); }
  bool is_class() const { return std::holds_alternative<Poly>(rep_); }
  bool is_rational() const { return !is_class(); }

  const Rat& value() const {
    if (!is_finite()) throw std::logic_error("point has no finite value");
    return std::get<Rat>(rep_);
  }

  const Poly& minpoly() const {
    if (!is_class()) throw std::logic_error("point is not an algebraic class");
    return std::get<Poly>(rep_);
  }

  // Number of sphere points this object stands for.
  int point_count() const { return is_class() ? minpoly().degree() : 1; }

  bool operator==(const ProjectivePoint& o) const { return rep_ == o.rep_; }
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

  // Finite points ascending, then classes by (degree, coefficients), then the
  // point at infinity. Fixes the order of every printed fiber and support set.
  bool operator<(const ProjectivePoint& o) const {
    int ra = rank(), rb = o.rank();
    if (ra != rb) return ra < rb;
    if (is_finite()) return value() < o.value();
    if (is_class()) {
      const Poly &a = minpoly(), &b = o.minpoly();
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
  }

  std::string str() const {
    if (is_finite()) return rat_str(value());
    if (is_infinity()) return "inf";
    return "root(" + integerized(minpoly()).str() + ")";
  }

  // Clears denominators: the primitive integer multiple with positive lead.
  static Poly integerized(const Poly& p) {
    Int l = 1;
    for (const Rat& c : p.coeffs()) l = lcm(l, den(c));
    Int g = 0;
    for (const Rat& c : p.coeffs()) g = gcd(g, Int(num(c) * (l / den(c))));
    if (g == 0) g = 1;
    Rat scale = rat(l, g);
    if (p.lc() * scale < 0) scale = -scale;
    return p * scale;
  }

 private:
  struct InfTag {
    bool operator==(const InfTag&) const { return true; }
  };
  std::variant<Rat, Poly, InfTag> rep_;
  explicit ProjectivePoint(const Rat& v) : rep_(v) {}
  explicit ProjectivePoint(const Poly& m) : rep_(m) {}
  explicit ProjectivePoint(InfTag t) : rep_(t) {}
  int rank() const { return is_finite() ? 0 : (is_class() ? 1 : 2); }
};

}  // namespace ratorb
