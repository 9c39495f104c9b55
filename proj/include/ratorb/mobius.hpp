// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "ratorb/errors.hpp"
#include "ratorb/point.hpp"
#include "ratorb/polynomial.hpp"
#include "ratorb/rational.hpp"

namespace ratorb {

// z -> (a z + b) / (c z + d) with nonzero determinant.
class MobiusMap {
 public:
  MobiusMap(const Rat& a, const Rat& b, const Rat& c, const Rat& d) : a_(a), b_(b), c_(c), d_(d) {
    if (a_ * d_ - b_ * c_ == 0) throw InputError("degenerate coefficient matrix");
  }

  static MobiusMap identity() { return MobiusMap(rat(1), rat(0), rat(0), rat(1)); }
  static MobiusMap shift(const Rat& s) { return MobiusMap(rat(1), s, rat(0), rat(1)); }
  static MobiusMap scale(const Rat& s) { return MobiusMap(s, rat(0), rat(0), rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }
  Rat det() const { return a_ * d_ - b_ * c_; }

  MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

  // Matrix product: (this o other)(z) = this(other(z)).
  MobiusMap compose(const MobiusMap& o) const {
    return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                     c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
  }

  ProjectivePoint apply(const ProjectivePoint& p) const {
    if (p.is_finite()) {
      const Rat& z = p.value();
      Rat dn = c_ * z + d_;
      if (dn == 0) return ProjectivePoint::infinity();
      return ProjectivePoint::finite((a_ * z + b_) / dn);
    }
    if (p.is_infinity()) {
      if (c_ == 0) return ProjectivePoint::infinity();
      return ProjectivePoint::finite(a_ / c_);
    }
    // Transport a class by substituting the inverse map into its minimal
    // polynomial. No conjugate can land on infinity, so degree is preserved.
    const Poly& m = p.minpoly();
    int n = m.degree();
    Poly pn(std::vector<Rat>{-b_, d_});   // numerator of the inverse
    Poly pd(std::vector<Rat>{a_, -c_});   // denominator of the inverse
    Poly acc = Poly::zero();
    for (int i = 0; i <= n; ++i)
      acc = acc + pn.pow(static_cast<unsigned long>(i)) *
                      pd.pow(static_cast<unsigned long>(n - i)) * m.coeff(i);
    return ProjectivePoint::algebraic(acc);
  }

  // Proportionality of coefficient rows.
  bool operator==(const MobiusMap& o) const {
    return a_ * o.b_ == b_ * o.a_ && a_ * o.c_ == c_ * o.a_ && a_ * o.d_ == d_ * o.a_ &&
           b_ * o.c_ == c_ * o.b_ && b_ * o.d_ == d_ * o.b_ && c_ * o.d_ == d_ * o.c_;
  }
  bool operator!=(const MobiusMap& o) const { return !(*this == o); }

  // The unique map taking three distinct rational points to 0, 1, infinity.
  static MobiusMap to_zero_one_inf(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                   const ProjectivePoint& p3) {
    require_rational(p1);
    require_rational(p2);
    require_rational(p3);
    if (p1 == p2 || p1 == p3 || p2 == p3) throw InputError("anchor points must be distinct");
    if (p1.is_infinity()) {
      Rat q2 = p2.value(), q3 = p3.value();
      return MobiusMap(rat(0), q2 - q3, rat(1), -q3);
    }
    if (p2.is_infinity()) {
      Rat q1 = p1.value(), q3 = p3.value();
      return MobiusMap(rat(1), -q1, rat(1), -q3);
    }
    if (p3.is_infinity()) {
      Rat q1 = p1.value(), q2 = p2.value();
      return MobiusMap(rat(1), -q1, rat(0), q2 - q1);
    }
    Rat q1 = p1.value(), q2 = p2.value(), q3 = p3.value();
    return MobiusMap(q2 - q3, -q1 * (q2 - q3), q2 - q1, -q3 * (q2 - q1));
  }

  static MobiusMap from_three_points(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                     const ProjectivePoint& p3, const ProjectivePoint& q1,
                                     const ProjectivePoint& q2, const ProjectivePoint& q3) {
    return to_zero_one_inf(q1, q2, q3).inverse().compose(to_zero_one_inf(p1, p2, p3));
  }

  std::string str(const std::string& var = "z") const {
    Poly pn(std::vector<Rat>{b_, a_});
    Poly pd(std::vector<Rat>{d_, c_});
    if (c_ == 0) return (pn * (1 / d_)).str(var);
    return "(" + pn.str(var) + ")/(" + pd.str(var) + ")";
  }

 private:
  Rat a_, b_, c_, d_;
  static void require_rational(const ProjectivePoint& p) {
    if (p.is_class()) throw InputError("anchor points must be rational or infinity");
  }
};

}  // namespace ratorb
