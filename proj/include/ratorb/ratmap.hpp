// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratorb/errors.hpp"
#include "ratorb/linalg.hpp"
#include "ratorb/mobius.hpp"
#include "ratorb/point.hpp"
#include "ratorb/polynomial.hpp"
#include "ratorb/rational.hpp"

namespace ratorb {

// Composition refuses to build maps above this degree; settable by tools.
inline long& composition_degree_cap() {
  static long cap = 4096;
  return cap;
}

// A rational self-map of the sphere in lowest terms, denominator monic.
class RatMap {
 public:
  RatMap() : num_(Poly::variable()), den_(Poly::one()) {}
  explicit RatMap(const Poly& p) : num_(p), den_(Poly::one()) {}
  explicit RatMap(const Rat& c) : num_(Poly(c)), den_(Poly::one()) {}
  explicit RatMap(const MobiusMap& m)
      : RatMap(Poly(std::vector<Rat>{m.b(), m.a()}), Poly(std::vector<Rat>{m.d(), m.c()})) {}

  RatMap(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw InputError("zero denominator");
    Poly g = poly_gcd(p, q);
    num_ = g.degree() > 0 ? poly_div_exact(p, g) : p;
    den_ = g.degree() > 0 ? poly_div_exact(q, g) : q;
    Rat l = den_.lc();
    num_ = num_ * (1 / l);
    den_ = den_ * (1 / l);
  }

  static RatMap identity() { return RatMap(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  long degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_constant() const { return degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_identity() const { return num_ == Poly::variable() && den_ == Poly::one(); }

  bool operator==(const RatMap& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatMap& o) const { return !(*this == o); }

  ProjectivePoint eval(const Rat& z) const {
    Rat q = den_.eval(z);
    if (q == 0) return ProjectivePoint::infinity();
    return ProjectivePoint::finite(num_.eval(z) / q);
  }

  ProjectivePoint eval_infinity() const {
    int dp = num_.degree(), dq = den_.degree();
    if (dp > dq) return ProjectivePoint::infinity();
    if (dp < dq) return ProjectivePoint::finite(rat(0));
    return ProjectivePoint::finite(num_.lc());  // denominator is monic
  }

  ProjectivePoint eval(const ProjectivePoint& p) const {
    if (p.is_finite()) return eval(p.value());
    if (p.is_infinity()) return eval_infinity();
    return eval_class(p.minpoly());
  }

  std::string str(const std::string& var = "z") const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

  MobiusMap as_mobius() const {
    if (degree() != 1) throw InputError("not a degree-one map");
    return MobiusMap(num_.coeff(1), num_.coeff(0), den_.coeff(1), den_.coeff(0));
  }

 private:
  Poly num_, den_;

  // Image of a whole conjugate class: the resultant of the class polynomial
  // with num - t den, taken in t, collapses to the image class polynomial.
  // Monic class polynomials keep specialization and interpolation exact.
  ProjectivePoint eval_class(const Poly& m) const {
    if (poly_divides(m, den_)) return ProjectivePoint::infinity();
    int n = m.degree();
    std::vector<std::pair<Rat, Rat>> samples;
    for (long k = 0; static_cast<int>(samples.size()) < n + 1; ++k) {
      Rat t0 = rat((k % 2 == 0) ? k / 2 : -(k / 2 + 1));
      samples.emplace_back(t0, resultant(m, num_ - den_ * t0));
    }
    Poly r = squarefree_part(interpolate(samples));
    if (r.degree() == 1) return ProjectivePoint::finite(-r.coeff(0));
    return ProjectivePoint::algebraic(r);
  }
};

// Numerator of the derivative; its roots are the finite critical points.
inline Poly wronskian(const RatMap& f) {
  return f.num().derivative() * f.den() - f.num() * f.den().derivative();
}

// The polynomial whose roots, with multiplicity, are the finite points of the
// fiber over v. Degree shortfall against degree * point_count(v) is absorbed
// by the point at infinity.
inline Poly fiber_poly(const RatMap& f, const ProjectivePoint& v) {
  if (f.is_constant()) throw InputError("fiber of a constant map");
  if (v.is_finite()) return f.num() - f.den() * v.value();
  if (v.is_infinity()) return f.den();
  const Poly& m = v.minpoly();
  int n = m.degree();
  Poly acc = Poly::zero();
  for (int i = 0; i <= n; ++i)
    acc = acc + f.num().pow(static_cast<unsigned long>(i)) *
                    f.den().pow(static_cast<unsigned long>(n - i)) * m.coeff(i);
  return acc;
}

inline RatMap compose(const RatMap& f, const RatMap& g) {
  if (f.is_constant()) return f;
  if (g.is_constant()) {
    ProjectivePoint w = f.eval(g.num().coeff(0) / g.den().coeff(0));
    if (!w.is_finite()) throw InputError("composition collapses to the constant infinity");
    return RatMap(w.value());
  }
  if (f.degree() * g.degree() > composition_degree_cap())
    throw LimitError("composition exceeds the degree cap");
  long nf = f.degree();
  std::vector<Poly> gn_pow(nf + 1), gd_pow(nf + 1);
  gn_pow[0] = Poly::one();
  gd_pow[0] = Poly::one();
  for (long i = 1; i <= nf; ++i) {
    gn_pow[i] = gn_pow[i - 1] * g.num();
    gd_pow[i] = gd_pow[i - 1] * g.den();
  }
  Poly pn = Poly::zero(), pd = Poly::zero();
  for (long i = 0; i <= nf; ++i) {
    Poly w = gn_pow[i] * gd_pow[nf - i];
    pn = pn + w * f.num().coeff(static_cast<int>(i));
    pd = pd + w * f.den().coeff(static_cast<int>(i));
  }
  return RatMap(pn, pd);
}

inline RatMap iterate_map(const RatMap& f, long k) {
  if (k < 0) throw InputError("negative iterate");
  RatMap acc = RatMap::identity();
  for (long i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

// mu o f o mu^{-1}
inline RatMap mobius_conjugate(const RatMap& f, const MobiusMap& mu) {
  return compose(RatMap(mu), compose(f, RatMap(mu.inverse())));
}

inline int local_degree(const RatMap& f, const ProjectivePoint& p);

namespace detail {

// f read in the chart w = 1/z around infinity; stays reduced because the
// numerator and denominator cannot both vanish at the origin.
inline RatMap flipped_at_infinity(const RatMap& f) {
  int d = static_cast<int>(f.degree());
  return RatMap(f.num().reversed(d), f.den().reversed(d));
}

}  // namespace detail

inline int local_degree(const RatMap& f, const ProjectivePoint& p) {
  if (f.is_constant()) throw InputError("local degree of a constant map");
  if (p.is_infinity()) return local_degree(detail::flipped_at_infinity(f), ProjectivePoint::finite(rat(0)));
  Poly fp = fiber_poly(f, f.eval(p));
  if (p.is_finite()) return root_multiplicity(fp, p.value());
  const Poly& m = p.minpoly();
  int k = 0;
  while (poly_divides(m, fp)) {
    fp = poly_div_exact(fp, m);
    ++k;
  }
  return k;
}

// Solves F = A o V for A by linear algebra on the coefficients of A.
inline std::optional<RatMap> right_divide(const RatMap& F, const RatMap& V) {
  if (F.is_constant() || V.is_constant()) throw InputError("right division needs nonconstant maps");
  long dF = F.degree(), dV = V.degree();
  if (dF % dV != 0) return std::nullopt;
  long n = dF / dV;
  std::vector<Poly> w(n + 1);
  for (long i = 0; i <= n; ++i)
    w[i] = V.num().pow(static_cast<unsigned long>(i)) * V.den().pow(static_cast<unsigned long>(n - i));
  long rows = 2 * dF + 1;
  RatMatrix mat(rows, std::vector<Rat>(2 * (n + 1), rat(0)));
  for (long i = 0; i <= n; ++i) {
    Poly col_a = -(F.den() * w[i]);
    Poly col_b = F.num() * w[i];
    for (long r = 0; r < rows; ++r) {
      mat[r][i] = col_a.coeff(static_cast<int>(r));
      mat[r][n + 1 + i] = col_b.coeff(static_cast<int>(r));
    }
  }
  auto basis = nullspace(mat);
  if (basis.empty()) return std::nullopt;
  std::vector<Rat> an(basis[0].begin(), basis[0].begin() + n + 1);
  std::vector<Rat> bn(basis[0].begin() + n + 1, basis[0].end());
  Poly A_num(an), A_den(bn);
  if (A_den.is_zero()) return std::nullopt;
  RatMap A(A_num, A_den);
  if (A.degree() != n || compose(A, V) != F) return std::nullopt;
  return A;
}

}  // namespace ratorb
