// SPDX-License-Identifier: Apache-2.0
//
// Functional-equation verifiers: semiconjugacy, commuting squares and their
// goodness conditions, the four model square families, and recovery of the
// left factor of a semiconjugacy.

#pragma once

#include <optional>

#include "ratorb/families.hpp"
#include "ratorb/ramification.hpp"

namespace ratorb {

// A o X = X o B, exactly.
inline bool verify_semiconjugacy(const RatMap& a, const RatMap& x, const RatMap& b) {
  return compose(a, x) == compose(x, b);
}

// gcd(deg_z C, deg_z B) = 1 for every z. Away from the critical points of
// both maps each local degree is 1, so the union of critical points decides.
inline bool coprime_local_degrees(const RatMap& c, const RatMap& b) {
  if (c.is_constant() || b.is_constant()) throw InputError("local degrees need nonconstant maps");
  if (c.degree() < 2 || b.degree() < 2) return true;
  std::vector<ProjectivePoint> pts = critical_points(c);
  auto more = critical_points(b);
  pts.insert(pts.end(), more.begin(), more.end());
  detail::sort_unique(pts);
  for (const auto& p : pts) {
    Int g = gcd(Int(local_degree(c, p)), Int(local_degree(b, p)));
    if (g != 1) return false;
  }
  return true;
}

struct SolutionSquare {
  RatMap a, c, d, b;  // a o c = d o b

  bool commutes() const { return compose(a, c) == compose(d, b); }
};

struct GoodnessReport {
  enum Tri { False, True, NotChecked };
  Tri fiber_product_irreducible = NotChecked;
  bool no_common_right_factor = false;
  bool degrees_match = false;
  bool verdict = false;
};

// A square is good when any two of three conditions hold; the fiber-product
// condition stays unchecked, so the two checkable ones must both hold.
inline GoodnessReport is_good_solution(const SolutionSquare& s) {
  GoodnessReport r;
  r.degrees_match = s.a.degree() == s.b.degree() && s.c.degree() == s.d.degree();
  r.no_common_right_factor = coprime_local_degrees(s.c, s.b);
  r.verdict = r.degrees_match && r.no_common_right_factor;
  return r;
}

enum class SquareFamily { MonomialPair, ChebyshevPair, DegreeThreeFour, DihedralHalf };

// The four model squares, printed with identity Mobius factors.
inline SolutionSquare theorem_g_family(SquareFamily kind, long m1 = 0, long m2 = 0) {
  switch (kind) {
    case SquareFamily::MonomialPair: {
      if (m1 < 2 || m2 < 2 || gcd(Int(m1), Int(m2)) != 1)
        throw InputError("need m1, m2 >= 2 with gcd(m1, m2) = 1");
      return {power_map(m1), power_map(m2), power_map(m2), power_map(m1)};
    }
    case SquareFamily::ChebyshevPair: {
      if (m1 < 2 || m2 < 2 || gcd(Int(m1), Int(m2)) != 1)
        throw InputError("need m1, m2 >= 2 with gcd(m1, m2) = 1");
      return {chebyshev(m1), chebyshev(m2), chebyshev(m2), chebyshev(m1)};
    }
    case SquareFamily::DegreeThreeFour:
      return {gamma_map(), delta_map(), delta_map(), gamma_map()};
    case SquareFamily::DihedralHalf: {
      if (m2 < 3 || m2 % 2 == 0) throw InputError("need odd m >= 3");
      return {chebyshev(2), zhukovsky(m2), zhukovsky(m2), power_map(2)};
    }
  }
  throw std::logic_error("unhandled square family");
}

// The left factor of a semiconjugacy is determined by X and B when it
// exists: A = (X o B) right-divided by X.
inline std::optional<RatMap> recover_semiconjugate_left(const RatMap& x, const RatMap& b) {
  if (x.is_constant() || b.is_constant()) throw InputError("need nonconstant maps");
  return right_divide(compose(x, b), x);
}

}  // namespace ratorb
