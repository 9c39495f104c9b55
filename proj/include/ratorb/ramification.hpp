// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ratorb/errors.hpp"
#include "ratorb/point.hpp"
#include "ratorb/ratmap.hpp"

namespace ratorb {

// Local degrees over one representative point of value; a class value stands
// for point_count() conjugate fibers sharing the same multiset.
struct FiberPortrait {
  ProjectivePoint value;
  std::vector<int> local_degrees;
};

struct Portrait {
  long degree = 0;
  std::vector<FiberPortrait> fibers;
  std::string str() const;
};

namespace detail {

// One image point per Galois class of roots of a monic squarefree factor.
inline std::vector<ProjectivePoint> factor_images(const RatMap& f, Poly g) {
  std::vector<ProjectivePoint> out;
  Poly common = poly_gcd(g, f.den());
  if (common.degree() > 0) {
    out.push_back(ProjectivePoint::infinity());
    g = poly_div_exact(g, common);
  }
  if (g.degree() == 0) return out;
  if (g.degree() == 1) {
    out.push_back(f.eval(-g.coeff(0)));
    return out;
  }
  int n = g.degree();
  std::vector<std::pair<Rat, Rat>> samples;
  for (long k = 0; static_cast<int>(samples.size()) < n + 1; ++k) {
    Rat t0 = rat((k % 2 == 0) ? k / 2 : -(k / 2 + 1));
    samples.emplace_back(t0, resultant(g, f.num() - f.den() * t0));
  }
  Poly r = squarefree_part(interpolate(samples));
  for (const Poly& piece : split_irreducible_factors(r)) {
    if (piece.degree() == 1)
      out.push_back(ProjectivePoint::finite(-piece.coeff(0)));
    else
      out.push_back(ProjectivePoint::algebraic(piece));
  }
  return out;
}

inline void sort_unique(std::vector<ProjectivePoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace detail

inline std::vector<ProjectivePoint> critical_points(const RatMap& f) {
  if (f.degree() < 2) throw InputError("critical points need degree >= 2");
  std::vector<ProjectivePoint> out;
  for (const auto& [factor, mult] : squarefree_decomposition(wronskian(f)).factors)
    for (const Poly& piece : split_irreducible_factors(factor)) {
      if (piece.degree() == 1)
        out.push_back(ProjectivePoint::finite(-piece.coeff(0)));
      else
        out.push_back(ProjectivePoint::algebraic(piece));
    }
  if (local_degree(f, ProjectivePoint::infinity()) >= 2) out.push_back(ProjectivePoint::infinity());
  detail::sort_unique(out);
  return out;
}

inline std::vector<ProjectivePoint> critical_values(const RatMap& f) {
  if (f.degree() < 2) throw InputError("critical values need degree >= 2");
  std::vector<ProjectivePoint> out;
  auto sf = squarefree_decomposition(wronskian(f));
  for (const auto& [factor, mult] : sf.factors) {
    auto imgs = detail::factor_images(f, factor);
    out.insert(out.end(), imgs.begin(), imgs.end());
  }
  if (local_degree(f, ProjectivePoint::infinity()) >= 2) out.push_back(f.eval_infinity());
  detail::sort_unique(out);
  return out;
}

// Local degrees over one representative point of v, ascending.
inline std::vector<int> fiber_portrait(const RatMap& f, const ProjectivePoint& v) {
  if (f.degree() < 1) throw InputError("fiber portrait of a constant map");
  long d = f.degree();
  Poly fp = fiber_poly(f, v);
  std::vector<int> out;
  int k = v.point_count();
  for (const auto& [factor, mult] : squarefree_decomposition(fp).factors) {
    if (factor.degree() % k != 0)
      throw InputError("fiber portrait over a reducible class polynomial");
    for (int i = 0; i < factor.degree() / k; ++i) out.push_back(mult);
  }
  long shortfall = d * k - fp.degree();
  if (shortfall > 0) {
    if (k != 1) throw InputError("fiber portrait over a reducible class polynomial");
    out.push_back(static_cast<int>(shortfall));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Distinct points of the full preimage of v, each with its local degree.
// Conjugate preimages are lumped into class points; over a class value the
// fiber points of the whole orbit are returned.
inline std::vector<std::pair<ProjectivePoint, int>> fiber_points(const RatMap& f,
                                                                 const ProjectivePoint& v) {
  if (f.degree() < 1) throw InputError("fiber of a constant map");
  Poly fp = fiber_poly(f, v);
  std::vector<std::pair<ProjectivePoint, int>> out;
  for (const auto& [factor, mult] : squarefree_decomposition(fp).factors) {
    for (const Poly& piece : split_irreducible_factors(factor)) {
      if (piece.degree() == 1)
        out.emplace_back(ProjectivePoint::finite(-piece.coeff(0)), mult);
      else
        out.emplace_back(ProjectivePoint::algebraic(piece), mult);
    }
  }
  long shortfall = f.degree() * v.point_count() - fp.degree();
  if (shortfall > 0) out.emplace_back(ProjectivePoint::infinity(), static_cast<int>(shortfall));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Number of distinct sphere points in the full preimage of v (all conjugates
// of a class value counted).
inline long preimage_count(const RatMap& f, const ProjectivePoint& v) {
  if (f.degree() < 1) throw InputError("preimage of a constant map");
  Poly fp = fiber_poly(f, v);
  long n = squarefree_part(fp).degree();
  if (f.degree() * v.point_count() - fp.degree() > 0) n += 1;
  return n;
}

inline long preimage_count(const RatMap& f, const std::vector<ProjectivePoint>& set) {
  long n = 0;
  for (const auto& v : set) n += preimage_count(f, v);
  return n;
}

inline Portrait portrait(const RatMap& f) {
  if (f.degree() < 2) throw InputError("portrait needs degree >= 2");
  Portrait p;
  p.degree = f.degree();
  for (const auto& v : critical_values(f)) p.fibers.push_back({v, fiber_portrait(f, v)});
  return p;
}

// Total branching must account for twice the degree minus two; a hard gate on
// multiplicity extraction.
inline bool check_riemann_hurwitz(const RatMap& f) {
  if (f.degree() < 1) throw InputError("branching of a constant map");
  if (f.degree() == 1) return true;
  long sum = 0;
  for (const auto& fib : portrait(f).fibers) {
    long per_point = 0;
    for (int l : fib.local_degrees) per_point += l - 1;
    sum += per_point * fib.value.point_count();
  }
  return sum == 2 * f.degree() - 2;
}

inline std::string Portrait::str() const {
  std::string s = "(";
  for (size_t i = 0; i < fibers.size(); ++i) {
    if (i) s += ", ";
    s += "{";
    for (size_t j = 0; j < fibers[i].local_degrees.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(fibers[i].local_degrees[j]);
    }
    s += "}@" + fibers[i].value.str();
  }
  return s + ")";
}

}  // namespace ratorb
