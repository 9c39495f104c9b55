// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ratorb/errors.hpp"
#include "ratorb/point.hpp"
#include "ratorb/ramification.hpp"
#include "ratorb/ratmap.hpp"

namespace ratorb {

// Ramification structure on the sphere: finitely many marked points with
// integer indices >= 2; unlisted points carry index 1. A class point marks
// every conjugate in its orbit with the same index.
class Orbifold {
 public:
  Orbifold() = default;
  explicit Orbifold(const std::vector<std::pair<ProjectivePoint, int>>& marks) {
    for (const auto& [p, n] : marks) set_index(p, n);
  }

  void set_index(const ProjectivePoint& p, int n) {
    if (n < 1) throw InputError("ramification index must be positive");
    if (n == 1)
      nu_.erase(p);
    else
      nu_[p] = n;
  }

  int index_at(const ProjectivePoint& p) const {
    auto it = nu_.find(p);
    return it == nu_.end() ? 1 : it->second;
  }

  bool is_unramified() const { return nu_.empty(); }

  std::vector<ProjectivePoint> support() const {
    std::vector<ProjectivePoint> s;
    for (const auto& [p, n] : nu_) s.push_back(p);
    return s;
  }

  // Index multiset, ascending; a class point repeats per conjugate.
  std::vector<int> signature() const {
    std::vector<int> sig;
    for (const auto& [p, n] : nu_)
      for (int i = 0; i < p.point_count(); ++i) sig.push_back(n);
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  const std::map<ProjectivePoint, int>& marks() const { return nu_; }

  bool operator==(const Orbifold& o) const { return nu_ == o.nu_; }
  bool operator!=(const Orbifold& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [p, n] : nu_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(n) + "@" + p.str();
    }
    return s + "}";
  }

 private:
  std::map<ProjectivePoint, int> nu_;
};

inline Rat euler_char(const Orbifold& o) {
  Rat chi = rat(2);
  for (const auto& [p, n] : o.marks()) chi += rat(p.point_count()) * (rat(1, n) - 1);
  return chi;
}

struct SignatureClass {
  enum Kind {
    PositiveSphere,      // {n,n}: cyclic
    PositiveDihedral,    // {2,2,n}
    Tetra,               // {2,3,3}
    Octa,                // {2,3,4}
    Icosa,               // {2,3,5}
    ZeroEuclidean,       // {2,2,2,2}, {3,3,3}, {2,4,4}, {2,3,6}
    Negative,            // chi < 0
    NonOrbifoldException // one marked point, or two with unequal indices
  };
  Kind kind;
  int n = 0;  // the free parameter of {n,n} / {2,2,n}

  bool operator==(const SignatureClass& o) const { return kind == o.kind && n == o.n; }

  // Degree of the universal covering map, finite only above zero characteristic.
  std::optional<long> theta_degree() const {
    switch (kind) {
      case PositiveSphere: return n;
      case PositiveDihedral: return 2L * n;
      case Tetra: return 12;
      case Octa: return 24;
      case Icosa: return 60;
      default: return std::nullopt;
    }
  }

  std::string str() const {
    switch (kind) {
      case PositiveSphere: return "cyclic(" + std::to_string(n) + ")";
      case PositiveDihedral: return "dihedral(" + std::to_string(n) + ")";
      case Tetra: return "tetrahedral";
      case Octa: return "octahedral";
      case Icosa: return "icosahedral";
      case ZeroEuclidean: return "euclidean";
      case Negative: return "hyperbolic";
      case NonOrbifoldException: return "non-orbifold";
    }
    return "";
  }
};

inline SignatureClass classify_signature(const std::vector<int>& sig) {
  if (sig.empty()) return {SignatureClass::PositiveSphere, 1};
  if (sig.size() == 1) return {SignatureClass::NonOrbifoldException, 0};
  if (sig.size() == 2) {
    if (sig[0] == sig[1]) return {SignatureClass::PositiveSphere, sig[0]};
    return {SignatureClass::NonOrbifoldException, 0};
  }
  Rat chi = rat(2);
  for (int n : sig) chi += rat(1, n) - 1;
  if (chi > 0) {
    // triples only: four or more indices force chi <= 0
    if (sig[0] == 2 && sig[1] == 2) return {SignatureClass::PositiveDihedral, sig[2]};
    if (sig == std::vector<int>{2, 3, 3}) return {SignatureClass::Tetra, 0};
    if (sig == std::vector<int>{2, 3, 4}) return {SignatureClass::Octa, 0};
    if (sig == std::vector<int>{2, 3, 5}) return {SignatureClass::Icosa, 0};
    throw std::logic_error("unclassifiable positive signature");
  }
  if (chi == 0) return {SignatureClass::ZeroEuclidean, 0};
  return {SignatureClass::Negative, 0};
}

inline SignatureClass classify_signature(const Orbifold& o) {
  return classify_signature(o.signature());
}

inline std::string signature_str(const std::vector<int>& sig) {
  std::string s = "(";
  for (size_t i = 0; i < sig.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sig[i]);
  }
  return s + ")";
}

// The canonical orbifold pair of a map: nu2 takes the lcm of local degrees
// over each point, nu1 divides it by the local degree at each preimage.
inline std::pair<Orbifold, Orbifold> orbifolds_of_map(const RatMap& f) {
  if (f.degree() < 2) throw InputError("orbifolds of a map need degree >= 2");
  Orbifold o2;
  for (const auto& v : critical_values(f)) {
    long l = 1;
    for (int d : fiber_portrait(f, v)) l = std::lcm(l, static_cast<long>(d));
    o2.set_index(v, static_cast<int>(l));
  }
  Orbifold o1;
  for (const auto& [v, n] : o2.marks())
    for (const auto& [p, ldeg] : fiber_points(f, v)) {
      if (n % ldeg != 0) throw std::logic_error("local degree fails to divide the fiber lcm");
      o1.set_index(p, n / ldeg);
    }
  return {o1, o2};
}

// Minimal indices making f holomorphic into O.
inline Orbifold pullback(const RatMap& f, const Orbifold& o) {
  if (f.degree() < 1) throw InputError("pullback needs a nonconstant map");
  Orbifold out;
  for (const auto& [v, n] : o.marks())
    for (const auto& [p, ldeg] : fiber_points(f, v))
      out.set_index(p, n / std::gcd(n, ldeg));
  return out;
}

namespace detail {

// Finite set where any factor of the covering conditions can be nontrivial.
inline std::vector<ProjectivePoint> predicate_test_set(const RatMap& f, const Orbifold& o1,
                                                       const Orbifold& o2) {
  std::vector<ProjectivePoint> pts = o1.support();
  for (const auto& [v, n] : o2.marks())
    for (const auto& [p, ldeg] : fiber_points(f, v)) pts.push_back(p);
  if (f.degree() >= 2)
    for (const auto& p : critical_points(f)) pts.push_back(p);
  sort_unique(pts);
  return pts;
}

}  // namespace detail

// nu2(f(z)) = nu1(z) * deg_z f at every point.
inline bool is_covering_map(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  if (f.is_constant()) throw InputError("covering predicate needs a nonconstant map");
  for (const auto& z : detail::predicate_test_set(f, o1, o2)) {
    long lhs = o2.index_at(f.eval(z));
    long rhs = static_cast<long>(o1.index_at(z)) * local_degree(f, z);
    if (lhs != rhs) return false;
  }
  return true;
}

// nu2(f(z)) | nu1(z) * deg_z f at every point.
inline bool is_holomorphic_map(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  if (f.is_constant()) throw InputError("holomorphic predicate needs a nonconstant map");
  for (const auto& z : detail::predicate_test_set(f, o1, o2)) {
    long lhs = o2.index_at(f.eval(z));
    long rhs = static_cast<long>(o1.index_at(z)) * local_degree(f, z);
    if (rhs % lhs != 0) return false;
  }
  return true;
}

// nu2(f(z)) = nu1(z) * gcd(deg_z f, nu2(f(z))) at every point; equivalently
// o1 is exactly the pullback of o2.
inline bool is_minimal_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
  if (f.is_constant()) throw InputError("holomorphic predicate needs a nonconstant map");
  for (const auto& z : detail::predicate_test_set(f, o1, o2)) {
    long n2 = o2.index_at(f.eval(z));
    long rhs = static_cast<long>(o1.index_at(z)) * std::gcd(static_cast<long>(local_degree(f, z)), n2);
    if (n2 != rhs) return false;
  }
  return true;
}

// Pointwise divisibility of indices.
inline bool precedes(const Orbifold& a, const Orbifold& b) {
  std::vector<ProjectivePoint> pts = a.support();
  for (const auto& p : b.support()) pts.push_back(p);
  detail::sort_unique(pts);
  for (const auto& p : pts)
    if (b.index_at(p) % a.index_at(p) != 0) return false;
  return true;
}

// Signature-level comparison: every index on the left divides some index on
// the right.
inline bool nu_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    bool ok = false;
    for (int y : b) ok = ok || (y % x == 0);
    if (!ok) return false;
  }
  return true;
}

inline bool nu_leq(const Orbifold& a, const Orbifold& b) {
  return nu_leq(a.signature(), b.signature());
}

inline Orbifold lcm_orbifolds(const std::vector<Orbifold>& list) {
  Orbifold out;
  for (const auto& o : list)
    for (const auto& [p, n] : o.marks())
      out.set_index(p, static_cast<int>(std::lcm(static_cast<long>(out.index_at(p)),
                                                 static_cast<long>(n))));
  return out;
}

// One row of the exceptional table of self-covering patterns with positively
// curved canonical orbifold.
struct ExceptionRecord {
  int table_case;                     // 1..17
  std::optional<int> self_case;       // 1..7 when nu(O1) = nu(O2)
  std::vector<int> sig_canonical, sig_o1, sig_o2;
  std::string model;                  // the map class forced by the row
};

// Covering maps between zero-characteristic orbifolds either propagate their
// orbifold pair exactly (absent result) or land in one of seventeen patterns.
inline std::optional<ExceptionRecord> exceptional_self_cover_lookup(const RatMap& f,
                                                                    const Orbifold& o1,
                                                                    const Orbifold& o2) {
  if (euler_char(o1) != 0 || euler_char(o2) != 0)
    throw InputError("exceptional lookup needs zero-characteristic orbifolds");
  if (!is_covering_map(f, o1, o2))
    throw InputError("exceptional lookup needs a covering map");
  auto [c1, c2] = orbifolds_of_map(f);
  Rat chi = euler_char(c2);
  if (chi == 0) return std::nullopt;
  if (chi < 0) throw std::logic_error("canonical orbifold cannot be hyperbolic here");
  struct Row {
    int id;
    std::optional<int> self_id;
    std::vector<int> canon, s1, s2;
    long deg;  // 0 = any
    const char* model;
  };
  static const std::vector<Row> table = {
      {1, 1, {2, 2}, {2, 2, 2, 2}, {2, 2, 2, 2}, 0, "pow(2)"},
      {2, 2, {2, 2}, {2, 4, 4}, {2, 4, 4}, 0, "pow(2)"},
      {3, std::nullopt, {2, 2}, {2, 2, 2, 2}, {2, 4, 4}, 0, "pow(2)"},
      {4, std::nullopt, {2, 2}, {3, 3, 3}, {2, 3, 6}, 0, "pow(2)"},
      {5, 3, {3, 3}, {3, 3, 3}, {3, 3, 3}, 0, "pow(3)"},
      {6, std::nullopt, {3, 3}, {2, 2, 2, 2}, {2, 3, 6}, 0, "pow(3)"},
      {7, std::nullopt, {4, 4}, {2, 2, 2, 2}, {2, 4, 4}, 0, "pow(4)"},
      {8, 4, {2, 2, 2}, {2, 2, 2, 2}, {2, 2, 2, 2}, 0, "Z(2)"},
      {9, std::nullopt, {2, 2, 2}, {2, 2, 2, 2}, {2, 4, 4}, 0, "Z(2)"},
      {10, std::nullopt, {2, 2, 3}, {3, 3, 3}, {2, 3, 6}, 0, "Z(3)"},
      {11, 5, {2, 2, 3}, {2, 3, 6}, {2, 3, 6}, 0, "T(3)"},
      {12, std::nullopt, {2, 2, 4}, {2, 2, 2, 2}, {2, 4, 4}, 8, "Z(4)"},
      {13, std::nullopt, {2, 2, 4}, {2, 2, 2, 2}, {2, 4, 4}, 4, "T(4)"},
      {14, 6, {2, 2, 4}, {2, 4, 4}, {2, 4, 4}, 0, "T(4)"},
      {15, 7, {2, 3, 3}, {2, 3, 6}, {2, 3, 6}, 0, "lattes233_4"},
      {16, std::nullopt, {2, 3, 3}, {2, 2, 2, 2}, {2, 3, 6}, 6, "lattes233_6"},
      {17, std::nullopt, {2, 3, 3}, {2, 2, 2, 2}, {2, 3, 6}, 12, "lattes233_12"},
  };
  std::vector<int> sc = c2.signature(), s1 = o1.signature(), s2 = o2.signature();
  for (const auto& row : table) {
    if (row.canon != sc || row.s1 != s1 || row.s2 != s2) continue;
    if (row.deg != 0 && row.deg != f.degree()) continue;
    return ExceptionRecord{row.id, row.self_id, sc, s1, s2, row.model};
  }
  throw std::logic_error("positively curved canonical orbifold outside the exceptional table");
}

}  // namespace ratorb
