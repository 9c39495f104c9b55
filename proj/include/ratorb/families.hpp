// SPDX-License-Identifier: Apache-2.0
//
// Named map families: power maps, Chebyshev polynomials, Zhukovsky maps,
// the degree-3/4/12 commuting triple, the tetrahedral-signature trio, and
// the self-map constructors attached to the positive orbifold signatures.

#pragma once

#include <optional>
#include <string>

#include "ratorb/orbifold.hpp"
#include "ratorb/ramification.hpp"
#include "ratorb/ratmap.hpp"

namespace ratorb {

inline RatMap power_map(long n) {
  if (n < 1) throw InputError("power map exponent must be positive");
  return RatMap(Poly::monomial(rat(1), static_cast<int>(n)));
}

// T_n via the two-term recurrence; T_n(cos t) = cos(nt).
inline RatMap chebyshev(long n) {
  if (n < 1) throw InputError("Chebyshev index must be positive");
  Poly prev = Poly::one(), cur = Poly::variable();
  Poly twoz = Poly::monomial(rat(2), 1);
  for (long i = 1; i < n; ++i) {
    Poly next = twoz * cur - prev;
    prev = cur;
    cur = next;
  }
  return RatMap(cur);
}

// Z_n = (z^n + 1/z^n)/2, a degree-2n map with Z_n(1/z) = Z_n(z).
inline RatMap zhukovsky(long n) {
  if (n < 1) throw InputError("Zhukovsky index must be positive");
  Poly num = Poly::monomial(rat(1), static_cast<int>(2 * n)) + Poly::one();
  return RatMap(num, Poly::monomial(rat(2), static_cast<int>(n)));
}

// 27z/(4z-1)^3
inline RatMap delta_map() {
  return RatMap(Poly::monomial(rat(27), 1), Poly(std::vector<Rat>{rat(-1), rat(4)}).pow(3));
}

// -64z(z-1)^3/(8z+1)^3
inline RatMap gamma_map() {
  Poly num = Poly::monomial(rat(-64), 1) * Poly(std::vector<Rat>{rat(-1), rat(1)}).pow(3);
  return RatMap(num, Poly(std::vector<Rat>{rat(1), rat(8)}).pow(3));
}

// The degree-12 common composition of the two maps above, stored composed.
inline RatMap omega_map() { return compose(gamma_map(), delta_map()); }

// -z(z-8)^3 / 64(z+1)^3
inline RatMap lattes233_deg4() {
  Poly num = Poly::monomial(rat(-1), 1) * Poly(std::vector<Rat>{rat(-8), rat(1)}).pow(3);
  return RatMap(num, Poly(std::vector<Rat>{rat(1), rat(1)}).pow(3) * 64);
}

// -(z^2-4)^3 / 64(z-1)^3
inline RatMap lattes233_deg6() {
  Poly num = Poly(std::vector<Rat>{rat(-4), rat(0), rat(1)}).pow(3) * -1;
  return RatMap(num, Poly(std::vector<Rat>{rat(-1), rat(1)}).pow(3) * 64);
}

// -z^3(z^3-8)^3 / 64(z^3+1)^3
inline RatMap lattes233_deg12() {
  Poly num = Poly::monomial(rat(-1), 3) * Poly(std::vector<Rat>{rat(-8), rat(0), rat(0), rat(1)}).pow(3);
  return RatMap(num, Poly(std::vector<Rat>{rat(1), rat(0), rat(0), rat(1)}).pow(3) * 64);
}

// Universal coverings of the positive cyclic and dihedral orbifolds,
// normalized with marked points at 0/inf and -1/1/inf respectively.
inline RatMap theta_cyclic(long n) { return power_map(n); }
inline RatMap theta_dihedral(long n) { return zhukovsky(n); }

struct FamilyTag {
  enum Kind {
    Power,
    Chebyshev,
    Zhukovsky,
    Delta,
    GammaMap,
    Omega,
    Lattes233_12,
    Lattes233_4,
    Lattes233_6,
    ThetaCyclic,
    ThetaDihedral,
  };
  Kind kind;
  long n = 1;

  bool operator==(const FamilyTag&) const = default;
};

inline RatMap make_family(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyTag::Power: return power_map(tag.n);
    case FamilyTag::Chebyshev: return chebyshev(tag.n);
    case FamilyTag::Zhukovsky: return zhukovsky(tag.n);
    case FamilyTag::Delta: return delta_map();
    case FamilyTag::GammaMap: return gamma_map();
    case FamilyTag::Omega: return omega_map();
    case FamilyTag::Lattes233_12: return lattes233_deg12();
    case FamilyTag::Lattes233_4: return lattes233_deg4();
    case FamilyTag::Lattes233_6: return lattes233_deg6();
    case FamilyTag::ThetaCyclic: return theta_cyclic(tag.n);
    case FamilyTag::ThetaDihedral: return theta_dihedral(tag.n);
  }
  throw std::logic_error("unhandled family tag");
}

inline std::string family_name(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyTag::Power: return "pow(" + std::to_string(tag.n) + ")";
    case FamilyTag::Chebyshev: return "T(" + std::to_string(tag.n) + ")";
    case FamilyTag::Zhukovsky: return "Z(" + std::to_string(tag.n) + ")";
    case FamilyTag::Delta: return "Delta";
    case FamilyTag::GammaMap: return "Gamma";
    case FamilyTag::Omega: return "Omega";
    case FamilyTag::Lattes233_12: return "lattes233_12";
    case FamilyTag::Lattes233_4: return "lattes233_4";
    case FamilyTag::Lattes233_6: return "lattes233_6";
    case FamilyTag::ThetaCyclic: return "theta_cyclic(" + std::to_string(tag.n) + ")";
    case FamilyTag::ThetaDihedral: return "theta_dihedral(" + std::to_string(tag.n) + ")";
  }
  throw std::logic_error("unhandled family tag");
}

// Parses the names accepted by the command-line grammar.
inline std::optional<FamilyTag> parse_family_name(const std::string& s) {
  auto indexed = [&](const std::string& head) -> std::optional<long> {
    if (s.size() < head.size() + 3 || s.compare(0, head.size(), head) != 0) return std::nullopt;
    if (s[head.size()] != '(' || s.back() != ')') return std::nullopt;
    std::string digits = s.substr(head.size() + 1, s.size() - head.size() - 2);
    if (digits.empty()) return std::nullopt;
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    long n = std::stol(digits);
    if (n < 1) return std::nullopt;
    return n;
  };
  if (auto n = indexed("pow")) return FamilyTag{FamilyTag::Power, *n};
  if (auto n = indexed("T")) return FamilyTag{FamilyTag::Chebyshev, *n};
  if (auto n = indexed("Z")) return FamilyTag{FamilyTag::Zhukovsky, *n};
  if (s == "Delta") return FamilyTag{FamilyTag::Delta};
  if (s == "Gamma") return FamilyTag{FamilyTag::GammaMap};
  if (s == "Omega") return FamilyTag{FamilyTag::Omega};
  if (s == "lattes233_12") return FamilyTag{FamilyTag::Lattes233_12};
  if (s == "lattes233_4") return FamilyTag{FamilyTag::Lattes233_4};
  if (s == "lattes233_6") return FamilyTag{FamilyTag::Lattes233_6};
  return std::nullopt;
}

// Membership in the family of maps commuting with z -> 1/z,
// characterized by G(z) G(1/z) = 1.
inline bool in_frak_T(const RatMap& g) {
  int d = std::max(g.num().degree(), g.den().degree());
  Poly flipped_num = g.num().reversed(d);
  Poly flipped_den = g.den().reversed(d);
  // G(1/z) = flipped_num / flipped_den; G(z) G(1/z) = 1 iff cross products agree
  return g.num() * flipped_num == g.den() * flipped_den;
}

// Substitutes z^n into a map, z -> f(z^n).
inline RatMap precompose_power(const RatMap& f, long n) {
  return compose(f, power_map(n));
}

// z^r R(z)^n, the minimal holomorphic self-map family of the orbifold with
// indices n at 0 and inf. gcd(r, n) = 1 makes the local degrees over 0 and
// inf coprime to n regardless of the zero and pole orders of R there.
inline RatMap zxcv_self_map(long r, const RatMap& R, long n) {
  if (n < 2 || r < 1 || r > n - 1) throw InputError("need 1 <= r <= n-1");
  if (gcd(Int(r), Int(n)) != 1) throw InputError("need gcd(r, n) = 1");
  if (R.num().is_zero()) throw InputError("the factor must be nonzero");
  Poly num = Poly::monomial(rat(1), static_cast<int>(r)) * R.num().pow(static_cast<int>(n));
  return RatMap(num, R.den().pow(static_cast<int>(n)));
}

struct SignedSelfMap {
  RatMap map;
  int sign;  // the unit that made the quotient rational
};

// The self-map A of the orbifold with indices 2 at -1 and 1 and n at inf,
// recovered from A o Z_n = Z_n o (eps z^r S(z^n)) by right division.
inline SignedSelfMap zxcv2_self_map(long r, const RatMap& S, long n) {
  if (n < 2 || r < 1 || r > n - 1) throw InputError("need 1 <= r <= n-1");
  if (gcd(Int(r), Int(n)) != 1) throw InputError("need gcd(r, n) = 1");
  if (!in_frak_T(S)) throw InputError("the factor must satisfy S(z) S(1/z) = 1");
  RatMap zn = zhukovsky(n);
  RatMap sn = precompose_power(S, n);
  for (int sign : {1, -1}) {
    RatMap inner(Poly::monomial(rat(sign), static_cast<int>(r)) * sn.num(), sn.den());
    auto a = right_divide(compose(zn, inner), zn);
    if (a) return {*a, sign};
  }
  throw LimitError("neither sign yields a rational quotient");
}

}  // namespace ratorb
