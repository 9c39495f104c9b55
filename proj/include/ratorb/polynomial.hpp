// SPDX-License-Identifier: Apache-2.0
// Dense univariate polynomials over the exact rationals, plus the gcd /
// squarefree / resultant / root-extraction tower the rest of the library
// stands on. No floating point anywhere.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ratorb {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(rat(1)); }
  static Poly variable() { return Poly(std::vector<Rat>{rat(0), rat(1)}); }
  // c * z^k
  static Poly monomial(const Rat& c, int k) {
    if (c == 0 || k < 0) return Poly();
    std::vector<Rat> v(static_cast<size_t>(k) + 1, rat(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return rat(0);
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat lc() const {
    if (c_.empty()) return rat(0);
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
  }
  Poly operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Rat& s, const Poly& a) {
    if (s == 0) return Poly();
    std::vector<Rat> v = a.c_;
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Rat& s) { return s * a; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
  }

  Rat eval(const Rat& x) const {
    Rat acc = rat(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return (1 / lc()) * (*this);
  }

  // Coefficients reversed against homogenization degree n >= degree().
  // rev_n(P)(z) = z^n P(1/z).
  Poly reversed(int n) const {
    if (n < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
    std::vector<Rat> v(static_cast<size_t>(n) + 1, rat(0));
    for (int i = 0; i <= degree(); ++i) v[static_cast<size_t>(n - i)] = coeff(i);
    return Poly(std::move(v));
  }

  Poly pow(unsigned long e) const {
    Poly r = Poly::one();
    Poly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  Poly compose(const Poly& g) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
    return acc;
  }

  // P(z) -> P(z + s)
  Poly shifted(const Rat& s) const {
    return compose(Poly(std::vector<Rat>{s, rat(1)}));
  }

  std::string str(const std::string& var = "z") const;

 private:
  std::vector<Rat> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

struct PolyDivMod {
  Poly quot, rem;
};

inline PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  std::vector<Rat> q(static_cast<size_t>(std::max(0, a.degree() - b.degree() + 1)), rat(0));
  Rat inv_lc = 1 / b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rat f = r.lc() * inv_lc;
    q[static_cast<size_t>(k)] = f;
    r = r - Poly::monomial(f, k) * b;
  }
  return {Poly(std::move(q)), r};
}

inline Poly poly_div_exact(const Poly& a, const Poly& b) {
  PolyDivMod d = poly_divmod(a, b);
  if (!d.rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return d.quot;
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).rem; }

// Monic gcd by the Euclidean remainder tower.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

inline bool poly_divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return poly_divmod(a, d).rem.is_zero();
}

struct SquarefreeDecomposition {
  Rat content;                             // leading constant
  std::vector<std::pair<Poly, int>> factors;  // monic squarefree, ascending multiplicity
};

// Yun's algorithm; exact over characteristic zero.
inline SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
  SquarefreeDecomposition out;
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  out.content = p.lc();
  Poly a = p.monic();
  if (a.degree() == 0) return out;
  Poly da = a.derivative();
  Poly g = poly_gcd(a, da);
  if (g.degree() == 0) {
    out.factors.emplace_back(a, 1);
    return out;
  }
  Poly b = poly_div_exact(a, g);
  Poly c = poly_div_exact(da, g);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly f = poly_gcd(b, d);
    if (f.degree() > 0) out.factors.emplace_back(f, i);
    b = poly_div_exact(b, f);
    c = poly_div_exact(d, f);
    d = c - b.derivative();
    ++i;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

inline Poly squarefree_part(const Poly& p) {
  Poly g = poly_gcd(p, p.derivative());
  if (g.is_zero() || g.degree() == 0) return p.monic();
  return poly_div_exact(p.monic(), g).monic();
}

inline Rat resultant(Poly a, Poly b) {
  if (a.is_zero() || b.is_zero()) return rat(0);
  Rat acc = rat(1);
  int sign = 1;
  while (b.degree() > 0) {
    Poly r = poly_mod(a, b);
    if (r.is_zero()) return rat(0);
    acc *= pow_rat(b.lc(), a.degree() - r.degree());
    if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
    a = std::move(b);
    b = std::move(r);
  }
  acc *= pow_rat(b.coeff(0), a.degree());
  return sign < 0 ? -acc : acc;
}

// Lagrange interpolation through distinct nodes.
inline Poly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
  Poly acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    Poly basis = Poly::one();
    Rat denom = rat(1);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      basis = basis * Poly(std::vector<Rat>{-pts[j].first, rat(1)});
      denom *= (pts[i].first - pts[j].first);
    }
    acc = acc + (pts[i].second / denom) * basis;
  }
  return acc;
}

inline int root_multiplicity(const Poly& p, const Rat& r) {
  if (p.is_zero()) throw std::domain_error("root multiplicity in zero polynomial");
  Poly lin(std::vector<Rat>{-r, rat(1)});
  Poly cur = p;
  int m = 0;
  while (true) {
    PolyDivMod d = poly_divmod(cur, lin);
    if (!d.rem.is_zero()) return m;
    cur = d.quot;
    ++m;
  }
}

namespace detail {

inline int rat_sign(const Rat& r) { return sgn(r); }

inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = poly_mod(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    // positive rescale keeps signs and tames coefficient growth
    Rat s = abs(r.lc());
    chain.push_back((1 / s) * (-r));
  }
  return chain;
}

inline int sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const Poly& q : chain) {
    int s = rat_sign(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace detail

// All rational roots of p, each listed once, in ascending order.
// Sturm isolation plus denominator-divides-leading-coefficient rounding;
// no integer factorization involved.
inline std::vector<Rat> rational_roots(const Poly& p_in) {
  std::vector<Rat> roots;
  if (p_in.is_zero() || p_in.degree() == 0) return roots;
  Poly p = squarefree_part(p_in);
  if (p.coeff(0) == 0) {
    roots.push_back(rat(0));
    p = poly_div_exact(p, Poly::variable());
  }
  if (p.degree() == 0) return roots;

  // integer-primitive rescale
  Int l(1);
  for (int i = 0; i <= p.degree(); ++i) l = lcm(l, den(p.coeff(i)));
  std::vector<Rat> ic(static_cast<size_t>(p.degree()) + 1);
  Int g(0);
  for (int i = 0; i <= p.degree(); ++i) {
    Rat c = p.coeff(i) * Rat(l);
    ic[static_cast<size_t>(i)] = c;
    g = gcd(g, num(c));
  }
  if (g != 0 && g != 1)
    for (auto& c : ic) c /= Rat(g);
  Poly q{std::vector<Rat>(ic)};

  Int an = abs(num(q.lc()));
  Rat bound = rat(1);
  for (int i = 0; i < q.degree(); ++i) {
    Rat t = abs(q.coeff(i) / q.lc());
    if (t > bound) bound = t;
  }
  bound += 1;

  auto chain = detail::sturm_chain(q);
  Rat width_goal = rat(Int(1), Int(2) * an);

  struct Iv {
    Rat lo, hi;
    int nroots;
  };
  std::vector<Iv> stack;
  Rat lo = -bound, hi = bound;
  int total = detail::sturm_variations(chain, lo) - detail::sturm_variations(chain, hi);
  if (total > 0) stack.push_back({lo, hi, total});

  while (!stack.empty()) {
    Iv iv = stack.back();
    stack.pop_back();
    if (iv.nroots == 1 && iv.hi - iv.lo < width_goal) {
      // a rational root here has denominator dividing an, so its scaled
      // numerator is the unique integer in (lo*an, hi*an]
      Rat scaled_lo = iv.lo * Rat(an), scaled_hi = iv.hi * Rat(an);
      Int k = num(scaled_lo) / den(scaled_lo);
      for (Int c = k - 1; c <= k + 2; ++c) {
        Rat cand = rat(c, an);
        if (cand > iv.lo && cand <= iv.hi && q.eval(cand) == 0) {
          roots.push_back(cand);
          break;
        }
      }
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    if (q.eval(mid) == 0) roots.push_back(mid);
    int left = detail::sturm_variations(chain, iv.lo) - detail::sturm_variations(chain, mid);
    int right = iv.nroots - left;
    if (left > 0) stack.push_back({iv.lo, mid, left});
    if (right > 0) stack.push_back({mid, iv.hi, right});
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace detail {

// Quadratic-times-quadratic split of a monic quartic with no rational roots,
// via the resolvent cubic of its depressed form. Empty when irreducible.
inline std::vector<Poly> quartic_split(const Poly& g) {
  Rat t = -g.coeff(3) / 4;
  Poly h = g.shifted(t);  // depressed: y^4 + p y^2 + q y + r
  Rat p = h.coeff(2), q = h.coeff(1), r = h.coeff(0);
  Poly resolvent(std::vector<Rat>{-q * q, p * p - 4 * r, 2 * p, rat(1)});
  for (const Rat& x0 : rational_roots(resolvent)) {
    if (x0 < 0) continue;
    Rat u;
    if (!perfect_root(x0, 2, u)) continue;
    Rat v, w;
    if (u != 0) {
      w = (p + x0 + q / u) / 2;
      v = (p + x0 - q / u) / 2;
    } else {
      Rat disc = p * p - 4 * r, s;
      if (!perfect_root(disc, 2, s)) continue;
      v = (p - s) / 2;
      w = (p + s) / 2;
    }
    if (v * w != r) continue;
    Poly f1(std::vector<Rat>{v, u, rat(1)});
    Poly f2(std::vector<Rat>{w, -u, rat(1)});
    return {f1.shifted(-t), f2.shifted(-t)};
  }
  return {};
}

// Largest k with g(z) = h(z^k); 1 when no decimation applies.
inline int exponent_gcd(const Poly& g) {
  Int k = 0;
  for (int i = 1; i <= g.degree(); ++i)
    if (g.coeff(i) != 0) k = gcd(k, Int(i));
  return static_cast<int>(k.get_si());
}

inline Poly decimate(const Poly& g, int k) {
  std::vector<Rat> c(static_cast<size_t>(g.degree() / k) + 1, rat(0));
  for (int i = 0; i * k <= g.degree(); ++i) c[static_cast<size_t>(i)] = g.coeff(i * k);
  return Poly(c);
}

inline void split_rec(Poly g, std::vector<Poly>& out) {
  for (const Rat& root : rational_roots(g)) {
    Poly lin(std::vector<Rat>{-root, rat(1)});
    out.push_back(lin);
    g = poly_div_exact(g, lin);
  }
  if (g.degree() < 2) return;
  if (g.degree() <= 3) {
    out.push_back(g);
    return;
  }
  int kmax = exponent_gcd(g);
  for (int k = kmax; k >= 2; --k) {
    if (kmax % k != 0) continue;
    std::vector<Poly> hs;
    split_rec(decimate(g, k), hs);
    if (hs.size() < 2) continue;
    Poly zk = Poly::monomial(rat(1), k);
    for (const Poly& h : hs) split_rec(h.compose(zk), out);
    return;
  }
  if (g.degree() == 4) {
    auto qs = quartic_split(g);
    if (!qs.empty()) {
      out.insert(out.end(), qs.begin(), qs.end());
      return;
    }
  }
  out.push_back(g);
}

}  // namespace detail

// Splits a squarefree polynomial into monic factors, sorted by degree then
// coefficients. Rational roots peel off, quartics go through the resolvent
// cubic, and g(z^k) patterns factor through the decimated polynomial; a
// remaining factor of degree >= 5 is returned whole and may still split.
inline std::vector<Poly> split_irreducible_factors(const Poly& f_in) {
  if (f_in.degree() < 1) throw std::invalid_argument("cannot factor a constant");
  std::vector<Poly> out;
  detail::split_rec(f_in.monic(), out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return out;
}

inline std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    std::string mag;
    Rat a = abs(c);
    if (i == 0) {
      mag = rat_str(a);
    } else {
      std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
      mag = (a == 1) ? xs : rat_str(a) + "*" + xs;
    }
    if (first) {
      out += (sgn(c) < 0 ? "-" : "") + mag;
      first = false;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + mag;
    }
  }
  return out;
}

}  // namespace ratorb
