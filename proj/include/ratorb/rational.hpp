// SPDX-License-Identifier: Apache-2.0
// Exact big-rational scalars. GMP supplies the arithmetic; everything here
// keeps values canonical (reduced, positive denominator).
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ratorb {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" with optional sign.
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline const Int num(const Rat& r) { return r.get_num(); }
inline const Int den(const Rat& r) { return r.get_den(); }

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// b^e with integer e, e < 0 allowed for nonzero b.
inline Rat pow_rat(const Rat& b, long e) {
  if (e == 0) return rat(1);
  if (b == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return rat(0);
  }
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r = rat(pow_int(num(b), a), pow_int(den(b), a));
  if (e < 0) r = 1 / r;
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer too large for long");
  return v.get_si();
}

// Exact integer k-th root test: returns true and sets root when v = root^k.
inline bool perfect_root(const Int& v, unsigned long k, Int& root) {
  if (k == 0) return false;
  if (v < 0 && k % 2 == 0) return false;
  Int a = abs(v);
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
  if (!exact) return false;
  root = (v < 0) ? Int(-r) : r;
  return true;
}

inline bool perfect_root(const Rat& v, unsigned long k, Rat& root) {
  Int rn, rd;
  if (!perfect_root(num(v), k, rn)) return false;
  if (!perfect_root(den(v), k, rd)) return false;
  root = rat(rn, rd);
  return true;
}

}  // namespace ratorb
