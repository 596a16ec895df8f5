#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps values
// canonical (positive denominator, coprime numerator/denominator).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace vecdil {

using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// q - floor(q), always in [0, 1).
Rat frac_part(const Rat& q);

// Serialization as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

// Parses "p" or "p/q" with optional leading '-' on p. Rejects q <= 0,
// whitespace and anything else.
std::optional<Rat> parse_rat(const std::string& text);

std::string vec_str(const RatVec& v);

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec vec_scale(const Rat& t, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

// Scales a nonzero rational vector to its primitive integral form: integral
// entries with gcd 1, first nonzero entry keeping its sign.
RatVec primitive(const RatVec& v);

}  // namespace vecdil
