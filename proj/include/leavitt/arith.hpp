#pragma once

// Exact arithmetic on arithmetic progressions and affine-progression block
// families: intersection, composition and transposition, all via linear
// congruence solving over checked integers. No floating point anywhere.

#include "leavitt/checked_int.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace leavitt {

// The infinite set {start + step*t : t >= 0} of block indices.
struct Progression {
  long long start = 1;
  long long step = 1;
  friend bool operator==(const Progression&, const Progression&) = default;
};

// One affine family of scalar blocks: c*I_k at block (b + e*t, a + L*t) for
// every t >= 0. Column indices run over {a + L*t}, row indices over
// {b + e*t}; both are >= 2, so pattern blocks are always k x k.
struct PatternTerm {
  long long a = 2;  // first block column
  long long L = 1;  // column step
  long long b = 2;  // first block row
  long long e = 1;  // row step
  long long c = 1;  // scalar coefficient, nonzero
  friend bool operator==(const PatternTerm&, const PatternTerm&) = default;
};

inline void requireValid(const Progression& p) {
  if (p.start < 1 || p.step < 1) throw std::invalid_argument("progression needs start >= 1 and step >= 1");
}

inline void requireValid(const PatternTerm& t) {
  if (t.a < 2 || t.b < 2) throw std::invalid_argument("pattern term needs a >= 2 and b >= 2");
  if (t.L < 1 || t.e < 1) throw std::invalid_argument("pattern term needs L >= 1 and e >= 1");
  if (t.c == 0) throw std::invalid_argument("pattern term needs c != 0");
}

namespace detail {

// g = gcd(a, b) together with x, y such that a*x + b*y = g; a, b >= 0.
inline long long egcd(long long a, long long b, long long& x, long long& y) {
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const long long q = a / b;
    const long long r = a - q * b;
    a = b;
    b = r;
    const long long nx = x0 - q * x1;
    const long long ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  x = x0;
  y = y0;
  return a;
}

// inverse of a modulo m (gcd(a, m) = 1, m >= 1), normalized into [0, m)
inline long long invMod(long long a, long long m) {
  if (m == 1) return 0;
  a %= m;
  if (a < 0) a += m;
  long long x, y;
  const long long g = egcd(a, m, x, y);
  if (g != 1) throw std::logic_error("invMod: arguments not coprime");
  x %= m;
  if (x < 0) x += m;
  return x;
}

inline Int lcmChecked(Int a, Int b) {
  const long long g = std::gcd(a.value(), b.value());
  return a / Int(g) * b;
}

}  // namespace detail

inline bool contains(const Progression& p, long long x) {
  return x >= p.start && (x - p.start) % p.step == 0;
}

// t >= 0 with start + step*t = x, when x lies in the progression
inline std::optional<long long> indexIn(const Progression& p, long long x) {
  if (!contains(p, x)) return std::nullopt;
  return (x - p.start) / p.step;
}

// Set intersection of two progressions. Nonempty intersections are again a
// single progression: step = lcm of the two steps, start = the smallest
// simultaneous solution of the two congruences that lies in both sets.
inline std::optional<Progression> intersectProgressions(const Progression& p, const Progression& q) {
  requireValid(p);
  requireValid(q);
  const long long g = std::gcd(p.step, q.step);
  const Int diff = Int(q.start) - Int(p.start);
  if ((diff % Int(g)).value() != 0) return std::nullopt;
  const Int lcm = detail::lcmChecked(p.step, q.step);
  const long long m2 = q.step / g;
  long long t = ((diff / Int(g)) % Int(m2)).value();
  if (t < 0) t += m2;
  const long long inv = detail::invMod(p.step / g, m2);
  const long long w = ((Int(t) * Int(inv)) % Int(m2)).value();
  Int x0 = Int(p.start) + Int(p.step) * Int(w);
  const Int lo = std::max(p.start, q.start);
  if (x0 < lo) {
    const Int d = (lo - x0 + lcm - Int(1)) / lcm;
    x0 += d * lcm;
  }
  return Progression{x0.value(), lcm.value()};
}

// Matrix product of two one-term pattern matrices. A block of t1 at column
// p meets a block of t2 at row p exactly when p lies in both progressions
// {a1 + L1*s} and {b2 + e2*t}; the matching (s, t) pairs form a single
// truncated progression, so the product is one term with coefficient c1*c2,
// or nothing at all.
inline std::optional<PatternTerm> composeTerms(const PatternTerm& t1, const PatternTerm& t2, long long k) {
  requireValid(t1);
  requireValid(t2);
  if (k < 1) throw std::invalid_argument("composeTerms needs k >= 1");
  const auto meet = intersectProgressions({t1.a, t1.L}, {t2.b, t2.e});
  if (!meet) return std::nullopt;
  const Int x0 = meet->start;
  const Int S = meet->step;
  const Int s0 = (x0 - Int(t1.a)) / Int(t1.L);
  const Int u0 = (x0 - Int(t2.b)) / Int(t2.e);
  PatternTerm r;
  r.b = (Int(t1.b) + Int(t1.e) * s0).value();
  r.e = (Int(t1.e) * (S / Int(t1.L))).value();
  r.a = (Int(t2.a) + Int(t2.L) * u0).value();
  r.L = (Int(t2.L) * (S / Int(t2.e))).value();
  const Int c = Int(t1.c) * Int(t2.c);
  r.c = c.value();
  return r;
}

// Transpose swaps the row and column progressions; the coefficient is kept.
inline PatternTerm transposeTerm(const PatternTerm& t) {
  requireValid(t);
  return PatternTerm{t.b, t.e, t.a, t.L, t.c};
}

}  // namespace leavitt
