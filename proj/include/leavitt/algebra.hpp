#pragma once

// The Leavitt ring L_p: integer polynomials in the noncommuting variables
// x_1..x_p, y_1..y_p, reduced modulo the relations
//
//   sum_i x_i y_i = 1        and        y_i x_j = delta_ij,
//
// oriented as rewrite rules y_i x_j -> delta_ij and
// x_p y_p -> 1 - sum_{i<p} x_i y_i. A normal word contains no subword
// y_i x_j and no subword x_p y_p. The concrete 1-preserving homomorphism
// into the block matrix ring with parameter p-1 sends x_i and y_i to the
// column-selection matrices of splitIso.

#include "leavitt/blockmat.hpp"
#include "leavitt/checked_int.hpp"
#include "leavitt/witness.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

namespace leavitt {

enum class GenKind { X = 0, Y = 1 };

struct Generator {
  GenKind kind = GenKind::X;
  long long index = 1;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;  // empty word is the monomial 1

// length first, then lexicographic with x_1 < ... < x_p < y_1 < ... < y_p
struct WordLess {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }
};

class NcPoly {
 public:
  explicit NcPoly(long long p) : p_(p) {
    if (p < 1) throw std::invalid_argument("number of generator pairs must be >= 1");
  }

  static NcPoly constant(long long p, Int c) {
    NcPoly u(p);
    u.addTerm({}, c);
    return u;
  }
  static NcPoly fromGenerator(long long p, Generator g) {
    NcPoly u(p);
    u.addTerm({g}, 1);
    return u;
  }

  long long p() const { return p_; }
  const std::map<Word, Int, WordLess>& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  void addTerm(const Word& w, Int c) {
    for (const auto& g : w)
      if (g.index < 1 || g.index > p_)
        throw std::invalid_argument("generator index out of range");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const NcPoly& u, const NcPoly& v) {
    return u.p_ == v.p_ && u.terms_ == v.terms_;
  }

 private:
  long long p_;
  std::map<Word, Int, WordLess> terms_;
};

inline void requireSameP(const NcPoly& u, const NcPoly& v) {
  if (u.p() != v.p()) throw std::invalid_argument("polynomials have different generator counts");
}

inline NcPoly polyAdd(const NcPoly& u, const NcPoly& v) {
  requireSameP(u, v);
  NcPoly out = u;
  for (const auto& [w, c] : v.terms()) out.addTerm(w, c);
  return out;
}

inline NcPoly polyNeg(const NcPoly& u) {
  NcPoly out(u.p());
  for (const auto& [w, c] : u.terms()) out.addTerm(w, -c);
  return out;
}

inline NcPoly polySub(const NcPoly& u, const NcPoly& v) { return polyAdd(u, polyNeg(v)); }

// bilinear extension of word concatenation; no reduction applied
inline NcPoly polyMul(const NcPoly& u, const NcPoly& v) {
  requireSameP(u, v);
  NcPoly out(u.p());
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      out.addTerm(w, cu * cv);
    }
  }
  return out;
}

inline NcPoly polyPow(const NcPoly& u, long long n) {
  if (n < 0) throw std::invalid_argument("negative powers are not defined here");
  NcPoly out = NcPoly::constant(u.p(), 1);
  for (long long i = 0; i < n; ++i) out = polyMul(out, u);
  return out;
}

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct RewriteLimits {
  std::size_t maxTerms = 10000;
  std::size_t maxWordLength = 64;
};

enum class RewriteOrder { Leftmost, Rightmost };

inline bool isNormalWord(const Word& w, long long p) {
  for (std::size_t q = 0; q + 1 < w.size(); ++q) {
    if (w[q].kind == GenKind::Y && w[q + 1].kind == GenKind::X) return false;
    if (w[q].kind == GenKind::X && w[q].index == p && w[q + 1].kind == GenKind::Y &&
        w[q + 1].index == p)
      return false;
  }
  return true;
}

namespace detail {

inline bool redexAt(const Word& w, long long p, std::size_t q) {
  if (w[q].kind == GenKind::Y && w[q + 1].kind == GenKind::X) return true;
  return w[q].kind == GenKind::X && w[q].index == p && w[q + 1].kind == GenKind::Y &&
         w[q + 1].index == p;
}

inline Word erasedAt(const Word& w, std::size_t q) {
  Word v;
  v.reserve(w.size() - 2);
  v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(q));
  v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(q) + 2, w.end());
  return v;
}

}  // namespace detail

// Exhaustively applies the oriented rules until no forbidden subword
// remains. Rewriting terminates (each step shortens the word or replaces
// x_p y_p by a smaller-indexed pair), but the term count can grow first,
// so a budget guards against blowup; exceeding it is a loud error.
inline NcPoly normalForm(const NcPoly& u, RewriteLimits lim = {},
                         RewriteOrder order = RewriteOrder::Leftmost) {
  const long long p = u.p();
  NcPoly out(p);
  std::vector<std::pair<Word, Int>> work(u.terms().begin(), u.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (w.size() > lim.maxWordLength)
      throw ResourceError("rewrite word length budget exceeded");

    std::size_t redex = 0;
    bool found = false;
    if (w.size() >= 2) {
      if (order == RewriteOrder::Leftmost) {
        for (std::size_t q = 0; q + 1 < w.size(); ++q)
          if (detail::redexAt(w, p, q)) {
            redex = q;
            found = true;
            break;
          }
      } else {
        for (std::size_t q = w.size() - 1; q-- > 0;)
          if (detail::redexAt(w, p, q)) {
            redex = q;
            found = true;
            break;
          }
      }
    }
    if (!found) {
      out.addTerm(w, c);
      continue;
    }

    if (w[redex].kind == GenKind::Y) {
      // y_i x_j -> delta_ij
      if (w[redex].index == w[redex + 1].index) work.emplace_back(detail::erasedAt(w, redex), c);
    } else {
      // x_p y_p -> 1 - sum_{i < p} x_i y_i
      work.emplace_back(detail::erasedAt(w, redex), c);
      for (long long i = 1; i < p; ++i) {
        Word v = w;
        v[redex] = Generator{GenKind::X, i};
        v[redex + 1] = Generator{GenKind::Y, i};
        work.emplace_back(std::move(v), -c);
      }
    }
    if (work.size() + out.termCount() > lim.maxTerms)
      throw ResourceError("rewrite term budget exceeded");
  }
  return out;
}

// Images of the generators under the 1-preserving homomorphism into the
// block matrix ring with parameter k = p - 1: x_i and y_i go to the i-th
// column-selection matrix of splitIso and its transpose. The defining
// relations are re-checked on the images before returning.
inline std::map<Generator, StructuredMatrix> leavittGenerators(long long p) {
  if (p < 2) throw std::invalid_argument("the matrix model needs p >= 2");
  const long long k = p - 1;
  const auto [x, y] = splitIso(k);
  std::map<Generator, StructuredMatrix> images;
  for (long long i = 1; i <= p; ++i) {
    images.emplace(Generator{GenKind::X, i}, x.at(0, i - 1));
    images.emplace(Generator{GenKind::Y, i}, y.at(i - 1, 0));
  }
  StructuredMatrix sum = zero(k);
  for (long long i = 1; i <= p; ++i)
    sum = add(sum, mul(images.at({GenKind::X, i}), images.at({GenKind::Y, i})));
  if (!equals(sum, identity(k)))
    throw InternalCheckError("leavittGenerators: sum x_i y_i does not map to the identity");
  for (long long i = 1; i <= p; ++i)
    for (long long j = 1; j <= p; ++j) {
      const auto prod = mul(images.at({GenKind::Y, i}), images.at({GenKind::X, j}));
      if (!equals(prod, i == j ? identity(k) : zero(k)))
        throw InternalCheckError("leavittGenerators: y_i x_j does not map to delta_ij");
    }
  return images;
}

// substitute the generator images and evaluate; the result is canonicalized
inline StructuredMatrix evalHom(const NcPoly& u) {
  const long long p = u.p();
  if (p < 2) throw std::invalid_argument("evalHom needs p >= 2");
  const auto images = leavittGenerators(p);
  const long long k = p - 1;
  StructuredMatrix acc = zero(k);
  for (const auto& [w, c] : u.terms()) {
    StructuredMatrix prod = identity(k);
    for (const auto& g : w) prod = mul(prod, images.at(g));
    acc = add(acc, scale(prod, c));
  }
  return canonicalize(acc);
}

}  // namespace leavitt
