#pragma once

// Blocked infinite integer matrices with finite support plus affine scalar
// tails. An element is k (the block size parameter), a finite map of dense
// explicit blocks, and a finite list of PatternTerms; its value is the sum
// of both parts. Block 1 of the row/column partition has side 1, every
// later block has side k. This representation is closed under add, negate,
// mul and transpose, and canonicalize() gives a normal form whose emptiness
// decides equality.

#include "leavitt/arith.hpp"
#include "leavitt/checked_int.hpp"

#include <Eigen/Core>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace leavitt {

using DenseBlock = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

struct BlockIndex {
  long long m = 1;  // block row
  long long n = 1;  // block column
  friend auto operator<=>(const BlockIndex&, const BlockIndex&) = default;
};

// side length of block index m (1 for the first block, k afterwards)
inline long long blockSide(long long k, long long m) { return m == 1 ? 1 : k; }

// first scalar index covered by block m
inline long long blockStartScalar(long long k, long long m) {
  return m == 1 ? 1 : (Int(2) + Int(k) * Int(m - 2)).value();
}

// scalar index -> (block index, offset within the block)
inline std::pair<long long, long long> scalarToBlock(long long k, long long i) {
  if (i < 1) throw std::invalid_argument("scalar index must be >= 1");
  if (i == 1) return {1, 0};
  return {2 + (i - 2) / k, (i - 2) % k};
}

inline bool blockIsZero(const DenseBlock& b) {
  for (Eigen::Index r = 0; r < b.rows(); ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c)
      if (!(b(r, c) == 0)) return false;
  return true;
}

inline bool blocksEqual(const DenseBlock& x, const DenseBlock& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c)
      if (!(x(r, c) == y(r, c))) return false;
  return true;
}

inline DenseBlock scalarBlock(long long k, Int c) {
  DenseBlock b = DenseBlock::Zero(k, k);
  for (long long i = 0; i < k; ++i) b(i, i) = c;
  return b;
}

class StructuredMatrix {
 public:
  explicit StructuredMatrix(long long k) : k_(k) {
    if (k < 1) throw std::invalid_argument("block size parameter k must be >= 1");
  }

  long long k() const { return k_; }
  const std::map<BlockIndex, DenseBlock>& explicitBlocks() const { return blocks_; }
  const std::vector<PatternTerm>& patterns() const { return patterns_; }

  // Adds blk into the explicit block at (m, n); the shape must match the
  // position. All-zero results are dropped from the map.
  void accumulateBlock(long long m, long long n, const DenseBlock& blk) {
    if (m < 1 || n < 1) throw std::invalid_argument("block indices must be >= 1");
    if (blk.rows() != blockSide(k_, m) || blk.cols() != blockSide(k_, n))
      throw std::invalid_argument("explicit block shape does not match its position");
    auto [it, inserted] = blocks_.try_emplace(BlockIndex{m, n}, blk);
    if (!inserted) it->second += blk;
    if (blockIsZero(it->second)) blocks_.erase(it);
  }

  void addPattern(const PatternTerm& t) {
    requireValid(t);
    patterns_.push_back(t);
  }

 private:
  long long k_;
  std::map<BlockIndex, DenseBlock> blocks_;
  std::vector<PatternTerm> patterns_;
};

inline void requireSameK(const StructuredMatrix& a, const StructuredMatrix& b) {
  if (a.k() != b.k()) throw std::invalid_argument("operands have different block size parameters");
}

inline StructuredMatrix zero(long long k) { return StructuredMatrix(k); }

inline StructuredMatrix identity(long long k) {
  StructuredMatrix a(k);
  DenseBlock one(1, 1);
  one(0, 0) = 1;
  a.accumulateBlock(1, 1, one);
  a.addPattern(PatternTerm{2, 1, 2, 1, 1});
  return a;
}

struct Entry {
  long long i = 1;
  long long j = 1;
  long long v = 0;
};

// finitely supported matrix from scalar-entry triples; duplicates sum
inline StructuredMatrix fromEntries(long long k, const std::vector<Entry>& entries) {
  StructuredMatrix a(k);
  std::map<BlockIndex, DenseBlock> acc;
  for (const auto& ent : entries) {
    const auto [m, r] = scalarToBlock(k, ent.i);
    const auto [n, c] = scalarToBlock(k, ent.j);
    auto [it, inserted] =
        acc.try_emplace(BlockIndex{m, n}, DenseBlock::Zero(blockSide(k, m), blockSide(k, n)));
    it->second(r, c) += Int(ent.v);
  }
  for (const auto& [idx, blk] : acc) {
    if (!blockIsZero(blk)) a.accumulateBlock(idx.m, idx.n, blk);
  }
  return a;
}

// step index t with (b + e*t, a + L*t) == (m, n), if the term owns that block
inline std::optional<long long> patternHitAt(const PatternTerm& t, long long m, long long n) {
  if (m < t.b || (m - t.b) % t.e != 0) return std::nullopt;
  const long long step = (m - t.b) / t.e;
  if ((Int(t.a) + Int(t.L) * Int(step)).value() != n) return std::nullopt;
  return step;
}

inline DenseBlock blockAt(const StructuredMatrix& a, long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("block indices must be >= 1");
  const long long k = a.k();
  DenseBlock out = DenseBlock::Zero(blockSide(k, m), blockSide(k, n));
  if (const auto it = a.explicitBlocks().find(BlockIndex{m, n}); it != a.explicitBlocks().end())
    out += it->second;
  if (m >= 2 && n >= 2) {
    for (const auto& t : a.patterns())
      if (patternHitAt(t, m, n)) out += scalarBlock(k, t.c);
  }
  return out;
}

inline Int entryAt(const StructuredMatrix& a, long long i, long long j) {
  const long long k = a.k();
  const auto [m, r] = scalarToBlock(k, i);
  const auto [n, c] = scalarToBlock(k, j);
  Int v = 0;
  if (const auto it = a.explicitBlocks().find(BlockIndex{m, n}); it != a.explicitBlocks().end())
    v += it->second(r, c);
  if (r == c && m >= 2 && n >= 2) {
    for (const auto& t : a.patterns())
      if (patternHitAt(t, m, n)) v += Int(t.c);
  }
  return v;
}

inline StructuredMatrix add(const StructuredMatrix& a, const StructuredMatrix& b) {
  requireSameK(a, b);
  StructuredMatrix out = a;
  for (const auto& [idx, blk] : b.explicitBlocks()) out.accumulateBlock(idx.m, idx.n, blk);
  for (const auto& t : b.patterns()) out.addPattern(t);
  return out;
}

inline StructuredMatrix negate(const StructuredMatrix& a) {
  StructuredMatrix out(a.k());
  for (const auto& [idx, blk] : a.explicitBlocks()) out.accumulateBlock(idx.m, idx.n, -blk);
  for (auto t : a.patterns()) {
    t.c = (-Int(t.c)).value();
    out.addPattern(t);
  }
  return out;
}

inline StructuredMatrix sub(const StructuredMatrix& a, const StructuredMatrix& b) {
  return add(a, negate(b));
}

inline StructuredMatrix scale(const StructuredMatrix& a, Int c) {
  StructuredMatrix out(a.k());
  if (c == 0) return out;
  for (const auto& [idx, blk] : a.explicitBlocks()) out.accumulateBlock(idx.m, idx.n, blk * c);
  for (auto t : a.patterns()) {
    t.c = (Int(t.c) * c).value();
    out.addPattern(t);
  }
  return out;
}

// Product via four parts: explicit x explicit convolves matching blocks,
// explicit x pattern and pattern x explicit meet each explicit block with
// at most one block of each term, and pattern x pattern is composeTerms.
inline StructuredMatrix mul(const StructuredMatrix& a, const StructuredMatrix& b) {
  requireSameK(a, b);
  const long long k = a.k();
  StructuredMatrix out(k);

  for (const auto& [ia, ba] : a.explicitBlocks()) {
    for (auto it = b.explicitBlocks().lower_bound(BlockIndex{ia.n, 1});
         it != b.explicitBlocks().end() && it->first.m == ia.n; ++it) {
      out.accumulateBlock(ia.m, it->first.n, ba * it->second);
    }
    // a block at column p meets a term block at row p
    for (const auto& t : b.patterns()) {
      if (ia.n < t.b || (ia.n - t.b) % t.e != 0) continue;
      const long long step = (ia.n - t.b) / t.e;
      const long long n = (Int(t.a) + Int(t.L) * Int(step)).value();
      out.accumulateBlock(ia.m, n, ba * Int(t.c));
    }
  }
  for (const auto& t : a.patterns()) {
    for (const auto& [ib, bb] : b.explicitBlocks()) {
      if (ib.m < t.a || (ib.m - t.a) % t.L != 0) continue;
      const long long step = (ib.m - t.a) / t.L;
      const long long m = (Int(t.b) + Int(t.e) * Int(step)).value();
      out.accumulateBlock(m, ib.n, bb * Int(t.c));
    }
    for (const auto& u : b.patterns()) {
      if (const auto prod = composeTerms(t, u, k)) out.addPattern(*prod);
    }
  }
  return out;
}

inline StructuredMatrix transpose(const StructuredMatrix& a) {
  StructuredMatrix out(a.k());
  for (const auto& [idx, blk] : a.explicitBlocks())
    out.accumulateBlock(idx.n, idx.m, blk.transpose());
  for (const auto& t : a.patterns()) out.addPattern(transposeTerm(t));
  return out;
}

namespace detail {

// Largest block coordinate of any isolated collision between two terms that
// share the column step S. Terms with equal row steps run on parallel or
// identical lines and never collide in isolation.
inline Int collisionBound(const std::vector<PatternTerm>& terms, Int S) {
  Int bound = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const auto& ti = terms[i];
      const auto& tj = terms[j];
      if ((Int(ti.a) - Int(tj.a)) % S != 0) continue;
      if (ti.e == tj.e) continue;
      const Int lag = (Int(tj.a) - Int(ti.a)) / S;  // u = v + lag
      const Int num = Int(tj.b) - Int(ti.b) - Int(ti.e) * lag;
      const Int den = Int(ti.e) - Int(tj.e);
      if (num % den != 0) continue;
      const Int v = num / den;
      const Int u = v + lag;
      if (v < 0 || u < 0) continue;
      const Int col = Int(ti.a) + S * u;
      const Int row = Int(ti.b) + Int(ti.e) * u;
      bound = std::max(bound, std::max(row, col));
    }
  }
  return bound;
}

}  // namespace detail

// Normal form: refine all terms to the common column step, advance every
// term start past a threshold derived from the data (emitting the skipped
// blocks explicitly), merge terms by (a, L, b, e), and prune zeros. Beyond
// the threshold every surviving term owns its blocks exclusively, so the
// normal form is empty exactly when the matrix is zero.
inline StructuredMatrix canonicalize(const StructuredMatrix& a) {
  const long long k = a.k();
  StructuredMatrix out(k);
  for (const auto& [idx, blk] : a.explicitBlocks()) out.accumulateBlock(idx.m, idx.n, blk);
  if (a.patterns().empty()) return out;

  Int S = 1;
  for (const auto& t : a.patterns()) S = detail::lcmChecked(S, t.L);

  std::vector<PatternTerm> refined;
  for (const auto& t : a.patterns()) {
    const Int reps = S / Int(t.L);
    for (Int r = 0; r < reps; r += 1) {
      PatternTerm s;
      s.a = (Int(t.a) + Int(t.L) * r).value();
      s.L = S.value();
      s.b = (Int(t.b) + Int(t.e) * r).value();
      s.e = (Int(t.e) * reps).value();
      s.c = t.c;
      refined.push_back(s);
    }
  }

  Int threshold = 0;
  for (const auto& [idx, blk] : out.explicitBlocks())
    threshold = std::max(threshold, Int(std::max(idx.m, idx.n)));
  for (const auto& t : refined) threshold = std::max(threshold, Int(std::max(t.a, t.b)));
  threshold = std::max(threshold, detail::collisionBound(refined, S));
  threshold += 1;

  std::map<std::array<long long, 4>, Int> merged;
  for (const auto& t : refined) {
    const Int da = Int(t.a) > threshold ? Int(0) : (threshold - Int(t.a)) / S + 1;
    const Int db = Int(t.b) > threshold ? Int(0) : (threshold - Int(t.b)) / Int(t.e) + 1;
    const Int d = std::max(da, db);
    for (Int j = 0; j < d; j += 1) {
      const Int row = Int(t.b) + Int(t.e) * j;
      const Int col = Int(t.a) + S * j;
      out.accumulateBlock(row.value(), col.value(), scalarBlock(k, t.c));
    }
    const long long aAdv = (Int(t.a) + S * d).value();
    const long long bAdv = (Int(t.b) + Int(t.e) * d).value();
    merged[{aAdv, t.L, bAdv, t.e}] += Int(t.c);
  }
  for (const auto& [key, c] : merged) {
    if (c == 0) continue;
    out.addPattern(PatternTerm{key[0], key[1], key[2], key[3], c.value()});
  }
  return out;
}

inline bool isCanonicalZero(const StructuredMatrix& a) {
  return a.explicitBlocks().empty() && a.patterns().empty();
}

inline bool isZero(const StructuredMatrix& a) { return isCanonicalZero(canonicalize(a)); }

// Exact equality of the represented infinite matrices.
inline bool equals(const StructuredMatrix& a, const StructuredMatrix& b) {
  requireSameK(a, b);
  return isZero(sub(a, b));
}

}  // namespace leavitt
