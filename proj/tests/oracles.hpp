#pragma once

// Test-only oracles and random-value generators. Everything here evaluates
// the library's objects by brute force (set scans, block enumeration,
// convolution over finite supports) and stays independent of the code paths
// it is used to check.

#include "leavitt/arith.hpp"
#include "leavitt/blockmat.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// All elements of the progression up to and including bound.
inline std::vector<long long> scanProgression(const leavitt::Progression& p, long long bound) {
  std::vector<long long> xs;
  for (long long x = p.start; x <= bound; x += p.step) xs.push_back(x);
  return xs;
}

// Brute-force intersection of two progressions on [1, bound]: collect the
// common elements and, when there are at least two, read off start and step.
// Returns nullopt when no common element <= bound exists.
inline std::optional<leavitt::Progression> scanIntersect(const leavitt::Progression& p,
                                                         const leavitt::Progression& q,
                                                         long long bound) {
  const auto xs = scanProgression(p, bound);
  std::set<long long> qs;
  for (long long x : scanProgression(q, bound)) qs.insert(x);
  std::vector<long long> common;
  for (long long x : xs)
    if (qs.count(x)) common.push_back(x);
  if (common.empty()) return std::nullopt;
  long long step = common.size() >= 2 ? common[1] - common[0] : 0;
  for (std::size_t i = 2; i < common.size(); ++i)
    if (common[i] - common[i - 1] != step) throw std::logic_error("scanIntersect: not a progression");
  if (step == 0) step = 1;  // single element seen; any step fits up to the bound
  return leavitt::Progression{common[0], step};
}

// The set of blocks (m, n) -> coefficient of a single pattern term, for all
// blocks with row and column <= bound, by direct enumeration of t.
inline std::map<std::pair<long long, long long>, long long> termBlocks(const leavitt::PatternTerm& t,
                                                                       long long bound) {
  std::map<std::pair<long long, long long>, long long> out;
  for (long long step = 0;; ++step) {
    const long long row = t.b + t.e * step;
    const long long col = t.a + t.L * step;
    if (row > bound && col > bound) break;
    if (row <= bound && col <= bound) out[{row, col}] += t.c;
  }
  return out;
}

// Block-level product of two one-term matrices on blocks with indices
// <= bound: convolve the two enumerated block sets directly.
inline std::map<std::pair<long long, long long>, long long> termProductBlocks(
    const leavitt::PatternTerm& t1, const leavitt::PatternTerm& t2, long long bound) {
  // inner block index p is bounded by the largest column of t1 reachable
  // from a row <= bound plus the symmetric bound for t2
  const long long inner = bound + std::max(t1.a + t1.L * (bound + 2), t2.b + t2.e * (bound + 2));
  const auto b1 = termBlocks(t1, inner);
  const auto b2 = termBlocks(t2, inner);
  std::map<std::pair<long long, long long>, long long> out;
  for (const auto& [mp, c1] : b1)
    for (const auto& [pn, c2] : b2)
      if (mp.second == pn.first && mp.first <= bound && pn.second <= bound)
        out[{mp.first, pn.second}] += c1 * c2;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline long long uniform(std::mt19937_64& g, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(g);
}

inline long long nonzero(std::mt19937_64& g, long long lo, long long hi) {
  long long v = 0;
  while (v == 0) v = uniform(g, lo, hi);
  return v;
}

inline leavitt::Progression randomProgression(std::mt19937_64& g) {
  return {uniform(g, 1, 30), uniform(g, 1, 12)};
}

inline leavitt::PatternTerm randomTerm(std::mt19937_64& g) {
  return {uniform(g, 2, 9), uniform(g, 1, 4), uniform(g, 2, 9), uniform(g, 1, 4), nonzero(g, -5, 5)};
}

inline leavitt::DenseBlock denseFrom(const std::vector<std::vector<long long>>& rows) {
  leavitt::DenseBlock b(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(rows.at(0).size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) b(r, c) = rows[r][c];
  return b;
}

inline leavitt::StructuredMatrix randomStructured(std::mt19937_64& g, long long k,
                                                  int maxBlocks = 4, int maxTerms = 3) {
  leavitt::StructuredMatrix a(k);
  const int nb = static_cast<int>(uniform(g, 0, maxBlocks));
  for (int x = 0; x < nb; ++x) {
    const long long m = uniform(g, 1, 8);
    const long long n = uniform(g, 1, 8);
    leavitt::DenseBlock blk(leavitt::blockSide(k, m), leavitt::blockSide(k, n));
    for (Eigen::Index r = 0; r < blk.rows(); ++r)
      for (Eigen::Index c = 0; c < blk.cols(); ++c) blk(r, c) = uniform(g, -9, 9);
    if (!leavitt::blockIsZero(blk)) a.accumulateBlock(m, n, blk);
  }
  const int nt = static_cast<int>(uniform(g, 0, maxTerms));
  for (int x = 0; x < nt; ++x) a.addPattern(randomTerm(g));
  return a;
}

inline leavitt::StructuredMatrix randomFinitelySupported(std::mt19937_64& g, long long k,
                                                         int maxBlocks = 5) {
  return randomStructured(g, k, maxBlocks, 0);
}

// Scalar columns where row i of the matrix can be nonzero: the columns of
// every explicit block in the same block row, plus the one block each
// pattern term places in that block row.
inline std::vector<long long> rowSupportCols(const leavitt::StructuredMatrix& a, long long i) {
  const long long k = a.k();
  const auto [blockRow, off] = leavitt::scalarToBlock(k, i);
  (void)off;
  std::set<long long> cols;
  const auto addBlockCols = [&](long long n) {
    const long long s = leavitt::blockStartScalar(k, n);
    for (long long c = 0; c < leavitt::blockSide(k, n); ++c) cols.insert(s + c);
  };
  for (auto it = a.explicitBlocks().lower_bound(leavitt::BlockIndex{blockRow, 1});
       it != a.explicitBlocks().end() && it->first.m == blockRow; ++it)
    addBlockCols(it->first.n);
  for (const auto& t : a.patterns()) {
    if (blockRow < t.b || (blockRow - t.b) % t.e != 0) continue;
    addBlockCols(t.a + t.L * ((blockRow - t.b) / t.e));
  }
  return {cols.begin(), cols.end()};
}

// Brute-force product entry: the convolution over the finite support of
// row i of a, evaluated purely through entryAt.
inline leavitt::Int bruteMulEntry(const leavitt::StructuredMatrix& a,
                                  const leavitt::StructuredMatrix& b, long long i, long long j) {
  leavitt::Int acc = 0;
  for (long long p : rowSupportCols(a, i)) acc += entryAt(a, i, p) * entryAt(b, p, j);
  return acc;
}

// Brute-force trace: sum t_k over every diagonal block up to blockBound.
// Valid whenever all the matrix data (explicit blocks, term starts and
// isolated crossings) lives below the bound, since every diagonal block
// beyond it is scalar or zero and contributes 0 mod k.
inline long long bruteTraceValue(const leavitt::StructuredMatrix& a, long long blockBound) {
  leavitt::Int sum = 0;
  for (long long m = 1; m <= blockBound; ++m) sum += blockAt(a, m, m).trace();
  long long r = (sum % leavitt::Int(a.k())).value();
  if (r < 0) r += a.k();
  return r;
}

inline leavitt::DenseBlock randomDense(std::mt19937_64& g, long long rows, long long cols) {
  leavitt::DenseBlock m(rows, cols);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = uniform(g, -20, 20);
  return m;
}

}  // namespace oracle

#include "leavitt/algebra.hpp"

namespace oracle {

inline leavitt::Word randomWord(std::mt19937_64& g, long long p, long long maxLen) {
  leavitt::Word w(static_cast<std::size_t>(uniform(g, 0, maxLen)));
  for (auto& gen : w)
    gen = {uniform(g, 0, 1) == 0 ? leavitt::GenKind::X : leavitt::GenKind::Y, uniform(g, 1, p)};
  return w;
}

inline leavitt::NcPoly randomPoly(std::mt19937_64& g, long long p, long long maxLen,
                                  long long maxTerms = 3) {
  leavitt::NcPoly u(p);
  const long long nt = uniform(g, 1, maxTerms);
  for (long long t = 0; t < nt; ++t) u.addTerm(randomWord(g, p, maxLen), nonzero(g, -3, 3));
  return u;
}

}  // namespace oracle
