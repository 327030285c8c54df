#pragma once

// Trace functions with values in Z/kZ, at three scales: traceModK on a
// finite square block, traceStructured on a StructuredMatrix, and
// traceRingMatrix on a square matrix over the ring. Scalar k x k blocks
// have trace c*k = 0 mod k, which is what makes the infinite sums finite.

#include "leavitt/blockmat.hpp"
#include "leavitt/checked_int.hpp"

#include <set>
#include <stdexcept>

namespace leavitt {

struct Residue {
  long long value = 0;    // normalized into [0, modulus)
  long long modulus = 1;  // k
  friend bool operator==(const Residue&, const Residue&) = default;
};

inline Residue makeResidue(Int v, long long k) {
  if (k < 1) throw std::invalid_argument("modulus must be >= 1");
  long long r = (v % Int(k)).value();
  if (r < 0) r += k;
  return Residue{r, k};
}

inline Residue operator+(Residue x, Residue y) {
  if (x.modulus != y.modulus) throw std::invalid_argument("residues have different moduli");
  return makeResidue(Int(x.value) + Int(y.value), x.modulus);
}

inline std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value << " (mod " << r.modulus << ")";
}

inline Residue traceModK(const DenseBlock& m, long long k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("traceModK needs a square block");
  return makeResidue(m.trace(), k);
}

// Sum of t_k over the diagonal blocks. Only finitely many can contribute:
// explicit diagonal blocks, plus the isolated diagonal hit of any term
// whose row and column steps differ. A term with e == L and a == b lies
// entirely on the diagonal, but each of its blocks is scalar with trace
// zero mod k, so it adds nothing.
inline Residue traceStructured(const StructuredMatrix& a) {
  const long long k = a.k();
  std::set<long long> candidates;
  for (const auto& [idx, blk] : a.explicitBlocks())
    if (idx.m == idx.n) candidates.insert(idx.m);
  for (const auto& t : a.patterns()) {
    if (t.e == t.L) continue;
    const Int num = Int(t.a) - Int(t.b);
    const Int den = Int(t.e) - Int(t.L);
    if (num % den != 0) continue;
    const Int step = num / den;
    if (step < 0) continue;
    candidates.insert((Int(t.b) + Int(t.e) * step).value());
  }
  Residue total{0, k};
  for (long long m : candidates) total = total + traceModK(blockAt(a, m, m), k);
  return total;
}

}  // namespace leavitt
