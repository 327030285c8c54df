#pragma once

// Finite matrices with StructuredMatrix entries, all sharing the same block
// size parameter k. Indices are 0-based in the API.

#include "leavitt/blockmat.hpp"
#include "leavitt/modtrace.hpp"

#include <stdexcept>
#include <vector>

namespace leavitt {

class RingMatrix {
 public:
  RingMatrix(long long k, long long rows, long long cols)
      : k_(k), rows_(rows), cols_(cols), entries_(checkedSize(rows, cols), zero(k)) {
    if (k < 1) throw std::invalid_argument("block size parameter k must be >= 1");
  }

  long long k() const { return k_; }
  long long rows() const { return rows_; }
  long long cols() const { return cols_; }

  const StructuredMatrix& at(long long i, long long j) const { return entries_[index(i, j)]; }

  void set(long long i, long long j, StructuredMatrix v) {
    if (v.k() != k_) throw std::invalid_argument("entry has a different block size parameter");
    entries_[index(i, j)] = std::move(v);
  }

 private:
  static std::size_t checkedSize(long long rows, long long cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
    return static_cast<std::size_t>(rows * cols);
  }
  std::size_t index(long long i, long long j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("entry index out of range");
    return static_cast<std::size_t>(i * cols_ + j);
  }

  long long k_;
  long long rows_;
  long long cols_;
  std::vector<StructuredMatrix> entries_;
};

inline RingMatrix rmZero(long long k, long long rows, long long cols) {
  return RingMatrix(k, rows, cols);
}

inline RingMatrix rmIdentity(long long k, long long d) {
  RingMatrix m(k, d, d);
  for (long long i = 0; i < d; ++i) m.set(i, i, identity(k));
  return m;
}

inline void requireSameShape(const RingMatrix& x, const RingMatrix& y) {
  if (x.k() != y.k() || x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("ring matrices have different shapes or parameters");
}

inline RingMatrix rmAdd(const RingMatrix& x, const RingMatrix& y) {
  requireSameShape(x, y);
  RingMatrix out(x.k(), x.rows(), x.cols());
  for (long long i = 0; i < x.rows(); ++i)
    for (long long j = 0; j < x.cols(); ++j) out.set(i, j, add(x.at(i, j), y.at(i, j)));
  return out;
}

// Entries are canonicalized after the product to keep repeated witness
// compositions small.
inline RingMatrix rmMul(const RingMatrix& x, const RingMatrix& y) {
  if (x.k() != y.k()) throw std::invalid_argument("ring matrices have different block size parameters");
  if (x.cols() != y.rows()) throw std::invalid_argument("ring matrix shapes are not conformable");
  RingMatrix out(x.k(), x.rows(), y.cols());
  for (long long i = 0; i < x.rows(); ++i) {
    for (long long j = 0; j < y.cols(); ++j) {
      StructuredMatrix acc = zero(x.k());
      for (long long p = 0; p < x.cols(); ++p) acc = add(acc, mul(x.at(i, p), y.at(p, j)));
      out.set(i, j, canonicalize(acc));
    }
  }
  return out;
}

inline bool rmEquals(const RingMatrix& x, const RingMatrix& y) {
  requireSameShape(x, y);
  for (long long i = 0; i < x.rows(); ++i)
    for (long long j = 0; j < x.cols(); ++j)
      if (!equals(x.at(i, j), y.at(i, j))) return false;
  return true;
}

inline Residue traceRingMatrix(const RingMatrix& w) {
  if (w.rows() != w.cols()) throw std::invalid_argument("traceRingMatrix needs a square matrix");
  Residue total{0, w.k()};
  for (long long i = 0; i < w.rows(); ++i) total = total + traceStructured(w.at(i, i));
  return total;
}

}  // namespace leavitt
