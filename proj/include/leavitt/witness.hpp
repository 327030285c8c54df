#pragma once

// The column-splitting isomorphism and the witness pairs it generates.
//
// splitApply sends A to (A_1, ..., A_{k+1}): the first column of A_l is
// column l of A, and block column n >= 2 of A_l is block column
// l + 2 + (k+1)(n-2) of A. Every block column of A lands in exactly one
// image, which is why the map is bijective. splitIso packages the same map
// as a matrix pair X (1 x (k+1)), Y ((k+1) x 1) with XY = I_1 and
// YX = I_{k+1}; chaining the step one coordinate at a time produces a
// witness pair for any m congruent to n mod k.

#include "leavitt/arith.hpp"
#include "leavitt/blockmat.hpp"
#include "leavitt/modtrace.hpp"
#include "leavitt/ringmat.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace leavitt {

// a construction-time self-check failed; indicates a bug, not bad input
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

// block column of A feeding block column n of image l (n >= 2, 1-based l)
inline long long splitSourceBlockColumn(long long k, long long l, long long n) {
  return (Int(l) + 2 + Int(k + 1) * Int(n - 2)).value();
}

// where block column p >= 3 of A lands: image l, block column n
inline std::pair<long long, long long> splitTargetOfBlockColumn(long long k, long long p) {
  const long long l = (p - 3) % (k + 1) + 1;
  const long long n = (p - (l + 2)) / (k + 1) + 2;
  return {l, n};
}

}  // namespace detail

inline std::vector<StructuredMatrix> splitApply(const StructuredMatrix& a) {
  const long long k = a.k();
  std::vector<StructuredMatrix> images(static_cast<std::size_t>(k + 1), zero(k));

  for (const auto& [idx, blk] : a.explicitBlocks()) {
    if (idx.n == 1) {
      // column 1 of A is the first column of A_1
      images[0].accumulateBlock(idx.m, 1, blk);
    } else if (idx.n == 2) {
      // scalar columns 2..k+1 are the first columns of A_2..A_{k+1}
      for (long long off = 0; off < k; ++off) {
        const DenseBlock col = blk.col(off);
        if (!blockIsZero(col)) images[static_cast<std::size_t>(off + 1)].accumulateBlock(idx.m, 1, col);
      }
    } else {
      const auto [l, n] = detail::splitTargetOfBlockColumn(k, idx.n);
      images[static_cast<std::size_t>(l - 1)].accumulateBlock(idx.m, n, blk);
    }
  }

  for (const auto& t : a.patterns()) {
    long long tMin = 0;
    if (t.a == 2) {
      // the t = 0 block sits in block column 2 and splits scalar-wise
      for (long long off = 0; off < k; ++off) {
        DenseBlock col = DenseBlock::Zero(k, 1);
        col(off, 0) = Int(t.c);
        images[static_cast<std::size_t>(off + 1)].accumulateBlock(t.b, 1, col);
      }
      tMin = 1;
    }
    // remaining columns are >= 3; split the column progression by its
    // residue class mod k+1 and reindex each class affinely
    const Progression cols{(Int(t.a) + Int(t.L) * Int(tMin)).value(), t.L};
    for (long long l = 1; l <= k + 1; ++l) {
      const auto meet = intersectProgressions(cols, Progression{l + 2, k + 1});
      if (!meet) continue;
      const long long t1 = *indexIn(Progression{t.a, t.L}, meet->start);
      PatternTerm img;
      img.a = ((Int(meet->start) - Int(l) - 2) / Int(k + 1) + 2).value();
      img.L = meet->step / (k + 1);
      img.b = (Int(t.b) + Int(t.e) * Int(t1)).value();
      img.e = (Int(t.e) * Int(meet->step / t.L)).value();
      img.c = t.c;
      images[static_cast<std::size_t>(l - 1)].addPattern(img);
    }
  }
  return images;
}

// The pair (X, Y) with mul(A, X_l) = splitApply(A)[l], Y_l = transpose(X_l).
// Each X_l places column l of A into column 1 and carries one pattern term
// for the affine block-column map; its scalar columns are distinct unit
// vectors, so transposition inverts it.
inline std::pair<RingMatrix, RingMatrix> splitIso(long long k) {
  if (k < 1) throw std::invalid_argument("splitIso needs k >= 1");
  RingMatrix x(k, 1, k + 1);
  RingMatrix y(k, k + 1, 1);
  for (long long l = 1; l <= k + 1; ++l) {
    StructuredMatrix sel(k);
    if (l == 1) {
      DenseBlock one(1, 1);
      one(0, 0) = 1;
      sel.accumulateBlock(1, 1, one);
    } else {
      DenseBlock col = DenseBlock::Zero(k, 1);
      col(l - 2, 0) = 1;
      sel.accumulateBlock(2, 1, col);
    }
    sel.addPattern(PatternTerm{2, 1, l + 2, k + 1, 1});
    x.set(0, l - 1, sel);
    y.set(l - 1, 0, transpose(sel));
  }
  if (!rmEquals(rmMul(x, y), rmIdentity(k, 1)) || !rmEquals(rmMul(y, x), rmIdentity(k, k + 1)))
    throw InternalCheckError("splitIso: selection matrices fail the isomorphism identities");
  return {std::move(x), std::move(y)};
}

struct WitnessPair {
  long long k = 1;
  long long m = 1;
  long long n = 1;
  long long steps = 0;  // |m - n| / k
  RingMatrix x;         // m x n
  RingMatrix y;         // n x m
};

// certificate that no witness pair can exist: the two identity traces differ
struct TraceObstruction {
  long long k = 1;
  long long m = 1;
  long long n = 1;
  Residue traceIdentityM;
  Residue traceIdentityN;
};

using WitnessResult = std::variant<WitnessPair, TraceObstruction>;

namespace detail {

// the step m -> m + k: split the first coordinate, keep the rest
inline std::pair<RingMatrix, RingMatrix> stepMatrices(long long k, long long m) {
  const auto [sx, sy] = splitIso(k);
  RingMatrix s(k, m, m + k);
  RingMatrix t(k, m + k, m);
  for (long long l = 0; l <= k; ++l) {
    s.set(0, l, sx.at(0, l));
    t.set(l, 0, sy.at(l, 0));
  }
  for (long long i = 1; i < m; ++i) {
    s.set(i, k + i, identity(k));
    t.set(k + i, i, identity(k));
  }
  return {std::move(s), std::move(t)};
}

}  // namespace detail

inline WitnessResult witnessPair(long long k, long long m, long long n) {
  if (k < 1 || m < 1 || n < 1) throw std::invalid_argument("witnessPair needs k, m, n >= 1");
  if (m % k != n % k) {
    return TraceObstruction{k, m, n, traceRingMatrix(rmIdentity(k, m)),
                            traceRingMatrix(rmIdentity(k, n))};
  }
  const long long lo = std::min(m, n);
  const long long hi = std::max(m, n);
  const long long steps = (hi - lo) / k;

  RingMatrix up = rmIdentity(k, lo);    // lo x hi after the chain
  RingMatrix down = rmIdentity(k, lo);  // hi x lo
  for (long long j = 0; j < steps; ++j) {
    auto [s, t] = detail::stepMatrices(k, lo + j * k);
    up = j == 0 ? s : rmMul(up, s);
    down = j == 0 ? std::move(t) : rmMul(t, down);
  }

  WitnessPair w{k, m, n, steps, m <= n ? std::move(up) : std::move(down),
                m <= n ? std::move(down) : std::move(up)};
  if (!rmEquals(rmMul(w.x, w.y), rmIdentity(k, m)) ||
      !rmEquals(rmMul(w.y, w.x), rmIdentity(k, n)))
    throw InternalCheckError("witnessPair: chained step matrices fail XY = I or YX = I");
  return w;
}

struct VerifyReport {
  bool pass = false;
  bool xyIsIdentity = false;
  bool yxIsIdentity = false;
  Residue traceIdentityM;
  Residue traceXY;
  Residue traceYX;
  Residue traceIdentityN;
  std::string failureDetail;  // empty when passing
};

// Recomputes both products, compares them with the identities, and reports
// the four-term trace chain; failures are reported, never thrown.
inline VerifyReport verifyWitness(const WitnessPair& w) {
  VerifyReport r;
  if (w.x.rows() != w.m || w.x.cols() != w.n || w.y.rows() != w.n || w.y.cols() != w.m ||
      w.x.k() != w.k || w.y.k() != w.k) {
    r.failureDetail = "witness matrices do not have shapes (m x n, n x m) over the stated k";
    return r;
  }
  const RingMatrix xy = rmMul(w.x, w.y);
  const RingMatrix yx = rmMul(w.y, w.x);
  const RingMatrix idM = rmIdentity(w.k, w.m);
  const RingMatrix idN = rmIdentity(w.k, w.n);
  r.traceIdentityM = traceRingMatrix(idM);
  r.traceXY = traceRingMatrix(xy);
  r.traceYX = traceRingMatrix(yx);
  r.traceIdentityN = traceRingMatrix(idN);
  r.xyIsIdentity = rmEquals(xy, idM);
  r.yxIsIdentity = rmEquals(yx, idN);
  const auto firstMismatch = [](const RingMatrix& got, const RingMatrix& want, const char* name,
                                std::string& out) {
    for (long long i = 0; i < got.rows(); ++i)
      for (long long j = 0; j < got.cols(); ++j)
        if (!equals(got.at(i, j), want.at(i, j))) {
          std::ostringstream os;
          os << name << " entry (" << (i + 1) << ", " << (j + 1) << ") differs from the identity";
          out = os.str();
          return;
        }
  };
  if (!r.xyIsIdentity) firstMismatch(xy, idM, "XY", r.failureDetail);
  else if (!r.yxIsIdentity) firstMismatch(yx, idN, "YX", r.failureDetail);
  r.pass = r.xyIsIdentity && r.yxIsIdentity && r.traceIdentityM == r.traceXY &&
           r.traceXY == r.traceYX && r.traceYX == r.traceIdentityN;
  return r;
}

}  // namespace leavitt
