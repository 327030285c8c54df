#pragma once

// Exact 64-bit integer scalar. Every +, -, * is overflow-checked and throws
// OverflowError instead of wrapping; all arithmetic in the library goes
// through this type, including the entries of Eigen dense blocks.

#include <Eigen/Core>

#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace leavitt {

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("64-bit integer overflow in exact arithmetic") {}
};

class Int {
 public:
  constexpr Int() = default;
  constexpr Int(long long v) : v_(v) {}  // implicit: integer literals flow in

  constexpr long long value() const { return v_; }

  friend Int operator+(Int a, Int b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return Int(r);
  }
  friend Int operator-(Int a, Int b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return Int(r);
  }
  friend Int operator*(Int a, Int b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return Int(r);
  }
  // truncating division; callers in arith only divide exactly
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (a.v_ == std::numeric_limits<long long>::min() && b.v_ == -1) throw OverflowError();
    return Int(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("remainder by zero");
    if (a.v_ == std::numeric_limits<long long>::min() && b.v_ == -1) return Int(0);
    return Int(a.v_ % b.v_);
  }

  Int operator-() const { return Int(0) - *this; }
  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Int a, Int b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Int a) { return os << a.v_; }

 private:
  long long v_ = 0;
};

}  // namespace leavitt

// Glue so dense blocks can be Eigen matrices over Int.
namespace Eigen {

template <>
struct NumTraits<leavitt::Int> : GenericNumTraits<leavitt::Int> {
  typedef leavitt::Int Real;
  typedef leavitt::Int NonInteger;
  typedef leavitt::Int Nested;
  typedef leavitt::Int Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline leavitt::Int highest() { return std::numeric_limits<long long>::max(); }
  static inline leavitt::Int lowest() { return std::numeric_limits<long long>::min(); }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
