#ifndef SYMCOH_INTEGER_HPP
#define SYMCOH_INTEGER_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace symcoh {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64_t are stored inline and all arithmetic on them
/// uses overflow-checked machine instructions; on overflow the operation is
/// redone in cpp_int and the result is stored behind an immutable shared
/// pointer.  A value is stored big iff it does not fit in int64_t, so equality
/// of representation is equality of value.
class Integer {
 public:
  Integer() = default;
  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(long long)) {
      small_ = static_cast<long long>(v);
    } else if (v <= static_cast<T>(std::numeric_limits<long long>::max())) {
      small_ = static_cast<long long>(v);
    } else {
      assign(BigInt(v));
    }
  }
  explicit Integer(const BigInt& b) { assign(b); }

  /// Parses an optionally signed decimal literal; returns nullopt if malformed.
  static std::optional<Integer> parse(std::string_view text);

  bool is_small() const { return !big_; }
  bool fits_int64() const { return !big_; }
  std::int64_t to_int64() const;  // throws std::overflow_error when !fits_int64()
  BigInt to_big() const { return big_ ? *big_ : BigInt(small_); }
  std::string to_string() const;

  int sign() const;
  bool is_zero() const { return !big_ && small_ == 0; }

  Integer operator-() const;
  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }
  Integer& operator/=(const Integer& o) { return *this = *this / o; }
  Integer& operator%=(const Integer& o) { return *this = *this % o; }

  friend Integer operator+(const Integer& a, const Integer& b) {
    long long r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(a.to_big() + b.to_big());
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    long long r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(a.to_big() - b.to_big());
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    long long r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(a.to_big() * b.to_big());
  }
  // Truncating division and remainder, matching built-in integer semantics.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

 private:
  void assign(const BigInt& b);

  long long small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

Integer abs(const Integer& a);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
/// Non-negative lcm; lcm(a, 0) = 0.
Integer lcm(const Integer& a, const Integer& b);
/// Floor division; b != 0.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder in [0, |m|) for m != 0; returns a unchanged for m == 0.
Integer mod(const Integer& a, const Integer& m);
/// Exact quotient a / b; throws std::domain_error unless b divides a.
Integer divexact(const Integer& a, const Integer& b);
/// True iff b is a multiple of a (0 divides only 0).
bool divides(const Integer& a, const Integer& b);
Integer factorial(unsigned n);

struct Bezout {
  Integer g;  // gcd(a, b) >= 0
  Integer u;  // u*a + v*b == g
  Integer v;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

// int64 helpers used by the residue ring.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
struct Bezout64 {
  std::int64_t g, u, v;
};
Bezout64 extended_gcd64(std::int64_t a, std::int64_t b);
/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace symcoh

namespace Eigen {
template <>
struct NumTraits<symcoh::Integer> : GenericNumTraits<symcoh::Integer> {
  using Real = symcoh::Integer;
  using NonInteger = symcoh::Integer;
  using Literal = symcoh::Integer;
  using Nested = symcoh::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // SYMCOH_INTEGER_HPP
