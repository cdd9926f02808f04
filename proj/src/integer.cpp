#include "symcoh/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace symcoh {

namespace {

constexpr long long kMin = std::numeric_limits<long long>::min();
constexpr long long kMax = std::numeric_limits<long long>::max();

}  // namespace

void Integer::assign(const BigInt& b) {
  if (b >= kMin && b <= kMax) {
    small_ = static_cast<long long>(b);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_shared<const BigInt>(b);
  }
}

std::optional<Integer> Integer::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  BigInt value;
  for (std::size_t i = start; i < text.size(); ++i) {
    value = value * 10 + (text[i] - '0');
  }
  if (text[0] == '-') value = -value;
  return Integer(value);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("Integer does not fit in int64: " + to_string());
  return small_;
}

std::string Integer::to_string() const { return big_ ? big_->str() : std::to_string(small_); }

int Integer::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

Integer Integer::operator-() const {
  if (!big_ && small_ != kMin) return Integer(-small_);
  return Integer(-to_big());
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == kMin && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  return Integer(BigInt(a.to_big() / b.to_big()));
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer remainder by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  return Integer(BigInt(a.to_big() % b.to_big()));
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  BigInt x = a.to_big();
  BigInt y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    long long x = a.to_int64();
    long long y = b.to_int64();
    if (x != kMin && y != kMin) return Integer(gcd64(x, y));
  }
  return Integer(BigInt(boost::multiprecision::gcd(a.to_big(), b.to_big())));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(divexact(a, gcd(a, b)) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b).sign() != 0 && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  if (m.is_zero()) return a;
  Integer r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) {
    if (a.is_zero()) return Integer(0);
    throw std::domain_error("divexact: division by zero");
  }
  if (!(a % b).is_zero()) {
    throw std::domain_error("divexact: " + b.to_string() + " does not divide " + a.to_string());
  }
  return a / b;
}

bool divides(const Integer& a, const Integer& b) {
  if (a.is_zero()) return b.is_zero();
  return (b % a).is_zero();
}

Integer factorial(unsigned n) {
  Integer r(1);
  for (unsigned k = 2; k <= n; ++k) r *= Integer(k);
  return r;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = floor_div(old_r, r);
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Bezout64 extended_gcd64(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  a %= m;
  if (a < 0) a += m;
  Bezout64 e = extended_gcd64(a, m);
  if (e.g != 1) return std::nullopt;
  std::int64_t u = e.u % m;
  return u < 0 ? u + m : u;
}

}  // namespace symcoh
