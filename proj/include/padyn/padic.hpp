#pragma once

// Exact arithmetic in Q_p at fixed relative precision.
//
// A nonzero value is p^v * (d0 + d1 p + ... + d_{N-1} p^{N-1}) with d0 != 0.
// Only the N stored digits are known; everything past them is unknown, not
// zero. Zero is a distinguished exact value with no digits.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padyn/error.hpp"

namespace padyn {

inline constexpr int kDefaultPrecision = 32;

class Prime {
 public:
  // Throws NotPrime. Values must stay below 2^31.
  explicit Prime(std::uint32_t value);

  std::uint32_t value() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t value_;
};

// |x|_p = p^(-exponent), or the norm of zero. Ordered by norm, so
// Finite(2) < Finite(1) and Zero() is below every finite norm.
class NormExponent {
 public:
  static constexpr NormExponent Finite(std::int64_t exponent) noexcept {
    return NormExponent(false, exponent);
  }
  static constexpr NormExponent Zero() noexcept { return NormExponent(true, 0); }

  constexpr bool is_zero() const noexcept { return zero_; }
  // Undefined for Zero(); callers check is_zero() first.
  constexpr std::int64_t exponent() const noexcept { return exponent_; }

  friend constexpr bool operator==(NormExponent, NormExponent) = default;
  friend constexpr std::strong_ordering operator<=>(NormExponent a, NormExponent b) noexcept {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    return b.exponent_ <=> a.exponent_;
  }

  // |x|·|y| and |x|/|y|.
  friend constexpr NormExponent operator*(NormExponent a, NormExponent b) noexcept {
    return (a.zero_ || b.zero_) ? Zero() : Finite(a.exponent_ + b.exponent_);
  }

  std::string to_string() const;

 private:
  constexpr NormExponent(bool zero, std::int64_t exponent) noexcept
      : zero_(zero), exponent_(zero ? 0 : exponent) {}

  bool zero_;
  std::int64_t exponent_;
};

class PAdicNumber {
 public:
  static PAdicNumber zero(Prime p) { return PAdicNumber(p); }

  // Canonical expansion of numerator/denominator. Throws ZeroDenominator,
  // InvalidArgument for precision < 1.
  static PAdicNumber from_rational(std::int64_t numerator, std::int64_t denominator,
                                   Prime p, int precision = kDefaultPrecision);

  static PAdicNumber from_integer(std::int64_t value, Prime p,
                                  int precision = kDefaultPrecision) {
    return from_rational(value, 1, p, precision);
  }

  // Digits little-endian, digits[0] != 0, each in [0, p-1].
  static PAdicNumber from_digits(Prime p, std::int64_t valuation,
                                 std::vector<std::uint32_t> digits);

  Prime prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return digits_.empty(); }
  // Meaningless for zero.
  std::int64_t valuation() const noexcept { return valuation_; }
  int precision() const noexcept { return static_cast<int>(digits_.size()); }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }

  // valuation + precision: the value is known modulo p^absolute_precision.
  // Zero is exact and reports nullopt.
  std::optional<std::int64_t> absolute_precision() const noexcept;

  NormExponent norm() const noexcept {
    return is_zero() ? NormExponent::Zero() : NormExponent::Finite(valuation_);
  }

  // Drops trailing digits; never adds any.
  PAdicNumber truncated(int precision) const;

  // Same prime, valuation, precision and digits.
  bool identical(const PAdicNumber& other) const noexcept;

  // Equal at the common precision (valuations match, digits agree up to
  // min(N1, N2)).
  friend bool operator==(const PAdicNumber& x, const PAdicNumber& y) noexcept;

  // "0" or "p^v*[d0.d1.d2...]" with digits little-endian.
  std::string to_string() const;
  // "d0.d1.d2..." little-endian; empty for zero.
  std::string digit_string() const;

  PAdicNumber operator-() const;

 private:
  explicit PAdicNumber(Prime p) : prime_(p), valuation_(0) {}
  PAdicNumber(Prime p, std::int64_t valuation, std::vector<std::uint32_t> digits)
      : prime_(p), valuation_(valuation), digits_(std::move(digits)) {}

  friend struct PAdicAccess;

  Prime prime_;
  std::int64_t valuation_;
  std::vector<std::uint32_t> digits_;
};

// Arithmetic. All throw PrimeMismatch on mixed primes. add/sub follow the
// relative-precision propagation rule and throw PrecisionExhausted when
// every known digit cancels (unless the operands are structurally x and -x
// for add, or x and x for sub, which gives exact zero).
PAdicNumber operator+(const PAdicNumber& x, const PAdicNumber& y);
PAdicNumber operator-(const PAdicNumber& x, const PAdicNumber& y);
PAdicNumber operator*(const PAdicNumber& x, const PAdicNumber& y);
// Throws DivisionByZero.
PAdicNumber operator/(const PAdicNumber& x, const PAdicNumber& y);

inline PAdicNumber add(const PAdicNumber& x, const PAdicNumber& y) { return x + y; }
inline PAdicNumber sub(const PAdicNumber& x, const PAdicNumber& y) { return x - y; }
inline PAdicNumber mul(const PAdicNumber& x, const PAdicNumber& y) { return x * y; }
inline PAdicNumber div(const PAdicNumber& x, const PAdicNumber& y) { return x / y; }
inline PAdicNumber neg(const PAdicNumber& x) { return -x; }
PAdicNumber pow(const PAdicNumber& x, unsigned k);

inline NormExponent norm(const PAdicNumber& x) noexcept { return x.norm(); }

// |x - y|, or an upper bound when the difference cancels past the known
// digits. When exact is false, |x - y| <= norm.
struct Distance {
  NormExponent norm;
  bool exact;

  // Certainly |x - y| < radius.
  bool certainly_below(NormExponent radius) const noexcept { return norm < radius; }
  // Certainly |x - y| == radius.
  bool certainly_equal(NormExponent radius) const noexcept {
    return exact && norm == radius;
  }
};

Distance distance(const PAdicNumber& x, const PAdicNumber& y);

// Sum that reports exhaustion instead of throwing.
std::optional<PAdicNumber> try_add(const PAdicNumber& x, const PAdicNumber& y);

}  // namespace padyn
