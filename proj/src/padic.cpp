#include "padyn/padic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "residue.hpp"

namespace padyn {

using detail::Residue;

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::UnitNormParameter: return "UnitNormParameter";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PredicateMismatch: return "PredicateMismatch";
  }
  return "Unknown";
}

Prime::Prime(std::uint32_t value) : value_(value) {
  if (value >= (1u << 31)) {
    throw Error(ErrorCode::NotPrime, "prime must be below 2^31");
  }
  bool prime = value >= 2;
  for (std::uint64_t d = 2; prime && d * d <= value; ++d) {
    if (value % d == 0) prime = false;
  }
  if (!prime) {
    throw Error(ErrorCode::NotPrime, std::to_string(value) + " is not prime");
  }
}

std::string NormExponent::to_string() const {
  if (zero_) return "0";
  return "p^" + std::to_string(-exponent_);
}

// Grants the free operators access to the private constructor.
struct PAdicAccess {
  static PAdicNumber make(Prime p, std::int64_t v, detail::Digits d) {
    return PAdicNumber(p, v, std::move(d));
  }
  static const detail::Digits& digits(const PAdicNumber& x) { return x.digits_; }
};

namespace {

void require_same_prime(const PAdicNumber& x, const PAdicNumber& y) {
  if (x.prime() != y.prime()) {
    throw Error(ErrorCode::PrimeMismatch,
                "operands in Q_" + std::to_string(x.prime().value()) + " and Q_" +
                    std::to_string(y.prime().value()));
  }
}

void require_precision(int precision) {
  if (precision < 1) {
    throw Error(ErrorCode::InvalidArgument, "precision must be at least 1");
  }
}

// Strips factors of p, returning the count.
std::int64_t strip_prime(detail::Wide& value, std::uint32_t p) {
  std::int64_t count = 0;
  while (value % p == 0) {
    value /= p;
    ++count;
  }
  return count;
}

Residue unit_residue(const PAdicNumber& x, std::size_t length) {
  const auto& d = PAdicAccess::digits(x);
  detail::Digits out(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(length));
  return Residue(x.prime().value(), std::move(out));
}

std::int64_t checked_valuation(std::int64_t a, std::int64_t b, bool subtract) {
  std::int64_t v = 0;
  const bool overflow =
      subtract ? __builtin_sub_overflow(a, b, &v) : __builtin_add_overflow(a, b, &v);
  if (overflow) throw Error(ErrorCode::InvalidArgument, "valuation overflows int64");
  return v;
}

}  // namespace

PAdicNumber PAdicNumber::from_rational(std::int64_t numerator, std::int64_t denominator,
                                       Prime p, int precision) {
  if (denominator == 0) {
    throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  }
  require_precision(precision);
  if (numerator == 0) return zero(p);

  detail::Wide n = numerator;
  detail::Wide d = denominator;
  const std::int64_t v = strip_prime(n, p.value()) - strip_prime(d, p.value());
  const auto len = static_cast<std::size_t>(precision);
  // n and d are now p-free and bounded by the int64 inputs.
  Residue num = Residue::from_int(static_cast<std::int64_t>(n), p.value(), len);
  Residue den = Residue::from_int(static_cast<std::int64_t>(d), p.value(), len);
  return PAdicNumber(p, v, (num / den).digits());
}

PAdicNumber PAdicNumber::from_digits(Prime p, std::int64_t valuation,
                                     std::vector<std::uint32_t> digits) {
  if (digits.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a nonzero number needs at least one digit");
  }
  if (digits.front() == 0) {
    throw Error(ErrorCode::InvalidArgument, "leading unit digit must be nonzero");
  }
  for (auto d : digits) {
    if (d >= p.value()) {
      throw Error(ErrorCode::InvalidArgument, "digit out of range for the prime");
    }
  }
  return PAdicNumber(p, valuation, std::move(digits));
}

std::optional<std::int64_t> PAdicNumber::absolute_precision() const noexcept {
  if (is_zero()) return std::nullopt;
  return valuation_ + precision();
}

PAdicNumber PAdicNumber::truncated(int precision) const {
  require_precision(precision);
  if (is_zero() || precision >= this->precision()) return *this;
  return PAdicNumber(prime_, valuation_,
                     std::vector<std::uint32_t>(digits_.begin(), digits_.begin() + precision));
}

bool PAdicNumber::identical(const PAdicNumber& other) const noexcept {
  return prime_ == other.prime_ && digits_ == other.digits_ &&
         (is_zero() || valuation_ == other.valuation_);
}

bool operator==(const PAdicNumber& x, const PAdicNumber& y) noexcept {
  if (x.prime_ != y.prime_) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.valuation_ != y.valuation_) return false;
  const auto n = std::min(x.digits_.size(), y.digits_.size());
  return std::equal(x.digits_.begin(), x.digits_.begin() + static_cast<std::ptrdiff_t>(n),
                    y.digits_.begin());
}

std::string PAdicNumber::digit_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(digits_[i]);
  }
  return out;
}

std::string PAdicNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << prime_.value() << "^" << valuation_ << "*[" << digit_string() << "]";
  return os.str();
}

PAdicNumber PAdicNumber::operator-() const {
  if (is_zero()) return *this;
  Residue r = -unit_residue(*this, digits_.size());
  return PAdicNumber(prime_, valuation_, r.digits());
}

std::optional<PAdicNumber> try_add(const PAdicNumber& x, const PAdicNumber& y) {
  require_same_prime(x, y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;

  const PAdicNumber& lo = x.valuation() <= y.valuation() ? x : y;
  const PAdicNumber& hi = x.valuation() <= y.valuation() ? y : x;
  const std::int64_t shift = hi.valuation() - lo.valuation();
  const std::int64_t len = std::min<std::int64_t>(lo.precision(), hi.precision() + shift);
  if (shift >= len) return lo.truncated(static_cast<int>(len));

  const auto n = static_cast<std::size_t>(len);
  const auto s = static_cast<std::size_t>(shift);
  Residue a = unit_residue(lo, n);
  Residue b(x.prime().value(), n);
  const auto& hd = PAdicAccess::digits(hi);
  for (std::size_t i = s; i < n; ++i) b.digits()[i] = hd[i - s];

  Residue sum = a + b;
  const std::size_t cancelled = sum.leading_zeros();
  if (cancelled == n) {
    // Same valuation and precision with every digit cancelling means hi is
    // structurally -lo.
    if (shift == 0 && lo.precision() == hi.precision()) return PAdicNumber::zero(x.prime());
    return std::nullopt;
  }
  const auto& sd = sum.digits();
  return PAdicAccess::make(x.prime(), lo.valuation() + static_cast<std::int64_t>(cancelled),
                           detail::Digits(sd.begin() + static_cast<std::ptrdiff_t>(cancelled),
                                          sd.end()));
}

PAdicNumber operator+(const PAdicNumber& x, const PAdicNumber& y) {
  auto sum = try_add(x, y);
  if (!sum) {
    throw Error(ErrorCode::PrecisionExhausted,
                "sum cancels past the known digits: " + x.to_string() + " + " + y.to_string());
  }
  return *std::move(sum);
}

PAdicNumber operator-(const PAdicNumber& x, const PAdicNumber& y) {
  require_same_prime(x, y);
  if (x.identical(y)) return PAdicNumber::zero(x.prime());
  return x + (-y);
}

PAdicNumber operator*(const PAdicNumber& x, const PAdicNumber& y) {
  require_same_prime(x, y);
  if (x.is_zero() || y.is_zero()) return PAdicNumber::zero(x.prime());
  const auto n = static_cast<std::size_t>(std::min(x.precision(), y.precision()));
  Residue prod = unit_residue(x, n) * unit_residue(y, n);
  return PAdicAccess::make(x.prime(), checked_valuation(x.valuation(), y.valuation(), false),
                           prod.digits());
}

PAdicNumber operator/(const PAdicNumber& x, const PAdicNumber& y) {
  require_same_prime(x, y);
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (x.is_zero()) return x;
  const auto n = static_cast<std::size_t>(std::min(x.precision(), y.precision()));
  Residue q = unit_residue(x, n) / unit_residue(y, n);
  return PAdicAccess::make(x.prime(), checked_valuation(x.valuation(), y.valuation(), true),
                           q.digits());
}

PAdicNumber pow(const PAdicNumber& x, unsigned k) {
  const int prec = x.is_zero() ? kDefaultPrecision : x.precision();
  PAdicNumber result = PAdicNumber::from_integer(1, x.prime(), prec);
  if (k == 0) return result;
  PAdicNumber base = x;
  while (true) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (!k) break;
    base = base * base;
  }
  return result;
}

Distance distance(const PAdicNumber& x, const PAdicNumber& y) {
  require_same_prime(x, y);
  if (x.identical(y)) return {NormExponent::Zero(), true};
  auto diff = try_add(x, -y);
  if (diff) return {diff->norm(), true};
  // Both nonzero here; the difference vanishes modulo p^min(abs precision).
  const std::int64_t bound = std::min(*x.absolute_precision(), *y.absolute_precision());
  return {NormExponent::Finite(bound), false};
}

}  // namespace padyn
