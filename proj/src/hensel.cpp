#include "padyn/hensel.hpp"

#include <string>

#include "residue.hpp"

namespace padyn {

using detail::Residue;

const char* to_string(SqrtReason reason) noexcept {
  switch (reason) {
    case SqrtReason::Ok: return "OK";
    case SqrtReason::OddValuation: return "ODD_VALUATION";
    case SqrtReason::NonresidueUnit: return "NONRESIDUE_UNIT";
    case SqrtReason::P2DigitCondition: return "P2_DIGIT_CONDITION";
  }
  return "UNKNOWN";
}

bool is_quadratic_residue(std::uint32_t a0, Prime p) {
  const std::uint64_t m = p.value();
  if (a0 == 0 || a0 >= m) {
    throw Error(ErrorCode::InvalidArgument, "residue must lie in [1, p-1]");
  }
  for (std::uint64_t y = 1; y < m; ++y) {
    if (y * y % m == a0) return true;
  }
  return false;
}

SqrtExistence sqrt_exists(const PAdicNumber& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "sqrt existence asked for zero");
  const auto d = x.digits();
  if (x.prime().value() == 2 && d.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "Q_2 square-root test needs three known digits");
  }
  if (x.valuation() % 2 != 0) return {false, SqrtReason::OddValuation};
  if (x.prime().value() == 2) {
    if (d[1] != 0 || d[2] != 0) return {false, SqrtReason::P2DigitCondition};
    return {true, SqrtReason::Ok};
  }
  if (!is_quadratic_residue(d[0], x.prime())) return {false, SqrtReason::NonresidueUnit};
  return {true, SqrtReason::Ok};
}

namespace {

// Unit root with s^2 == u (mod p^n), s[0] in [1, p/2], p odd.
Residue unit_sqrt_odd(const Residue& u) {
  const std::uint64_t p = u.prime();
  const std::size_t n = u.length();
  std::uint32_t seed = 0;
  for (std::uint64_t y = 1; y <= p / 2; ++y) {
    if (y * y % p == u[0]) {
      seed = static_cast<std::uint32_t>(y);
      break;
    }
  }
  Residue s = Residue::from_int(seed, u.prime(), n);
  const Residue two = Residue::from_int(2, u.prime(), n);
  // Each Newton step doubles the number of correct digits.
  for (std::size_t correct = 1; correct < n; correct *= 2) {
    s = s - (s * s - u) / (two * s);
  }
  return s;
}

// Unit root for p = 2, u == 1 (mod 8): s == 1 (mod 4), correct to n - 1 bits.
Residue unit_sqrt_two(const Residue& u) {
  const std::size_t n = u.length();
  Residue s = Residue::from_int(1, 2, n);
  // Invariant: s^2 == u (mod 2^(k+1)). Adding 2^k flips bit k+1 of s^2 only.
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    Residue diff = s * s - u;
    if (diff[k + 1] != 0) s.digits()[k] ^= 1u;
  }
  s.digits().pop_back();
  return s;
}

}  // namespace

PAdicNumber sqrt(const PAdicNumber& x) {
  if (x.is_zero()) return x;
  const SqrtExistence ex = sqrt_exists(x);
  if (!ex.exists) {
    throw Error(ErrorCode::NoSquareRoot,
                x.to_string() + " has no square root (" + to_string(ex.reason) + ")");
  }
  const auto d = x.digits();
  Residue u(x.prime().value(), detail::Digits(d.begin(), d.end()));
  Residue root = x.prime().value() == 2 ? unit_sqrt_two(u) : unit_sqrt_odd(u);
  return PAdicNumber::from_digits(x.prime(), x.valuation() / 2, root.digits());
}

bool sqrt_a2_plus_4_exists(const PAdicNumber& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "parameter a must be nonzero");
  const std::int64_t v = a.valuation();
  if (v == 0) {
    throw Error(ErrorCode::UnitNormParameter, "|a|_p = 1 is outside the analysed regimes");
  }
  if (v < 0) return true;
  return a.prime().value() >= 3 || v >= 3;
}

bool sqrt_minus_3_exists(Prime p) {
  if (p.value() == 3) {
    throw Error(ErrorCode::InvalidArgument, "-3 has odd valuation in Q_3");
  }
  return sqrt_exists(PAdicNumber::from_integer(-3, p, 8)).exists;
}

}  // namespace padyn
