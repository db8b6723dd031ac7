#include "residue.hpp"

#include <cassert>

namespace padyn::detail {

namespace {

// Reduces signed column sums into digits, discarding the final carry.
Digits normalize_columns(std::vector<Wide>& cols, std::uint32_t p) {
  Digits out(cols.size());
  Wide carry = 0;
  const Wide base = p;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    Wide v = cols[i] + carry;
    Wide r = v % base;
    if (r < 0) r += base;
    carry = (v - r) / base;
    out[i] = static_cast<std::uint32_t>(r);
  }
  return out;
}

}  // namespace

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  assert(r == 1);
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Residue Residue::from_int(std::int64_t value, std::uint32_t p, std::size_t length) {
  std::vector<Wide> cols(length, 0);
  if (length > 0) cols[0] = value;
  return Residue(p, normalize_columns(cols, p));
}

bool Residue::is_zero() const noexcept { return leading_zeros() == d_.size(); }

std::size_t Residue::leading_zeros() const noexcept {
  std::size_t i = 0;
  while (i < d_.size() && d_[i] == 0) ++i;
  return i;
}

Residue Residue::operator+(const Residue& o) const {
  assert(o.p_ == p_ && o.length() == length());
  Digits out(d_.size());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    std::uint64_t v = std::uint64_t{d_[i]} + o.d_[i] + carry;
    carry = v >= p_ ? 1 : 0;
    out[i] = static_cast<std::uint32_t>(v - carry * p_);
  }
  return Residue(p_, std::move(out));
}

Residue Residue::operator-() const {
  Digits out(d_.size(), 0);
  std::size_t i = leading_zeros();
  if (i == d_.size()) return Residue(p_, std::move(out));
  out[i] = p_ - d_[i];
  for (++i; i < d_.size(); ++i) out[i] = p_ - 1 - d_[i];
  return Residue(p_, std::move(out));
}

Residue Residue::operator-(const Residue& o) const { return *this + (-o); }

Residue Residue::operator*(const Residue& o) const {
  assert(o.p_ == p_ && o.length() == length());
  const std::size_t n = d_.size();
  std::vector<Wide> cols(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i] == 0) continue;
    const Wide a = d_[i];
    for (std::size_t j = 0; i + j < n; ++j) cols[i + j] += a * o.d_[j];
  }
  return Residue(p_, normalize_columns(cols, p_));
}

Residue Residue::operator/(const Residue& o) const {
  assert(o.p_ == p_ && o.length() == length());
  assert(!o.d_.empty() && o.d_[0] != 0);
  const std::size_t n = d_.size();
  const std::uint32_t inv = inverse_mod_p(o.d_[0], p_);
  const Wide base = p_;
  std::vector<Wide> rem(d_.begin(), d_.end());
  Digits q(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Wide r = rem[i] % base;
    if (r < 0) r += base;
    const Wide qi = (r * inv) % base;
    q[i] = static_cast<std::uint32_t>(qi);
    for (std::size_t j = 0; i + j < n; ++j) rem[i + j] -= qi * o.d_[j];
    // rem[i] is now divisible by p; push it upward.
    if (i + 1 < n) rem[i + 1] += rem[i] / base;
  }
  return Residue(p_, std::move(q));
}

}  // namespace padyn::detail
