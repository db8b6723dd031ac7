#pragma once

// Internal: integers modulo p^L as little-endian base-p digit vectors.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace padyn::detail {

using Digits = std::vector<std::uint32_t>;
__extension__ typedef __int128 Wide;

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p);

class Residue {
 public:
  Residue(std::uint32_t p, std::size_t length) : p_(p), d_(length, 0) {}
  Residue(std::uint32_t p, Digits digits) : p_(p), d_(std::move(digits)) {}

  // value mod p^length; negative values wrap.
  static Residue from_int(std::int64_t value, std::uint32_t p, std::size_t length);

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t length() const noexcept { return d_.size(); }
  const Digits& digits() const noexcept { return d_; }
  Digits& digits() noexcept { return d_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return d_[i]; }

  bool is_zero() const noexcept;
  // Index of the first nonzero digit, or length() when zero.
  std::size_t leading_zeros() const noexcept;

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator-() const;
  Residue operator*(const Residue& o) const;
  // Requires o[0] != 0.
  Residue operator/(const Residue& o) const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint32_t p_;
  Digits d_;
};

}  // namespace padyn::detail
