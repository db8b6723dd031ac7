#include "padyn/sampling.hpp"

#include <limits>
#include <random>

namespace padyn {

const char* to_string(SampleMode mode) noexcept {
  return mode == SampleMode::Exhaustive ? "EXHAUSTIVE" : "RANDOM";
}

std::int64_t unit_count(Prime p, int depth) noexcept {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (depth < 1) return 0;
  std::int64_t n = p.value() - 1;
  for (int i = 1; i < depth; ++i) {
    if (n > kMax / p.value()) return kMax;
    n *= p.value();
  }
  return n;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Uniform in [0, bound) by rejection; independent of the standard library's
// distribution implementation so samples are reproducible everywhere.
std::uint32_t draw(std::mt19937_64& rng, std::uint32_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return static_cast<std::uint32_t>(v % bound);
}

}  // namespace

SphereSample sample_sphere(const PAdicNumber& center, NormExponent radius, int depth,
                           SampleMode mode, std::int64_t budget, std::uint64_t seed,
                           int precision) {
  if (radius.is_zero()) throw Error(ErrorCode::InvalidArgument, "sphere radius must be finite");
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "enumeration depth must be at least 1");
  if (precision < depth) {
    throw Error(ErrorCode::InvalidArgument, "precision must cover the enumeration depth");
  }
  const std::int64_t m = radius.exponent();
  if (auto abs = center.absolute_precision(); abs && *abs <= m) {
    throw Error(ErrorCode::InvalidArgument,
                "center is not known finely enough to resolve the requested radius");
  }
  const Prime p = center.prime();
  const std::uint32_t base = p.value();

  SphereSample out{center, radius, {}, depth, mode, seed, 0};
  auto emit = [&](std::vector<std::uint32_t> unit_digits) {
    unit_digits.resize(static_cast<std::size_t>(precision), 0);
    // A point that cancels the center to all known digits cannot be placed.
    auto x = try_add(center, PAdicNumber::from_digits(p, m, std::move(unit_digits)));
    if (x) {
      out.points.push_back(*std::move(x));
    } else {
      ++out.skipped;
    }
  };

  if (mode == SampleMode::Exhaustive) {
    const std::int64_t count = unit_count(p, depth);
    if (count > budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  std::to_string(count) + " units modulo p^" + std::to_string(depth) +
                      " exceed the budget of " + std::to_string(budget));
    }
    out.points.reserve(static_cast<std::size_t>(count));
    // Little-endian odometer: walks u = 1 .. p^depth - 1 in integer order.
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(depth), 0);
    digits[0] = 1;
    while (true) {
      if (digits[0] != 0) emit(digits);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == base) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    return out;
  }

  if (budget < 0) throw Error(ErrorCode::InvalidArgument, "sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  out.points.reserve(static_cast<std::size_t>(budget));
  for (std::int64_t k = 0; k < budget; ++k) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(depth));
    digits[0] = 1 + draw(rng, base - 1);
    for (std::size_t i = 1; i < digits.size(); ++i) digits[i] = draw(rng, base);
    emit(std::move(digits));
  }
  return out;
}

}  // namespace padyn
