#pragma once

#include <cstdint>

#include "padyn/padic.hpp"

namespace padyn {

// x^2 == a0 (mod p) solvable, by exhaustive search. Requires 1 <= a0 <= p-1.
bool is_quadratic_residue(std::uint32_t a0, Prime p);

enum class SqrtReason { Ok, OddValuation, NonresidueUnit, P2DigitCondition };

const char* to_string(SqrtReason reason) noexcept;

struct SqrtExistence {
  bool exists;
  SqrtReason reason;
};

// Solvability of y^2 = x in Q_p: even valuation, and a quadratic-residue
// leading digit (for p = 2: digits a1 = a2 = 0). Throws ZeroInput, and
// InvalidArgument for p = 2 with fewer than 3 known digits.
SqrtExistence sqrt_exists(const PAdicNumber& x);

// The square root whose leading digit lies in [1, p/2] (p = 2: the root
// congruent to 1 mod 4). Output precision equals the input precision, minus
// one for p = 2. Throws NoSquareRoot.
PAdicNumber sqrt(const PAdicNumber& x);

// Existence of sqrt(a^2 + 4) from the closed-form criterion: always for
// |a| > 1; for |a| < 1 iff p >= 3 or |a|_2 <= 2^-3. Throws
// UnitNormParameter when |a| = 1 and InvalidArgument for a = 0.
bool sqrt_a2_plus_4_exists(const PAdicNumber& a);

// Whether -3 is a square in Q_p. Throws InvalidArgument for p = 3.
bool sqrt_minus_3_exists(Prime p);

}  // namespace padyn
