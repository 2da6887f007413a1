#pragma once

// Truncated base-p expansions of rationals.
//
// Two indexing conventions coexist. `expand` starts at the valuation of the
// source and its first digit is nonzero; `digits_from_zero` always starts at
// p^0 and keeps leading zeros. Tree code only uses the latter.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "padictree/core.hpp"

namespace padictree {

using Digits = std::vector<Integer>;

struct DigitExpansion {
    Prime prime;
    std::int64_t start_exponent = 0;  // exponent of digits.front()
    Digits digits;                    // empty iff source == 0
    Rational source;
};

/// True iff r == 0 or p does not divide the denominator.
bool is_padic_integer(const Rational& r, const Prime& p);

/// First `count` digits of r starting at v_p(r). Zero yields no digits.
/// Throws DomainError when count == 0.
DigitExpansion expand(const Rational& r, const Prime& p, std::size_t count);

/// Digits c_0..c_{count-1} with r == sum c_j p^j mod p^count.
/// Throws DomainError if r is not a p-adic integer.
Digits digits_from_zero(const Rational& r, const Prime& p, std::size_t count);

/// sum d_j p^j.
Integer truncation_value(std::span<const Integer> digits, const Prime& p);

/// v_p(r1 - r2): the largest r with r1 == r2 mod p^r (infinite if equal).
/// Throws DomainError unless both inputs are p-adic integers.
Valuation congruence_order(const Rational& r1, const Rational& r2, const Prime& p);

/// Base-p digits of 0 <= x < p^count, least significant first, padded to `count`.
Digits base_digits(Integer x, const Prime& p, std::size_t count);

/// r mod p^k as an integer in [0, p^k). Requires r in Z_p.
Integer residue(const Rational& r, const Prime& p, std::size_t k);

}  // namespace padictree
