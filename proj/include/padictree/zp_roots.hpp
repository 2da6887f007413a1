#pragma once

// Roots of integer polynomials in Z_p, found by lifting residues one digit at
// a time and certified with the strong form of Hensel's lemma.

#include <cstddef>
#include <vector>

#include "padictree/expansion.hpp"
#include "padictree/polynomial.hpp"

namespace padictree {

inline constexpr std::size_t kDefaultLiftBudget = 100000;

struct RootPrefix {
    Prime prime;
    Digits digits;
    /// A unique root of F in Z_p extends `digits`. For x the truncation value
    /// with mu = v(F'(x)) finite this means v(F(x)) > 2*mu, v(F(x)) - mu >= k
    /// and k > mu, where k is the prefix length.
    bool certified = false;

    friend bool operator==(const RootPrefix&, const RootPrefix&) = default;
};

/// All c in [0, p^k) with F(c) == 0 mod p^k, ascending. Throws
/// ResourceLimit once more than `budget` candidate residues are examined.
std::vector<Integer> roots_mod_pk(const Polynomial& F, const Prime& p, std::size_t k,
                                  std::size_t budget = kDefaultLiftBudget);

/// True when the Hensel certificate above holds for `digits`.
bool hensel_certified(const Polynomial& F, const Prime& p, std::span<const Integer> digits);

/// Length-`depth` prefixes of the residues from roots_mod_pk, each flagged.
std::vector<RootPrefix> zp_root_prefixes(const Polynomial& F, const Prime& p, std::size_t depth,
                                         std::size_t budget = kDefaultLiftBudget);

/// The unique continuation of a certified prefix by `extra` digits.
/// Throws DomainError for an uncertified prefix.
RootPrefix extend_certified(const Polynomial& F, const RootPrefix& prefix, std::size_t extra);

}  // namespace padictree
