#include "padictree/zp_roots.hpp"

#include <algorithm>

namespace padictree {

namespace {

Integer mod(const Integer& x, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::vector<Integer> checked_coefficients(const Polynomial& F) {
    if (F.is_zero()) throw DomainError("root search on the zero polynomial");
    return integer_coefficients(F);
}

}  // namespace

std::vector<Integer> roots_mod_pk(const Polynomial& F, const Prime& p, std::size_t k, std::size_t budget) {
    const auto coeffs = checked_coefficients(F);
    const unsigned long base = p.small();
    std::vector<Integer> level{Integer(0)};
    std::size_t examined = 0;
    Integer step = 1;  // p^j
    for (std::size_t j = 0; j < k; ++j) {
        const Integer modulus = step * p.value();
        std::vector<Integer> next;
        for (const auto& c : level) {
            for (unsigned long t = 0; t < base; ++t) {
                if (++examined > budget) {
                    throw ResourceLimit("root lifting exceeded the budget of " + std::to_string(budget) + " residues");
                }
                Integer x = c + step * t;
                if (mpz_divisible_p(evaluate(coeffs, x).get_mpz_t(), modulus.get_mpz_t())) next.push_back(std::move(x));
            }
        }
        level = std::move(next);
        step = modulus;
    }
    std::sort(level.begin(), level.end());
    return level;
}

bool hensel_certified(const Polynomial& F, const Prime& p, std::span<const Integer> digits) {
    const auto coeffs = checked_coefficients(F);
    const auto deriv = integer_coefficients(F.derivative());
    const Integer x = truncation_value(digits, p);
    const Valuation mu = valuation(evaluate(deriv, x), p);
    if (mu.is_infinite()) return false;
    const auto k = static_cast<std::int64_t>(digits.size());
    if (k <= mu.value()) return false;
    const Valuation fx = valuation(evaluate(coeffs, x), p);
    if (fx.is_infinite()) return true;
    return fx.value() > 2 * mu.value() && fx.value() - mu.value() >= k;
}

std::vector<RootPrefix> zp_root_prefixes(const Polynomial& F, const Prime& p, std::size_t depth, std::size_t budget) {
    std::vector<RootPrefix> out;
    for (const auto& residue : roots_mod_pk(F, p, depth, budget)) {
        Digits digits = base_digits(residue, p, depth);
        const bool certified = hensel_certified(F, p, digits);
        out.push_back({p, std::move(digits), certified});
    }
    return out;
}

RootPrefix extend_certified(const Polynomial& F, const RootPrefix& prefix, std::size_t extra) {
    if (!prefix.certified || !hensel_certified(F, prefix.prime, prefix.digits)) {
        throw DomainError("extend_certified requires a certified prefix");
    }
    const Prime& p = prefix.prime;
    const auto coeffs = integer_coefficients(F);
    const auto deriv = integer_coefficients(F.derivative());
    const std::size_t target = prefix.digits.size() + extra;

    Integer x = truncation_value(prefix.digits, p);
    const std::int64_t mu = valuation(evaluate(deriv, x), p).value();
    const Integer p_mu = power(p, static_cast<unsigned long>(mu));
    const Integer modulus = power(p, static_cast<unsigned long>(target) + static_cast<unsigned long>(mu));

    // Newton steps; v(F(x)) grows strictly while it exceeds 2*mu.
    for (;;) {
        const Integer fx = evaluate(coeffs, x);
        const Valuation v = valuation(fx, p);
        if (v.is_infinite() || v.value() >= static_cast<std::int64_t>(target) + mu) break;
        const Integer unit = mod(evaluate(deriv, x) / p_mu, modulus);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
        x = mod(x - mod((fx / p_mu) * inv, modulus), modulus);
    }

    RootPrefix out{p, base_digits(mod(x, power(p, target)), p, target), true};
    if (!std::equal(prefix.digits.begin(), prefix.digits.end(), out.digits.begin())) {
        throw std::logic_error("Newton lifting left the certified prefix");
    }
    return out;
}

}  // namespace padictree
