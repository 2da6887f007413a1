#include "padictree/expansion.hpp"

namespace padictree {

bool is_padic_integer(const Rational& r, const Prime& p) {
    return mpz_divisible_p(r.denominator().get_mpz_t(), p.value().get_mpz_t()) == 0;
}

Integer residue(const Rational& r, const Prime& p, std::size_t k) {
    if (!is_padic_integer(r, p)) throw DomainError(r.to_string() + " is not a p-adic integer");
    const Integer modulus = power(p, k);
    if (modulus == 1) return 0;
    Integer inv;
    // The denominator is coprime to p, hence invertible mod p^k.
    mpz_invert(inv.get_mpz_t(), r.denominator().get_mpz_t(), modulus.get_mpz_t());
    Integer out = r.numerator() * inv;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

Digits base_digits(Integer x, const Prime& p, std::size_t count) {
    Digits out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Integer d;
        mpz_fdiv_qr(x.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t());
        out.push_back(std::move(d));
    }
    return out;
}

DigitExpansion expand(const Rational& r, const Prime& p, std::size_t count) {
    if (count == 0) throw DomainError("digit count must be positive");
    DigitExpansion out{p, 0, {}, r};
    if (r.is_zero()) return out;

    const std::int64_t start = valuation(r, p).value();
    const Integer shift = power(p, static_cast<unsigned long>(start < 0 ? -start : start));
    const Rational unit = start >= 0 ? r / Rational(shift) : r * Rational(shift);
    out.start_exponent = start;
    out.digits = base_digits(residue(unit, p, count), p, count);
    return out;
}

Digits digits_from_zero(const Rational& r, const Prime& p, std::size_t count) {
    return base_digits(residue(r, p, count), p, count);
}

Integer truncation_value(std::span<const Integer> digits, const Prime& p) {
    Integer out = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out = out * p.value() + *it;
    return out;
}

Valuation congruence_order(const Rational& r1, const Rational& r2, const Prime& p) {
    if (!is_padic_integer(r1, p) || !is_padic_integer(r2, p)) {
        throw DomainError("congruence order requires p-adic integers");
    }
    return valuation(r1 - r2, p);
}

}  // namespace padictree
