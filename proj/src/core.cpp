#include "padictree/core.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace padictree {

std::string to_string(const Integer& n) { return n.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
    Rational r;
    r.value_ = q;
    r.value_.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto digits = [&]() -> std::string {
        const std::size_t begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (begin == i) throw ParseError("expected digits", i);
        return std::string(text.substr(begin, i - begin));
    };

    skip_ws();
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    Integer num(digits());
    Integer den(1);
    skip_ws();
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        const std::size_t at = i;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", at);
    }
    skip_ws();
    if (i != text.size()) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    if (negative) num = -num;
    return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t Valuation::value() const {
    if (infinite_) throw DomainError("infinite valuation has no integer value");
    return value_;
}

Valuation operator-(Valuation a, Valuation b) {
    if (a.is_infinite() || b.is_infinite()) throw DomainError("subtraction of infinite valuation");
    return Valuation::finite(a.value() - b.value());
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.to_string(); }

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // Trial division is exact and fast enough below 2^40; above that we rely
    // on GMP's Baillie-PSW plus Miller-Rabin rounds.
    if (n < Integer(1) << 40) {
        const unsigned long v = n.get_ui();
        if (v < 4) return true;
        if (v % 2 == 0) return false;
        for (unsigned long d = 3; d * d <= v; d += 2) {
            if (v % d == 0) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Prime::Prime(const Integer& p) : p_(p) {
    if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not a prime");
}

unsigned long Prime::small() const {
    if (!p_.fits_ulong_p()) throw DomainError("prime " + p_.get_str() + " does not fit a machine word");
    return p_.get_ui();
}

Integer power(const Prime& p, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), p.value().get_mpz_t(), e);
    return out;
}

Valuation valuation(const Integer& n, const Prime& p) {
    if (n == 0) return Valuation::infinite();
    if (p.value() == 2) return Valuation::finite(static_cast<std::int64_t>(mpz_scan1(n.get_mpz_t(), 0)));
    Integer rest;
    const auto v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.value().get_mpz_t());
    return Valuation::finite(static_cast<std::int64_t>(v));
}

Valuation valuation(const Rational& r, const Prime& p) {
    if (r.is_zero()) return Valuation::infinite();
    return valuation(r.numerator(), p) - valuation(r.denominator(), p);
}

Rational padic_abs(const Rational& r, const Prime& p) {
    if (r.is_zero()) return Rational(0);
    const std::int64_t v = valuation(r, p).value();
    const Integer scale = power(p, static_cast<unsigned long>(v < 0 ? -v : v));
    return v >= 0 ? Rational(Integer(1), scale) : Rational(scale);
}

}  // namespace padictree
