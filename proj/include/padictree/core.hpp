#pragma once

// Exact rational arithmetic and the p-adic valuation primitives.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "padictree/errors.hpp"

namespace padictree {

using Integer = mpz_class;

std::string to_string(const Integer& n);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    /// Throws DomainError when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    static Rational from_mpq(const mpq_class& q);

    /// Parses "a", "-a" or "a/b" (b != 0). Throws ParseError.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return from_mpq(-value_); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A p-adic valuation: a signed integer, or +infinity for the value zero.
class Valuation {
public:
    constexpr Valuation() = default;
    static constexpr Valuation finite(std::int64_t v) { return Valuation(v, false); }
    static constexpr Valuation infinite() { return Valuation(0, true); }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    /// Throws DomainError for the infinite valuation.
    std::int64_t value() const;

    /// Infinite absorbs addition.
    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.value_ + b.value_);
    }
    /// Finite minus finite; throws DomainError if either side is infinite.
    friend Valuation operator-(Valuation a, Valuation b);

    friend constexpr bool operator==(Valuation a, Valuation b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    /// "inf" or the decimal value.
    std::string to_string() const;

private:
    constexpr Valuation(std::int64_t v, bool inf) : value_(v), infinite_(inf) {}

    std::int64_t value_ = 0;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, Valuation v);

/// A validated prime. Construction throws InvalidPrime for anything else.
class Prime {
public:
    explicit Prime(const Integer& p);
    explicit Prime(unsigned long p) : Prime(Integer(p)) {}

    const Integer& value() const { return p_; }
    /// The prime as a machine word; throws DomainError if it does not fit.
    unsigned long small() const;

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

private:
    Integer p_;
};

bool is_prime(const Integer& n);

/// p^e for e >= 0.
Integer power(const Prime& p, unsigned long e);

Valuation valuation(const Integer& n, const Prime& p);
Valuation valuation(const Rational& r, const Prime& p);

/// |r|_p = p^(-v_p(r)); zero maps to zero.
Rational padic_abs(const Rational& r, const Prime& p);

}  // namespace padictree
