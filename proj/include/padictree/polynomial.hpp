#pragma once

// Univariate polynomials in n over Q, the expression parser, and
// rational-root factorization.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padictree/core.hpp"

namespace padictree {

/// Dense polynomial; coefficient i multiplies n^i. The zero polynomial has
/// no coefficients and the leading coefficient is otherwise nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(const Rational& constant);

    /// a*n + b
    static Polynomial linear(const Rational& a, const Rational& b);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of n^i, zero past the degree.
    Rational coefficient(std::size_t i) const;
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool has_integer_coefficients() const;

    Rational evaluate(const Rational& x) const;
    /// Requires integer coefficients.
    Integer evaluate(const Integer& x) const;

    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Expression text in the parser's grammar, e.g. "9/2n^2-39n-27/2".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Integer coefficients of f; throws DomainError if any is fractional.
std::vector<Integer> integer_coefficients(const Polynomial& f);

/// Returns (D, F) with F = D*f having integer coefficients and D > 0 minimal.
std::pair<Integer, std::vector<Integer>> clear_denominators(const Polynomial& f);

/// Horner evaluation of an integer polynomial.
Integer evaluate(const std::vector<Integer>& coefficients, const Integer& x);

/// a*n + b with a > 0 and gcd(a, b) = 1.
class LinearFactor {
public:
    /// Throws DomainError unless the pair is already canonical.
    LinearFactor(Integer a, Integer b);

    /// Canonicalizes a*n + b (a != 0): returns (scale, factor) with
    /// a*n + b = scale * factor.
    static std::pair<Rational, LinearFactor> normalize(const Rational& a, const Rational& b);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    /// -b/a
    Rational root() const { return Rational(-b_, a_); }
    Polynomial polynomial() const { return Polynomial::linear(Rational(a_), Rational(b_)); }

    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
    friend bool operator<(const LinearFactor& x, const LinearFactor& y) {
        return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
    }

    /// "n", "n-9", "3n+1"
    std::string to_string() const;

private:
    Integer a_;
    Integer b_;
};

/// constant * product(linear factors) * residual. Linear factors are sorted;
/// repetition encodes multiplicity. The residual is primitive with positive
/// leading coefficient and no rational root; it is 1 when f splits over Q.
struct FactoredPolynomial {
    Rational constant{1};
    std::vector<LinearFactor> linear_factors;
    Polynomial residual{Rational(1)};

    bool is_zero() const { return constant.is_zero(); }
    bool residual_is_constant() const { return residual.is_constant(); }

    friend bool operator==(const FactoredPolynomial&, const FactoredPolynomial&) = default;

    /// Parseable text, e.g. "3/2*(n-9)*(3n+1)".
    std::string to_string() const;
};

Polynomial expand(const FactoredPolynomial& f);

/// Splits f over Q via the rational root theorem. f must be nonzero.
FactoredPolynomial factor_rational(const Polynomial& f);

/// Rational roots of f (distinct, ascending). f must be nonzero.
std::vector<Rational> rational_roots(const Polynomial& f);

/// Parses an expression in n. Explicit linear factors are kept as given
/// (after normalization); other input goes through factor_rational.
/// Throws ParseError with the offending offset.
FactoredPolynomial parse(std::string_view text);

/// Parses to the expanded polynomial without factoring.
Polynomial parse_polynomial(std::string_view text);

}  // namespace padictree
