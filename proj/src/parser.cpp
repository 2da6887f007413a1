// Recursive descent parser for polynomial expressions in n.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (['*'] factor)*
//   factor   := primary ('^' uint)*
//   primary  := rational | 'n' | '(' expr ')'
//   rational := uint ('/' uint)?

#include <algorithm>
#include <cctype>

#include "padictree/polynomial.hpp"

namespace padictree {

namespace {

constexpr unsigned long kMaxExponent = 256;

struct Term {
    bool negative = false;
    std::vector<Polynomial> factors;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Term> parse_all() {
        auto terms = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::vector<Term> expr() {
        std::vector<Term> terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        terms.push_back({negative, term()});
        while (peek() == '+' || peek() == '-') {
            negative = text_[pos_] == '-';
            ++pos_;
            terms.push_back({negative, term()});
        }
        return terms;
    }

    static bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == '('; }

    std::vector<Polynomial> term() {
        std::vector<Polynomial> factors{factor()};
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                factors.push_back(factor());
            } else if (starts_factor(c)) {
                factors.push_back(factor());
            } else {
                return factors;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            const Integer e = uint();
            if (e > kMaxExponent) fail("exponent too large");
            Polynomial acc(Rational(1));
            for (unsigned long i = 0; i < e.get_ui(); ++i) acc *= base;
            base = std::move(acc);
        }
        return base;
    }

    Polynomial primary() {
        const char c = peek();
        if (c == 'n') {
            ++pos_;
            return Polynomial::linear(Rational(1), Rational(0));
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = sum(expr());
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = uint();
            Integer den = 1;
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                den = uint();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            return Polynomial(Rational(num, den));
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Integer uint() {
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (begin == pos_) fail("expected an unsigned integer");
        return Integer(std::string(text_.substr(begin, pos_ - begin)));
    }

public:
    static Polynomial product(const std::vector<Polynomial>& factors) {
        Polynomial acc(Rational(1));
        for (const auto& f : factors) acc *= f;
        return acc;
    }

    static Polynomial sum(const std::vector<Term>& terms) {
        Polynomial acc;
        for (const auto& t : terms) {
            if (t.negative) {
                acc -= product(t.factors);
            } else {
                acc += product(t.factors);
            }
        }
        return acc;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

FactoredPolynomial zero_factored() { return {Rational(0), {}, Polynomial(Rational(1))}; }

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser::sum(Parser(text).parse_all()); }

FactoredPolynomial parse(std::string_view text) {
    const auto terms = Parser(text).parse_all();
    if (terms.size() != 1) {
        const Polynomial f = Parser::sum(terms);
        return f.is_zero() ? zero_factored() : factor_rational(f);
    }

    // A single product: keep explicit factors, only factoring nonlinear ones.
    FactoredPolynomial out;
    if (terms.front().negative) out.constant = Rational(-1);
    for (const auto& piece : terms.front().factors) {
        if (piece.is_zero()) return zero_factored();
        if (piece.degree() == 0) {
            out.constant *= piece.coefficient(0);
        } else if (piece.degree() == 1) {
            auto [scale, lf] = LinearFactor::normalize(piece.coefficient(1), piece.coefficient(0));
            out.constant *= scale;
            out.linear_factors.push_back(std::move(lf));
        } else {
            auto sub = factor_rational(piece);
            out.constant *= sub.constant;
            out.linear_factors.insert(out.linear_factors.end(), sub.linear_factors.begin(), sub.linear_factors.end());
            out.residual *= sub.residual;
        }
    }
    std::sort(out.linear_factors.begin(), out.linear_factors.end());
    return out;
}

}  // namespace padictree
