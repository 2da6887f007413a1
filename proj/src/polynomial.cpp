#include "padictree/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "padictree/detail/factorint.hpp"

namespace padictree {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { trim(); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer Polynomial::evaluate(const Integer& x) const { return padictree::evaluate(integer_coefficients(*this), x); }

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        if (k == 0 || mag != Rational(1)) os << mag;
        if (k >= 1) os << 'n';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

std::vector<Integer> integer_coefficients(const Polynomial& f) {
    std::vector<Integer> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) {
        if (!c.is_integer()) throw DomainError("polynomial " + f.to_string() + " has non-integer coefficients");
        out.push_back(c.numerator());
    }
    return out;
}

std::pair<Integer, std::vector<Integer>> clear_denominators(const Polynomial& f) {
    Integer d = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) out.push_back(c.numerator() * (d / c.denominator()));
    return {d, std::move(out)};
}

Integer evaluate(const std::vector<Integer>& coefficients, const Integer& x) {
    Integer acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// ---------------------------------------------------------------------------
// Linear factors

LinearFactor::LinearFactor(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    if (a_ <= 0 || g != 1) throw DomainError("linear factor (" + a_.get_str() + ", " + b_.get_str() + ") is not canonical");
}

std::pair<Rational, LinearFactor> LinearFactor::normalize(const Rational& a, const Rational& b) {
    if (a.is_zero()) throw DomainError("linear factor with zero slope");
    // Clear denominators, then divide by the signed gcd.
    Integer d;
    mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    Integer ia = a.numerator() * (d / a.denominator());
    Integer ib = b.numerator() * (d / b.denominator());
    Integer g;
    mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    if (ia < 0) g = -g;
    LinearFactor factor(ia / g, ib / g);
    return {Rational(g, d), std::move(factor)};
}

std::string LinearFactor::to_string() const {
    std::ostringstream os;
    if (a_ != 1) os << a_.get_str();
    os << 'n';
    if (b_ > 0) os << '+' << b_.get_str();
    if (b_ < 0) os << b_.get_str();
    return os.str();
}

std::string FactoredPolynomial::to_string() const {
    if (constant.is_zero()) return "0";
    std::vector<std::string> parts;
    const bool bare = linear_factors.empty() && residual.is_constant();
    if (bare || constant != Rational(1)) parts.push_back(constant.to_string());
    for (const auto& lf : linear_factors) parts.push_back("(" + lf.to_string() + ")");
    if (!residual.is_constant()) parts.push_back("(" + residual.to_string() + ")");
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '*';
        out += parts[i];
    }
    return out;
}

Polynomial expand(const FactoredPolynomial& f) {
    Polynomial out(f.constant);
    for (const auto& lf : f.linear_factors) out *= lf.polynomial();
    return out * f.residual;
}

// ---------------------------------------------------------------------------
// Rational-root factorization

namespace {

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [prime, exponent] : detail::factor_integer(abs(n))) {
        const std::size_t existing = out.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// num/den is a root of q iff sum q_i num^i den^(d-i) == 0.
bool is_root(const std::vector<Integer>& q, const Integer& num, const Integer& den) {
    Integer acc = 0;
    Integer den_pow = 1;
    for (std::size_t i = q.size(); i-- > 0;) {
        acc = acc * num + q[i] * den_pow;
        den_pow *= den;
    }
    return acc == 0;
}

// Exact division of q by (a n + b); caller guarantees divisibility.
std::vector<Integer> deflate(const std::vector<Integer>& q, const Integer& a, const Integer& b) {
    const std::size_t d = q.size() - 1;
    std::vector<Integer> s(d);
    Integer carry = q[d];
    for (std::size_t i = d; i-- > 0;) {
        s[i] = carry / a;
        carry = q[i] - b * s[i];
    }
    return s;
}

struct PrimitivePart {
    Rational constant;
    std::vector<Integer> coefficients;  // positive leading coefficient, content 1
};

PrimitivePart primitive_part(const Polynomial& f) {
    auto [d, ints] = clear_denominators(f);
    Integer g = 0;
    for (const auto& c : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (ints.back() < 0) g = -g;
    for (auto& c : ints) c /= g;
    return {Rational(g, d), std::move(ints)};
}

}  // namespace

FactoredPolynomial factor_rational(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    auto [constant, q] = primitive_part(f);
    std::vector<LinearFactor> factors;

    while (q.size() > 1 && q.front() == 0) {
        q.erase(q.begin());
        factors.emplace_back(Integer(1), Integer(0));
    }
    if (q.size() > 1) {
        const auto leading = divisors(q.back());
        const auto trailing = divisors(q.front());
        for (const auto& den : leading) {
            for (const auto& mag : trailing) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), mag.get_mpz_t());
                if (g != 1) continue;
                for (const Integer& num : {mag, Integer(-mag)}) {
                    while (q.size() > 1 && is_root(q, num, den)) {
                        q = deflate(q, den, -num);
                        factors.emplace_back(den, -num);
                    }
                }
            }
        }
    }

    std::sort(factors.begin(), factors.end());
    std::vector<Rational> residual;
    residual.reserve(q.size());
    for (const auto& c : q) residual.emplace_back(c);
    return {constant, std::move(factors), Polynomial(std::move(residual))};
}

std::vector<Rational> rational_roots(const Polynomial& f) {
    std::vector<Rational> roots;
    for (const auto& lf : factor_rational(f).linear_factors) {
        Rational r = lf.root();
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(std::move(r));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace padictree
