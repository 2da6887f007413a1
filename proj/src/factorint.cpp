#include "padictree/detail/factorint.hpp"

namespace padictree::detail {

namespace {

bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer rho(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        auto step = [&](const Integer& x) {
            Integer y = x * x + c;
            mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
            return y;
        };
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (probable_prime(n)) {
        ++out[n];
        return;
    }
    const Integer d = rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

std::map<Integer, unsigned> factor_integer(Integer n) {
    std::map<Integer, unsigned> out;
    if (n <= 0) throw DomainError("factor_integer requires a positive argument");
    for (unsigned long d = 2; d < 10000 && Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[Integer(d)];
            n /= d;
        }
    }
    split(n, out);
    return out;
}

}  // namespace padictree::detail
