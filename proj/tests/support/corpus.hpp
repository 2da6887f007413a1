#pragma once

// Seeded random inputs shared by the property tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "padictree/polynomial.hpp"

namespace corpus {

struct Case {
    padictree::FactoredPolynomial f;
    unsigned long prime;
};

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// 1 to 4 linear factors a n + b with a, b in [-50, 50], a nonzero, a random
/// nonzero rational constant and p drawn from {2, 3, 5, 7}.
inline std::vector<Case> factorable(std::size_t count, std::uint64_t seed) {
    using namespace padictree;
    static constexpr unsigned long kPrimes[] = {2, 3, 5, 7};
    std::mt19937_64 rng(seed);
    std::vector<Case> out;
    while (out.size() < count) {
        FactoredPolynomial f;
        std::int64_t num = 0;
        while (num == 0) num = uniform(rng, -50, 50);
        f.constant = Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(uniform(rng, 1, 50))));
        const auto factors = uniform(rng, 1, 4);
        for (std::int64_t i = 0; i < factors; ++i) {
            std::int64_t a = 0;
            while (a == 0) a = uniform(rng, -50, 50);
            const std::int64_t b = uniform(rng, -50, 50);
            auto [scale, lf] = LinearFactor::normalize(Rational(static_cast<long>(a)), Rational(static_cast<long>(b)));
            f.constant *= scale;
            f.linear_factors.push_back(lf);
        }
        std::sort(f.linear_factors.begin(), f.linear_factors.end());
        out.push_back({std::move(f), kPrimes[uniform(rng, 0, 3)]});
    }
    return out;
}

}  // namespace corpus
