#pragma once

#include <map>

#include "padictree/core.hpp"

namespace padictree::detail {

/// Prime factorization of n >= 1 (trial division, then Pollard-Brent rho).
std::map<Integer, unsigned> factor_integer(Integer n);

}  // namespace padictree::detail
