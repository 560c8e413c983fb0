#pragma once

#include <cstdint>

#include "legendre/field.hpp"

namespace legendre {

struct AuxCounts {
    std::int64_t S_tilde = 0;           // #{(x, y, lambda) : y^2 = x(x-1)(x-lambda)}
    std::int64_t S_tilde_shortcut = 0;  // 2q + q(q-2)
    std::int64_t S_0 = 0;               // #{(x, y) : y^2 = x^2(x-1)}
    std::int64_t S_1 = 0;               // #{(x, y) : y^2 = x(x-1)^2}
};

/// Counts by direct enumeration of solutions (square-root multiplicities
/// come from squaring every y, not from the quadratic character).
AuxCounts auxiliary_counts(u64 q, u64 cap = kDefaultEnumerationCap);

struct StatsRecord {
    u64 q = 0;
    std::int64_t S = 0;      // sum over lambda of #E_lambda(F_q)
    std::int64_t S_bar = 0;  // (q-2)(q+1)
    AuxCounts aux;
    bool formula_ok = false;   // S = S_bar + 1 + (-1)^((q-1)/2)
    bool assembly_ok = false;  // S = q - 2 + S_tilde - S_0 - S_1

    std::int64_t delta() const { return S - S_bar; }
};

StatsRecord legendre_sum(u64 q, u64 cap = kDefaultEnumerationCap);

/// (-1)^((q-1)/2)
int sign_minus_one(u64 q);

}  // namespace legendre
