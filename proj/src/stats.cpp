#include "legendre/stats.hpp"

#include <stdexcept>
#include <vector>

#include "legendre/classify.hpp"

namespace legendre {

namespace {

FieldPtr odd_field(u64 q)
{
    const auto pn = prime_power_split(q);
    if (!pn || pn->first == 2)
        throw std::invalid_argument("q must be an odd prime power");
    return make_field(pn->first, pn->second);
}

}  // namespace

int sign_minus_one(u64 q) { return ((q - 1) / 2) % 2 == 0 ? 1 : -1; }

AuxCounts auxiliary_counts(u64 q, u64 cap)
{
    require_within_cap(q, cap, "auxiliary_counts");
    const auto fp = odd_field(q);
    const Field& f = *fp;
    std::vector<std::int64_t> roots(q, 0);
    for (Elem y = 0; y < q; ++y)
        ++roots[f.sqr(y)];

    AuxCounts a;
    for (Elem x = 0; x < q; ++x) {
        const Elem base = f.mul(x, f.sub(x, 1));
        for (Elem l = 0; l < q; ++l)
            a.S_tilde += roots[f.mul(base, f.sub(x, l))];
        a.S_0 += roots[f.mul(f.sqr(x), f.sub(x, 1))];
        a.S_1 += roots[f.mul(x, f.sqr(f.sub(x, 1)))];
    }
    const auto Q = static_cast<std::int64_t>(q);
    a.S_tilde_shortcut = 2 * Q + Q * (Q - 2);
    return a;
}

StatsRecord legendre_sum(u64 q, u64 cap)
{
    require_within_cap(q, cap, "legendre_sum");
    const auto fp = odd_field(q);
    StatsRecord r;
    r.q = q;
    const auto counts = legendre_counts(*fp, cap);
    for (Elem l = 2; l < q; ++l)
        r.S += static_cast<std::int64_t>(counts[l]);
    const auto Q = static_cast<std::int64_t>(q);
    r.S_bar = (Q - 2) * (Q + 1);
    r.formula_ok = r.S == r.S_bar + 1 + sign_minus_one(q);
    r.aux = auxiliary_counts(q, cap);
    r.assembly_ok = r.S == Q - 2 + r.aux.S_tilde - r.aux.S_0 - r.aux.S_1;
    return r;
}

}  // namespace legendre
