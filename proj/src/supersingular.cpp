#include "legendre/supersingular.hpp"

#include <numeric>
#include <stdexcept>

#include "legendre/curve.hpp"

namespace legendre {

SsTable supersingular_lambdas(u64 p, u64 cap)
{
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("supersingular_lambdas: p must be an odd prime");
    SsTable t{.p = p,
              .p_prime = (p % 4 == 1) ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p),
              .fp = nullptr,
              .fp2 = nullptr,
              .deuring_poly = deuring(p)};
    t.fp = t.deuring_poly.field_ptr();
    require_within_cap(p * p, cap, "supersingular_lambdas");
    t.fp2 = make_field(p, 2);
    for (const Fe& r : roots_in(t.deuring_poly, t.fp2, cap)) {
        t.roots_fp2.push_back(r.index());
        if (t.fp2->in_prime_subfield(r.index()))
            t.roots_fp.push_back(r.index());
    }
    if (t.roots_fp2.size() != (p - 1) / 2)
        throw std::logic_error("Deuring polynomial does not have (p-1)/2 distinct roots in F_{p^2}");
    t.s_p = t.roots_fp.size();
    if (p % 4 == 3 && p > 3)
        t.h = class_number(p);
    return t;
}

bool verify_ss_structure(const SsTable& t)
{
    const u64 side = static_cast<u64>(std::abs(t.p_prime - 1));
    for (Elem l : t.roots_fp2) {
        const Curve E = legendre_curve(t.fp2, l);
        const auto [d1, d2] = group_structure(E);
        if (d1 != side || d2 != side)
            return false;
    }
    return true;
}

bool verify_ss_structure(u64 p, u64 cap) { return verify_ss_structure(supersingular_lambdas(p, cap)); }

EighthPowerCheck eighth_power_checks(const SsTable& t)
{
    EighthPowerCheck out;
    const Field& F = *t.fp2;
    out.elementwise = true;
    for (Elem l : t.roots_fp2)
        if (!F.is_nth_power(F.neg(l), 8))
            out.elementwise = false;
    const Poly h_neg = substitute_neg(t.deuring_poly);
    const Poly rem = x_pow_mod((t.p * t.p - 1) / 8, h_neg);
    out.divisibility = rem == Poly(t.fp, std::vector<Elem>{1});
    return out;
}

bool verify_eighth_power(u64 p) { return eighth_power_checks(supersingular_lambdas(p)).ok(); }

std::vector<ReducedForm> reduced_forms(u64 p)
{
    if (p % 4 != 3 || p <= 3 || !is_prime(p))
        throw std::invalid_argument("reduced_forms: need a prime p = 3 mod 4, p > 3");
    const auto P = static_cast<std::int64_t>(p);
    std::vector<ReducedForm> out;
    // |b| <= a <= c and 4ac = b^2 + p force 3b^2 <= p.
    for (std::int64_t b = 1; 3 * b * b <= P; b += 2) {
        const std::int64_t ac = (b * b + P) / 4;
        for (std::int64_t a = b; a * a <= ac; ++a) {
            if (ac % a != 0)
                continue;
            const std::int64_t c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            out.push_back({a, b, c});
            if (b != a && a != c)
                out.push_back({a, -b, c});
        }
    }
    return out;
}

u64 class_number(u64 p) { return reduced_forms(p).size(); }

bool verify_sp_formula(const SsTable& t)
{
    if (t.p == 3)
        return t.s_p == 1;
    if (t.p % 4 == 1)
        return t.s_p == 0;
    return t.h && t.s_p == 3 * *t.h;
}

bool verify_sp_formula(u64 p) { return verify_sp_formula(supersingular_lambdas(p)); }

}  // namespace legendre
