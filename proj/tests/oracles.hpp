#pragma once

// Brute-force reference computations. Nothing here calls the routine it is
// used to check: counts come from scanning (x, y) pairs, orders from
// repeated addition, class numbers from the analytic formula.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "legendre/arith.hpp"
#include "legendre/curve.hpp"
#include "legendre/field.hpp"
#include "legendre/poly.hpp"

namespace oracle {

using legendre::Elem;
using legendre::Field;
using legendre::u64;

/// #{(x, y) : delta y^2 = (x-a)(x-b)(x-c)} + 1.
inline u64 brute_count(const legendre::Curve& E)
{
    const Field& F = E.field();
    u64 n = 1;
    for (Elem x = 0; x < F.order(); ++x) {
        const Elem rhs = F.mul(F.mul(F.sub(x, E.alpha()), F.sub(x, E.beta())), F.sub(x, E.gamma()));
        for (Elem y = 0; y < F.order(); ++y)
            if (F.mul(E.delta(), F.mul(y, y)) == rhs)
                ++n;
    }
    return n;
}

/// Order of P by adding P to itself until reaching infinity.
inline u64 brute_order(const legendre::Curve& E, const legendre::Point& P)
{
    u64 k = 1;
    legendre::Point acc = P;
    while (!acc.infinity) {
        acc = legendre::add(E, acc, P);
        ++k;
    }
    return k;
}

/// Squares of F_q^* by squaring every element.
inline std::set<Elem> squares(const Field& F)
{
    std::set<Elem> s;
    for (Elem y = 1; y < F.order(); ++y)
        s.insert(F.mul(y, y));
    return s;
}

/// Multiplicative order of a by repeated multiplication.
inline u64 mult_order(const Field& F, Elem a)
{
    u64 k = 1;
    for (Elem x = a; x != 1; x = F.mul(x, a))
        ++k;
    return k;
}

/// Tr(a) = a + a^2 + ... + a^(2^(n-1)) by repeated squaring with mul.
inline Elem brute_trace(const Field& F, Elem a)
{
    Elem s = 0, x = a;
    for (unsigned i = 0; i < F.degree(); ++i) {
        s = F.add(s, x);
        x = F.mul(x, x);
    }
    return s;
}

/// h(-p) = -(1/p) sum_{a=1}^{p-1} a (a/p) for primes p = 3 mod 4, p > 3.
inline u64 analytic_class_number(u64 p)
{
    std::int64_t s = 0;
    for (u64 a = 1; a < p; ++a) {
        const u64 e = legendre::powmod(a, (p - 1) / 2, p);
        s += (e == 1 ? 1 : -1) * static_cast<std::int64_t>(a);
    }
    return static_cast<u64>(-s / static_cast<std::int64_t>(p));
}

/// Exact binomial coefficient for small arguments.
inline u64 binom(u64 n, u64 k)
{
    u64 r = 1;
    for (u64 i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// F_q-isomorphism of y^2 = cubic models by trying every x -> u^2 x + r.
inline bool brute_isomorphic(const legendre::Curve& E, const legendre::Curve& E2)
{
    const Field& F = E.field();
    auto a = E.scaled_roots();
    std::sort(a.begin(), a.end());
    const auto& b = E2.scaled_roots();
    for (Elem u = 1; u < F.order(); ++u) {
        const Elem w = F.mul(u, u);
        for (Elem r = 0; r < F.order(); ++r) {
            std::array<Elem, 3> img;
            for (int i = 0; i < 3; ++i)
                img[i] = F.add(F.mul(w, b[i]), r);
            std::sort(img.begin(), img.end());
            if (img == a)
                return true;
        }
    }
    return false;
}

/// #{(x, y) : y^2 + xy = x^3 + a2 x^2 + a4 x + a6} + 1 over F_{2^n}.
inline u64 brute_char2(const Field& F, Elem a2, Elem a4, Elem a6)
{
    u64 n = 1;
    for (Elem x = 0; x < F.order(); ++x) {
        const Elem rhs = F.add(F.add(F.add(F.mul(F.mul(x, x), x), F.mul(a2, F.mul(x, x))), F.mul(a4, x)), a6);
        for (Elem y = 0; y < F.order(); ++y)
            if (F.add(F.mul(y, y), F.mul(x, y)) == rhs)
                ++n;
    }
    return n;
}

}  // namespace oracle
