#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "legendre/stats.hpp"
#include "oracles.hpp"

using namespace legendre;

namespace {

// Literal triple scan over (x, y, lambda).
std::int64_t brute_S_tilde(const Field& F)
{
    std::int64_t n = 0;
    for (Elem l = 0; l < F.order(); ++l)
        for (Elem x = 0; x < F.order(); ++x) {
            const Elem rhs = F.mul(F.mul(x, F.sub(x, 1)), F.sub(x, l));
            for (Elem y = 0; y < F.order(); ++y)
                n += F.mul(y, y) == rhs;
        }
    return n;
}

}  // namespace

TEST_CASE("examples")
{
    CHECK(legendre_sum(5).S == 20);
    CHECK(legendre_sum(3).S == 4);
    CHECK(legendre_sum(7).S == 40);
    CHECK(legendre_sum(5).S_bar == 18);
    CHECK(legendre_sum(5).delta() == 2);
    CHECK(legendre_sum(7).delta() == 0);

    const auto a5 = auxiliary_counts(5);
    CHECK(a5.S_tilde == 25);
    CHECK(a5.S_0 == 4);
    CHECK(a5.S_1 == 4);
    const auto a7 = auxiliary_counts(7);
    CHECK(a7.S_tilde == 49);
    CHECK(a7.S_0 == 8);
    CHECK(a7.S_1 == 6);
    const auto a3 = auxiliary_counts(3);
    CHECK(a3.S_tilde == 9);
    CHECK(a3.S_0 == 4);
    CHECK(a3.S_1 == 2);

    CHECK(sign_minus_one(5) == 1);
    CHECK(sign_minus_one(7) == -1);
    CHECK(sign_minus_one(9) == 1);
    CHECK_THROWS(legendre_sum(8));
}

TEST_CASE("closed form and assembly")
{
    for (u64 q : odd_prime_powers(3, 400)) {
        const StatsRecord r = legendre_sum(q);
        CHECK(r.formula_ok);
        CHECK(r.assembly_ok);
        CHECK(r.S_bar == static_cast<std::int64_t>((q - 2) * (q + 1)));
        CHECK(r.delta() == 1 + sign_minus_one(q));
        CHECK(r.aux.S_tilde == r.aux.S_tilde_shortcut);
    }
}

TEST_CASE("auxiliary counts against triple scan")
{
    for (u64 q : odd_prime_powers(3, 50)) {
        const auto [p, n] = *prime_power_split(q);
        const auto f = make_field(p, n);
        const auto a = auxiliary_counts(q);
        CHECK(a.S_tilde == brute_S_tilde(*f));
        CHECK(a.S_tilde == static_cast<std::int64_t>(q * q));
    }
}
