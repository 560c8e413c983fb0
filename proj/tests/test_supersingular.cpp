#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "legendre/supersingular.hpp"
#include "oracles.hpp"

using namespace legendre;

TEST_CASE("small tables")
{
    const SsTable t3 = supersingular_lambdas(3);
    CHECK(t3.roots_fp == std::vector<Elem>{2});
    CHECK(t3.s_p == 1);
    CHECK(t3.p_prime == -3);

    const SsTable t5 = supersingular_lambdas(5);
    CHECK(t5.s_p == 0);
    CHECK(t5.roots_fp2.size() == 2);
    for (Elem r : t5.roots_fp2)
        CHECK(!t5.fp2->in_prime_subfield(r));
    CHECK(t5.p_prime == 5);

    const SsTable t7 = supersingular_lambdas(7);
    CHECK(t7.roots_fp == std::vector<Elem>{2, 4, 6});
    CHECK(t7.s_p == 3);
    CHECK(t7.h == u64{1});

    CHECK_THROWS(supersingular_lambdas(9));
    CHECK_THROWS(supersingular_lambdas(2));
}

TEST_CASE("roots are supersingular")
{
    // E_lambda is supersingular iff #E(F_p) = p + 1 for roots in F_p, and
    // #E(F_{p^2}) = (p + 1)^2 or (p - 1)^2 in general.
    for (u64 p : odd_primes(3, 40)) {
        const SsTable t = supersingular_lambdas(p);
        CHECK(t.roots_fp2.size() == (p - 1) / 2);
        for (Elem r : t.roots_fp)
            CHECK(oracle::brute_count(legendre_curve(t.fp, r)) == p + 1);
        u64 ss_count = 0;
        for (Elem l = 2; l < t.fp2->order(); ++l) {
            const u64 N = count_points(legendre_curve(t.fp2, l));
            const bool ss = (N - 1) % p == 0;
            ss_count += ss;
            CHECK(ss == std::binary_search(t.roots_fp2.begin(), t.roots_fp2.end(), l));
        }
        CHECK(ss_count == (p - 1) / 2);
    }
}

TEST_CASE("group structure over F_p^2")
{
    CHECK(verify_ss_structure(3));
    CHECK(verify_ss_structure(5));
    CHECK(verify_ss_structure(7));
    const SsTable t7 = supersingular_lambdas(7);
    for (Elem l : t7.roots_fp2)
        CHECK(group_structure(legendre_curve(t7.fp2, l)) == std::pair<u64, u64>{8, 8});
    const SsTable t5 = supersingular_lambdas(5);
    for (Elem l : t5.roots_fp2)
        CHECK(group_structure(legendre_curve(t5.fp2, l)) == std::pair<u64, u64>{4, 4});
}

TEST_CASE("eighth powers")
{
    for (u64 p : odd_primes(3, 60)) {
        const auto c = eighth_power_checks(supersingular_lambdas(p));
        CHECK(c.elementwise);
        CHECK(c.divisibility);
        CHECK(c.agree());
    }
    CHECK(verify_eighth_power(11));
}

TEST_CASE("class numbers")
{
    CHECK(class_number(7) == 1);
    CHECK(class_number(23) == 3);
    CHECK(class_number(163) == 1);
    CHECK(class_number(47) == 5);
    CHECK_THROWS_AS(class_number(5), std::invalid_argument);
    CHECK_THROWS_AS(class_number(3), std::invalid_argument);
    CHECK_THROWS_AS(class_number(15), std::invalid_argument);
    for (u64 p : odd_primes(7, 2000))
        if (p % 4 == 3)
            CHECK(class_number(p) == oracle::analytic_class_number(p));

    for (const auto& f : reduced_forms(23)) {
        CHECK(f.b * f.b - 4 * f.a * f.c == -23);
        CHECK(std::abs(f.b) <= f.a);
        CHECK(f.a <= f.c);
    }
}

TEST_CASE("s_p formula")
{
    CHECK(verify_sp_formula(13));
    CHECK(verify_sp_formula(3));
    CHECK(verify_sp_formula(23));
    CHECK(supersingular_lambdas(23).s_p == 9);
    CHECK(supersingular_lambdas(13).s_p == 0);
    for (u64 p : odd_primes(3, 150)) {
        const SsTable t = supersingular_lambdas(p);
        CHECK(verify_sp_formula(t));
        if (p % 4 == 3 && p > 3)
            CHECK(t.s_p == 3 * oracle::analytic_class_number(p));
    }
}
