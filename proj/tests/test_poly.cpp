#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "legendre/poly.hpp"
#include "oracles.hpp"

using namespace legendre;

namespace {

Poly P(const FieldPtr& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

std::vector<Elem> indices(const std::vector<Fe>& v)
{
    std::vector<Elem> out;
    for (const auto& e : v)
        out.push_back(e.index());
    return out;
}

Poly random_poly(const FieldPtr& f, std::mt19937_64& rng, int deg)
{
    std::uniform_int_distribution<Elem> d(0, f->order() - 1);
    std::vector<Elem> c(deg + 1);
    for (auto& x : c)
        x = d(rng);
    return P(f, c);
}

}  // namespace

TEST_CASE("deuring polynomial examples")
{
    CHECK(deuring(3).coeffs() == std::vector<Elem>{2, 2});
    CHECK(deuring(5).coeffs() == std::vector<Elem>{1, 4, 1});
    CHECK(deuring(7).coeffs() == std::vector<Elem>{6, 5, 5, 6});
    CHECK_THROWS(deuring(2));
    CHECK_THROWS(deuring(9));
}

TEST_CASE("deuring polynomial against exact binomials")
{
    for (u64 p : odd_primes(3, 61)) {
        const u64 m = (p - 1) / 2;
        const Poly H = deuring(p);
        REQUIRE(H.degree() == static_cast<long>(m));
        for (u64 k = 0; k <= m; ++k) {
            const u64 c = oracle::binom(m, k) % p;
            u64 v = c * c % p;
            if (m % 2 == 1)
                v = (p - v) % p;
            CHECK(H.coeffs()[k] == v);
        }
    }
}

TEST_CASE("gcd and divisibility")
{
    const auto f5 = make_field(5, 1);
    CHECK(poly_gcd(P(f5, {4, 0, 1}), P(f5, {4, 1})).coeffs() == std::vector<Elem>{4, 1});
    CHECK(poly_gcd(P(f5, {2, 4}), Poly::zero(f5)).coeffs() == std::vector<Elem>{3, 1});
    CHECK(poly_gcd(Poly::zero(f5), Poly::zero(f5)).is_zero());

    CHECK(divides(P(f5, {1, 1}), P(f5, {4, 0, 1})));
    CHECK(!divides(P(f5, {0, 0, 1}), P(f5, {0, 1})));
    CHECK_THROWS(divides(Poly::zero(f5), P(f5, {1, 1})));

    const auto f7 = make_field(7, 1);
    const Poly H7 = deuring(7);
    const Poly x7 = Poly::x_power(f7, 7) - Poly::x_power(f7, 1);
    CHECK(poly_gcd(H7, x7).degree() == 3);
    const Poly x6m1 = Poly::x_power(f7, 6) - P(f7, {1});
    CHECK(divides(substitute_neg(H7), x6m1));
}

TEST_CASE("division identity and gcd characterisation")
{
    std::mt19937_64 rng(7);
    for (auto fp : {make_field(5, 1), make_field(7, 1), make_field(3, 2)}) {
        for (int i = 0; i < 300; ++i) {
            const Poly f = random_poly(fp, rng, 1 + static_cast<int>(rng() % 4));
            const Poly h = random_poly(fp, rng, static_cast<int>(rng() % 4));
            if (f.is_zero())
                continue;
            const Poly g = (i % 2 == 0) ? f * h : random_poly(fp, rng, static_cast<int>(rng() % 7));
            const auto [quo, rem] = divmod(g, f);
            CHECK(quo * f + rem == g);
            CHECK(rem.degree() < f.degree());
            CHECK(divides(f, g) == (poly_gcd(f, g) == f.monic()));
            CHECK(divides(f, g) == rem.is_zero());
        }
    }
}

TEST_CASE("substitution and evaluation")
{
    const auto f7 = make_field(7, 1);
    CHECK(substitute_neg(P(f7, {1, 1})).coeffs() == std::vector<Elem>{1, 6});
    CHECK(substitute_neg(P(f7, {0, 0, 1})).coeffs() == std::vector<Elem>{0, 0, 1});
    CHECK(substitute_neg(deuring(3)).coeffs() == std::vector<Elem>{2, 1});
    const Poly f = P(f7, {3, 0, 2, 1});
    for (Elem x = 0; x < 7; ++x) {
        const Elem expect = f7->add(f7->add(f7->pow(x, 3), f7->mul(2, f7->mul(x, x))), 3);
        CHECK(f.eval(x) == expect);
        CHECK(substitute_neg(f).eval(x) == f.eval(f7->neg(x)));
    }
}

TEST_CASE("roots in extensions")
{
    const auto f7 = make_field(7, 1);
    CHECK(indices(roots_in(deuring(7), f7)) == std::vector<Elem>{2, 4, 6});
    CHECK(roots_in(deuring(5), make_field(5, 1)).empty());
    const auto r25 = roots_in(deuring(5), make_field(5, 2));
    CHECK(r25.size() == 2);
    for (const auto& r : r25)
        CHECK(r.index() >= 5);

    for (u64 p : odd_primes(3, 40)) {
        const Poly H = deuring(p);
        const auto fp = make_field(p, 1);
        const auto fp2 = make_field(p, 2);
        CHECK(root_count_by_gcd(H, fp) == static_cast<long>(roots_in(H, fp).size()));
        CHECK(root_count_by_gcd(H, fp2) == static_cast<long>((p - 1) / 2));
        CHECK(roots_in(H, fp2).size() == (p - 1) / 2);
    }
}

TEST_CASE("roots against evaluation")
{
    std::mt19937_64 rng(11);
    for (auto fp : {make_field(5, 2), make_field(7, 2), make_field(3, 3), make_field(13, 1), make_field(2, 5)}) {
        for (int i = 0; i < 100; ++i) {
            Poly f = random_poly(fp, rng, 1 + static_cast<int>(rng() % 6));
            if (i % 3 == 0)  // force several linear factors
                for (int k = 0; k < 3; ++k)
                    f = f * P(fp, {static_cast<Elem>(rng() % fp->order()), 1});
            if (f.is_zero())
                continue;
            std::vector<Elem> expect;
            for (Elem x = 0; x < fp->order(); ++x)
                if (f.eval(x) == 0)
                    expect.push_back(x);
            CHECK(indices(roots_in(f, fp)) == expect);
        }
    }
}

TEST_CASE("embedding")
{
    const auto f5 = make_field(5, 1);
    const auto f25 = make_field(5, 2);
    const Poly e = embed(P(f5, {1, 2, 3}), f25);
    CHECK(e.field().same_as(*f25));
    CHECK(e.coeffs() == std::vector<Elem>{1, 2, 3});
    CHECK_THROWS(embed(P(f25, {7, 1}), f5));
    CHECK_THROWS(embed(P(f5, {1, 1}), make_field(7, 1)));
    CHECK_THROWS(P(f5, {1}) + P(f25, {1}));
}

TEST_CASE("powers of x modulo a polynomial")
{
    const auto f7 = make_field(7, 1);
    const Poly m = P(f7, {1, 2, 0, 1});
    Poly acc = P(f7, {1});
    for (u64 e = 0; e < 40; ++e) {
        CHECK(x_pow_mod(e, m) == divmod(acc, m).remainder);
        acc = acc * Poly::x_power(f7, 1);
    }
}
