#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "legendre/classify.hpp"
#include "legendre/error.hpp"
#include "legendre/poly.hpp"
#include "oracles.hpp"

using namespace legendre;

namespace {

// Point counts of every nonsingular y^2 = x^3 + a x^2 + b x + c, with
// smoothness decided by gcd(f, f') and points found by scanning (x, y).
std::set<u64> brute_attained(const FieldPtr& fp)
{
    const Field& F = *fp;
    const u64 q = F.order();
    std::set<u64> out;
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
            for (Elem c = 0; c < q; ++c) {
                const Poly f(fp, {c, b, a, 1});
                const Poly df(fp, {b, F.mul(2, a), 3 % F.characteristic()});
                if (poly_gcd(f, df).degree() > 0)
                    continue;
                u64 n = 1;
                for (Elem x = 0; x < q; ++x)
                    for (Elem y = 0; y < q; ++y)
                        n += F.mul(y, y) == f.eval(x);
                out.insert(n);
            }
    return out;
}

std::set<u64> brute_legendre(const FieldPtr& fp)
{
    std::set<u64> out;
    for (Elem l = 2; l < fp->order(); ++l)
        out.insert(oracle::brute_count(legendre_curve(fp, l)));
    return out;
}

}  // namespace

TEST_CASE("hasse helpers")
{
    CHECK(hasse_bounds(9) == std::pair<u64, u64>{4, 16});
    CHECK(hasse_bounds(5) == std::pair<u64, u64>{2, 10});
    CHECK(in_hasse_interval(5, 2));
    CHECK(!in_hasse_interval(5, 11));
    CHECK(is_square(49));
    CHECK(!is_square(27));
    CHECK(normalized_r(9) == -3);
    CHECK(normalized_r(25) == 5);
    CHECK(normalized_r(49) == -7);
    CHECK(normalized_r(81) == 9);
    CHECK_THROWS(normalized_r(27));
}

TEST_CASE("predicted Legendre isogeny classes")
{
    CHECK(!predict_legendre_isogenous(9, 4));
    CHECK(predict_legendre_isogenous(9, 16));
    CHECK(!predict_legendre_isogenous(5, 6));
    CHECK(predict_legendre_isogenous(5, 8));
    CHECK(!predict_legendre_isogenous(25, 36));
    CHECK_THROWS_AS(predict_legendre_isogenous(5, 11), std::out_of_range);
}

TEST_CASE("witnesses")
{
    CHECK(find_witness(5, 8) == Elem{2});
    CHECK(find_witness(5, 4) == Elem{3});
    CHECK(!find_witness(9, 4).has_value());
    const auto f11 = make_field(11, 1);
    const auto counts = legendre_counts(*f11);
    for (Elem l = 2; l < 11; ++l)
        CHECK(counts[l] == count_points(legendre_curve(f11, l)));
}

TEST_CASE("all-curves oracle against brute force")
{
    for (u64 q : {3, 5, 7, 9, 11, 13}) {
        const auto [p, n] = *prime_power_split(q);
        const auto fp = make_field(p, n);
        const auto att = attainable_counts(*fp);
        CHECK(std::set<u64>(att.begin(), att.end()) == brute_attained(fp));
        for (u64 N : att) {
            const auto w = find_curve_with_count(*fp, N);
            REQUIRE(w.has_value());
            CHECK(is_nonsingular(*fp, *w));
            CHECK(count_weierstrass(*fp, *w) == N);
        }
    }
    CHECK_THROWS(attainable_counts(*make_field(211, 1)));
}

TEST_CASE("split form")
{
    const auto f9 = make_field(3, 2);
    const auto w = find_curve_with_count(*f9, 4);
    REQUIRE(w.has_value());
    const auto E = split_form(f9, *w);
    REQUIRE(E.has_value());
    CHECK(count_points(*E) == 4);
    CHECK(group_structure(*E) == std::pair<u64, u64>{2, 2});
    // x^3 + x + 1 is irreducible over F_5
    CHECK(!split_form(make_field(5, 1), {0, 1, 1}).has_value());
}

TEST_CASE("census examples")
{
    const Census c9 = census(9);
    std::vector<u64> mult4;
    for (const auto& r : c9.records)
        if (r.N % 4 == 0)
            mult4.push_back(r.N);
    CHECK(mult4 == std::vector<u64>{4, 8, 12, 16});
    CHECK(c9.legendre_attained == std::vector<u64>{8, 12, 16});
    CHECK(c9.exception == u64{4});
    CHECK(c9.exception_attained);
    CHECK(!c9.exception_legendre);
    CHECK(c9.criterion_holds);
    for (const auto& r : c9.records) {
        if (r.N == 4) {
            CHECK(r.legendre_witnesses.empty());
            CHECK(r.excluded_reason == kReasonException);
        } else if (r.N % 4 != 0) {
            CHECK(r.excluded_reason == kReasonNotDivisibleBy4);
        } else {
            CHECK(r.excluded_reason.empty());
            CHECK(r.legendre_isogenous);
        }
    }

    const Census c7 = census(7);
    CHECK(c7.legendre_attained == std::vector<u64>{4, 8, 12});
    CHECK(!c7.exception.has_value());

    const Census c3 = census(3);
    CHECK(c3.legendre_attained == std::vector<u64>{4});
    CHECK(find_witness(3, 4) == Elem{2});
}

TEST_CASE("census agrees with brute force for small q")
{
    for (u64 q : {3, 5, 7, 9, 11, 13, 17, 19, 25, 27}) {
        const auto [p, n] = *prime_power_split(q);
        const auto fp = make_field(p, n);
        const Census c = census(q);
        CHECK(c.criterion_holds);
        const auto leg = brute_legendre(fp);
        CHECK(std::set<u64>(c.legendre_attained.begin(), c.legendre_attained.end()) == leg);
        for (const auto& r : c.records) {
            CHECK(in_hasse_interval(q, r.N));
            CHECK(r.legendre_isogenous == !r.legendre_witnesses.empty());
            CHECK(r.legendre_isogenous == predict_legendre_isogenous(q, r.N));
            CHECK(std::is_sorted(r.legendre_witnesses.begin(), r.legendre_witnesses.end()));
        }
    }
}

TEST_CASE("census caps")
{
    CHECK_THROWS(census(4));
    CHECK_THROWS(census(15));
    CHECK_THROWS_AS(census(211), CapExceeded);
    CHECK(census(211, 211).criterion_holds);
}
