#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "legendre/char2.hpp"
#include "oracles.hpp"

using namespace legendre;

TEST_CASE("examples over F_2 and F_4")
{
    const auto f2 = make_field(2, 1);
    const auto E = Char2Curve::family(f2, 1);
    CHECK(char2_count(E) == 4);
    CHECK(char2_points(E) == std::vector<std::pair<Elem, Elem>>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(char2_count(char2_twist(E, 1)) == 2);
    CHECK(E.j_invariant() == 1);

    const auto f4 = make_field(2, 2);
    CHECK(char2_count(Char2Curve::family(f4, 1)) % 4 == 0);

    CHECK_THROWS_AS(Char2Curve::family(f2, 0), std::domain_error);
    CHECK_THROWS(Char2Curve::family(make_field(3, 1), 1));
    CHECK_THROWS(char2_count_trace_set(Char2Curve(f4, 1, 1)));
}

TEST_CASE("counts against brute force")
{
    for (unsigned n = 1; n <= 6; ++n) {
        const auto fp = make_field(2, n);
        const Field& F = *fp;
        for (Elem b = 0; b < F.order(); ++b)
            for (Elem l = 1; l < F.order(); ++l) {
                const Char2Curve E(fp, b, l);
                const u64 N = char2_count(E);
                CHECK(N == oracle::brute_char2(F, b, 0, l));
                CHECK(N == char2_count_brute(F, b, 0, l));
                const auto pts = char2_points(E);
                CHECK(pts.size() + 1 == N);
                for (const auto& [x, y] : pts)
                    CHECK(E.contains(x, y));
                CHECK(std::is_sorted(pts.begin(), pts.end()));
                if (b == 0)
                    CHECK(char2_count_trace_set(E) == N);
            }
    }
}

TEST_CASE("family divisibility, converse and twists")
{
    for (unsigned n = 1; n <= 8; ++n) {
        const auto fp = make_field(2, n);
        const Field& F = *fp;
        const u64 q = F.order();
        Elem a = 1;
        while (F.trace2(a) == 0)
            ++a;
        for (Elem l = 1; l < q; ++l) {
            const u64 N0 = char2_count(Char2Curve::family(fp, l));
            CHECK(N0 % 4 == 0);
            CHECK(N0 + char2_count(char2_twist(Char2Curve::family(fp, l), a)) == 2 * q + 2);
            for (Elem b = 0; b < q; ++b) {
                const u64 N = char2_count(Char2Curve(fp, b, l));
                CHECK(N == (F.trace2(b) == 0 ? N0 : 2 * q + 2 - N0));
                if (N % 4 == 0)
                    CHECK(F.trace2(b) == 0);
            }
        }
        const auto rep = verify_char2_prop(n);
        CHECK(rep.family_divisible);
        CHECK(rep.converse);
        CHECK(rep.twist_sum);
        CHECK(rep.involution);
        CHECK(rep.ok());
    }
}

TEST_CASE("frobenius image")
{
    for (unsigned n = 1; n <= 7; ++n) {
        const auto fp = make_field(2, n);
        const Field& F = *fp;
        for (Elem l = 1; l < F.order(); ++l) {
            CHECK(frobenius_image_check(F, l));
            const u64 a = oracle::brute_char2(F, 0, 0, F.mul(l, l));
            CHECK(a == oracle::brute_char2(F, 0, l, 0));
            CHECK(a == oracle::brute_char2(F, 0, 0, l));
            CHECK(char2_count_model(F, 0, l, 0) == a);
        }
    }
}

TEST_CASE("half trace")
{
    for (unsigned n : {1u, 3u, 5u, 7u, 9u}) {
        const auto fp = make_field(2, n);
        const Field& F = *fp;
        for (Elem w = 0; w < F.order(); ++w) {
            if (F.trace2(w) != 0)
                continue;
            const Elem z = half_trace(F, w);
            CHECK(F.add(F.mul(z, z), z) == w);
        }
    }
    CHECK_THROWS(half_trace(*make_field(2, 4), 0));
}
