#include "legendre/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "legendre/char2.hpp"
#include "legendre/classify.hpp"
#include "legendre/cli.hpp"
#include "legendre/curve.hpp"
#include "legendre/parallel.hpp"
#include "legendre/poly.hpp"
#include "legendre/stats.hpp"
#include "legendre/supersingular.hpp"

namespace legendre::verify {

namespace {

using Clock = std::chrono::steady_clock;

FieldPtr field_of(u64 q)
{
    const auto pn = prime_power_split(q);
    return make_field(pn->first, pn->second);
}

// Runs one check per item; the first non-empty message (in item order) fails
// the criterion.
template <class Item, class Check>
CriterionResult run_items(int id, std::string label, const std::vector<Item>& items, Options opt,
                          Check check)
{
    const auto start = Clock::now();
    CriterionResult res{.id = id, .label = std::move(label)};
    std::vector<std::string> msgs;
    try {
        msgs = parallel_map<std::string>(items.size(), opt.jobs,
                                         [&](std::size_t i) { return check(items[i]); });
    } catch (const std::exception& e) {
        msgs = {std::string("exception: ") + e.what()};
    }
    res.passed = true;
    for (const auto& m : msgs) {
        if (!m.empty()) {
            res.passed = false;
            res.detail = m;
            break;
        }
    }
    if (res.passed)
        res.detail = std::to_string(items.size()) + " cases";
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

std::string tag(const std::string& what, u64 q) { return what + " q=" + std::to_string(q); }

}  // namespace

CriterionResult isogeny_criterion_sweep(u64 q_max, Options opt)
{
    return run_items(1, "Legendre-isogeny criterion: 4 | N and N != (r+1)^2", odd_prime_powers(3, q_max),
                     opt, [](u64 q) -> std::string {
                         const Census c = census(q);
                         if (!c.criterion_holds)
                             return tag("criterion fails", q);
                         for (const auto& r : c.records) {
                             if (!in_hasse_interval(q, r.N))
                                 return tag("count outside Hasse interval", q);
                             if (!r.legendre_witnesses.empty() && r.N % 4 != 0)
                                 return tag("Legendre count not divisible by 4", q);
                         }
                         return {};
                     });
}

CriterionResult exception_sweep(std::vector<u64> qs, Options opt)
{
    return run_items(2, "exceptional count (r+1)^2 attained, never by a Legendre curve", qs, opt,
                     [](u64 q) -> std::string {
                         const Census c = census(q);
                         if (!c.exception || !c.exception_attained)
                             return tag("exception not attained", q);
                         if (c.exception_legendre)
                             return tag("exception attained by a Legendre curve", q);
                         const auto f = field_of(q);
                         const auto w = find_curve_with_count(*f, *c.exception);
                         const auto E = w ? split_form(f, *w) : std::nullopt;
                         if (!E)
                             return tag("exceptional curve lacks rational 2-torsion", q);
                         const u64 side = static_cast<u64>(std::llabs(normalized_r(q) + 1));
                         if (group_structure(*E) != std::make_pair(side, side))
                             return tag("exceptional curve group is not (|r+1|, |r+1|)", q);
                         return {};
                     });
}

CriterionResult stats_sweep(u64 q_max, u64 aux_max, Options opt)
{
    return run_items(3, "S(q) = (q-2)(q+1) + 1 + (-1)^((q-1)/2)", odd_prime_powers(3, q_max), opt,
                     [aux_max](u64 q) -> std::string {
                         const StatsRecord r = legendre_sum(q);
                         if (!r.formula_ok)
                             return tag("closed form for S(q) fails", q);
                         if (!r.assembly_ok)
                             return tag("S != q - 2 + S~ - S_0 - S_1", q);
                         const auto Q = static_cast<std::int64_t>(q);
                         if (q <= aux_max) {
                             if (r.aux.S_tilde != Q * Q || r.aux.S_tilde_shortcut != Q * Q)
                                 return tag("S~ != q^2", q);
                             if (r.aux.S_0 != Q - sign_minus_one(q))
                                 return tag("S_0 != q - (-1)^((q-1)/2)", q);
                             if (r.aux.S_1 != Q - 1)
                                 return tag("S_1 != q - 1", q);
                         }
                         if (q % 4 == 1 && (r.S_bar % 4 != 2 || r.S % 4 != 0))
                             return tag("S_bar = 2, S = 0 mod 4 fails", q);
                         return {};
                     });
}

CriterionResult deuring_sweep(u64 p_max, Options opt)
{
    return run_items(4, "H_p(-x) | x^((p^2-1)/8) - 1 and -lambda is an 8th power", odd_primes(3, p_max), opt,
                     [](u64 p) -> std::string {
                         const SsTable t = supersingular_lambdas(p);
                         if (t.deuring_poly.degree() != static_cast<long>((p - 1) / 2))
                             return tag("deg H_p != (p-1)/2", p);
                         if (t.roots_fp2.size() != (p - 1) / 2)
                             return tag("H_p lacks (p-1)/2 distinct roots", p);
                         const auto chk = eighth_power_checks(t);
                         if (!chk.agree())
                             return tag("eighth-power oracles disagree", p);
                         if (!chk.ok())
                             return tag("-lambda is not an 8th power", p);
                         if (root_count_by_gcd(t.deuring_poly, t.fp2) != static_cast<long>(t.roots_fp2.size()))
                             return tag("gcd root count disagrees with evaluation", p);
                         return {};
                     });
}

CriterionResult sp_sweep(u64 p_max, Options opt)
{
    return run_items(5, "s_p = 0 iff p = 1 mod 4, s_3 = 1, s_p = 3h(-p)", odd_primes(3, p_max), opt,
                     [](u64 p) -> std::string {
                         const SsTable t = supersingular_lambdas(p);
                         if (!verify_sp_formula(t))
                             return tag("s_p formula fails", p);
                         if (p % 4 == 3) {
                             if (t.s_p % 2 != 1)
                                 return tag("s_p is even", p);
                             const Field& F = *t.fp;
                             if (t.deuring_poly.eval(F.neg(1)) != 0)
                                 return tag("H_p(-1) != 0", p);
                         }
                         if (t.h && !(static_cast<double>(*t.h) > std::log(static_cast<double>(p)) / 55.0))
                             return tag("h(-p) <= log(p)/55", p);
                         // Supersingular curves over F_p (p > 3) have p + 1 points.
                         if (p > 3)
                             for (Elem l : t.roots_fp)
                                 if (count_points(legendre_curve(t.fp, l)) != p + 1)
                                     return tag("F_p root with #E != p + 1", p);
                         return {};
                     });
}

CriterionResult structure_sweep(u64 p_max, Options opt)
{
    return run_items(6, "E_lambda(F_{p^2}) = (Z/(p'-1))^2 for supersingular lambda", odd_primes(3, p_max), opt,
                     [](u64 p) -> std::string {
                         const SsTable t = supersingular_lambdas(p);
                         if (!verify_ss_structure(t))
                             return tag("group structure is not (|p'-1|, |p'-1|)", p);
                         const auto side = static_cast<u64>(std::llabs(t.p_prime - 1));
                         for (Elem l : t.roots_fp2) {
                             const Curve E = legendre_curve(t.fp2, l);
                             if (count_points(E) != side * side)
                                 return tag("#E != (p'-1)^2", p);
                             if (!full_four_torsion_rational(E))
                                 return tag("full 4-torsion not rational", p);
                             if (!t.fp2->is_nth_power(l, 4))
                                 return tag("lambda is not a 4th power", p);
                         }
                         return {};
                     });
}

CriterionResult four_torsion_sweep(u64 q_max, Options opt)
{
    return run_items(7, "orbit isomorphism <=> -1, lambda, 1-lambda squares <=> E[4] = (Z/4)^2",
                     odd_prime_powers(3, q_max), opt, [](u64 q) -> std::string {
                         const auto f = field_of(q);
                         const Field& F = *f;
                         const Elem m1 = F.neg(1), two = F.from_int(2), half = F.inv(two);
                         for (Elem l = 2; l < q; ++l) {
                             if (l == m1 || l == two || l == half)
                                 continue;
                             const Curve E = legendre_curve(f, l);
                             bool a = true;
                             for (Elem mu : orbit(F, l))
                                 a = a && is_isomorphic(E, legendre_curve(f, mu));
                             const bool b = full_four_torsion_rational(E);
                             const bool c = four_torsion_count(E) == 16;
                             if (a != b || b != c)
                                 return tag("conditions disagree", q) + " lambda=" + F.to_string(l);
                         }
                         return {};
                     });
}

namespace {

std::string descent_case(u64 q)
{
    const auto f = field_of(q);
    const Field& F = *f;
    for (Elem a = 0; a < q; ++a)
        for (Elem b = a + 1; b < q; ++b)
            for (Elem g = 0; g < q; ++g) {
                if (g == a || g == b)
                    continue;
                const Curve E(f, a, b, g, 1);
                const auto twice = doubled_points(E);
                const auto in_twice = [&](const Point& P) {
                    return std::binary_search(twice.begin(), twice.end(), P);
                };
                const int ca = F.chi(F.sub(g, a)), cb = F.chi(F.sub(g, b));
                const Point T = Point::affine(g, 0);
                if (in_twice(T) != (ca == 1 && cb == 1))
                    return tag("(gamma,0) in 2E criterion fails", q);
                if (descent_image(E, T) != std::array<int, 3>{ca, cb, ca * cb})
                    return tag("image of (gamma,0) is wrong", q);
                for (const Point& P : points(E)) {
                    if (P.infinity)
                        continue;
                    const bool trivial = descent_image(E, P) == std::array<int, 3>{1, 1, 1};
                    if (trivial != in_twice(P))
                        return tag("descent kernel differs from 2E", q);
                }
            }
    return {};
}

std::string twist_case(u64 q, bool& witnessed)
{
    const auto f = field_of(q);
    const Field& F = *f;
    std::vector<Elem> nonsquares;
    for (Elem d = 1; d < q; ++d)
        if (F.chi(d) == -1)
            nonsquares.push_back(d);
    const Elem j1728 = F.from_int(1728);
    for (Elem a = 0; a < q; ++a)
        for (Elem b = a + 1; b < q; ++b)
            for (Elem g = b + 1; g < q; ++g) {
                const Curve E(f, a, b, g, 1);
                for (Elem d : nonsquares) {
                    if (!is_isomorphic(E, twist(E, d)))
                        continue;
                    witnessed = true;
                    if (j_invariant(E) != j1728)
                        return tag("twist-isomorphic curve with j != 1728", q);
                    if (F.chi(F.neg(1)) != -1)
                        return tag("twist-isomorphic curve while -1 is a square", q);
                }
            }
    return {};
}

std::string class_case(u64 q)
{
    const auto f = field_of(q);
    const Field& F = *f;
    std::vector<std::vector<Elem>> classes;
    for (Elem l = 2; l < q; ++l) {
        const Curve E = legendre_curve(f, l);
        bool placed = false;
        for (auto& cls : classes) {
            if (is_isomorphic(E, legendre_curve(f, cls.front()))) {
                cls.push_back(l);
                placed = true;
                break;
            }
        }
        if (!placed)
            classes.push_back({l});
    }
    for (const auto& cls : classes) {
        if (j_invariant(legendre_curve(f, cls.front())) == 0)
            continue;
        if (cls.size() != 3)
            return tag("isomorphism class with j != 0 has size " + std::to_string(cls.size()) + ",", q) +
                   " lambda=" + F.to_string(cls.front());
    }
    return {};
}

}  // namespace

CriterionResult descent_twist_class_sweep(u64 descent_q_max, u64 twist_q_max, u64 class_q_max, Options opt)
{
    struct Item {
        int kind;
        u64 q;
    };
    std::vector<Item> items;
    for (u64 q : odd_prime_powers(3, descent_q_max))
        items.push_back({0, q});
    for (u64 q : odd_prime_powers(3, twist_q_max))
        items.push_back({1, q});
    for (u64 q : odd_prime_powers(5, class_q_max))
        if (q % 4 == 3 && q % 3 != 0)
            items.push_back({2, q});
    std::atomic<bool> witnessed{false};
    auto res = run_items(8, "descent kernel, twist isomorphism forces j = 1728, classes of three lambdas",
                         items, opt, [&](const Item& it) -> std::string {
                             if (it.kind == 0)
                                 return descent_case(it.q);
                             if (it.kind == 1) {
                                 bool w = false;
                                 auto m = twist_case(it.q, w);
                                 if (w)
                                     witnessed = true;
                                 return m;
                             }
                             return class_case(it.q);
                         });
    if (res.passed && !witnessed) {
        res.passed = false;
        res.detail = "no twist-isomorphic curve found; twist check is vacuous";
    }
    return res;
}

CriterionResult char2_sweep(unsigned n_max, Options opt)
{
    std::vector<unsigned> ns;
    for (unsigned n = 1; n <= n_max; ++n)
        ns.push_back(n);
    return run_items(9, "4 | #E(F_{2^n}) iff E is isomorphic to some E_lambda", ns, opt,
                     [](unsigned n) -> std::string {
                         const std::string where = " n=" + std::to_string(n);
                         const auto rep = verify_char2_prop(n);
                         if (!rep.family_divisible)
                             return "4 does not divide #E_lambda" + where;
                         if (!rep.converse)
                             return "4 | #E with Tr(beta) = 1" + where;
                         if (!rep.twist_sum)
                             return "twist counts do not sum to 2^(n+1) + 2" + where;
                         if (!rep.involution)
                             return "involution parity argument fails" + where;
                         const auto f = make_field(2, n);
                         const u64 q = f->order();
                         std::set<Elem> js;
                         for (Elem l = 1; l < q; ++l) {
                             const auto E = Char2Curve::family(f, l);
                             const u64 N = char2_count(E);
                             if (N != char2_count_trace_set(E))
                                 return "trace-set count disagrees" + where;
                             if (!in_hasse_interval(q, N))
                                 return "Hasse bound fails" + where;
                             if (!frobenius_image_check(*f, l))
                                 return "Frobenius image count mismatch" + where;
                             js.insert(E.j_invariant());
                         }
                         if (js.size() != q - 1)
                             return "j-invariants of the family are not distinct" + where;
                         return {};
                     });
}

namespace {

std::string field_properties(u64 q)
{
    const auto pn = prime_power_split(q);
    const auto f = make_field(pn->first, pn->second);
    const Field& F = *f;
    for (Elem a = 1; a < q; ++a) {
        if (F.mul(a, F.inv(a)) != 1 || F.pow(a, q - 1) != 1)
            return tag("inverse or Fermat fails", q);
        if (F.add(a, F.neg(a)) != 0)
            return tag("additive inverse fails", q);
    }
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b) {
            if (F.mul(a, b) != F.mul(b, a) || F.add(a, b) != F.add(b, a))
                return tag("commutativity fails", q);
            for (Elem c = 0; c < q; c += (q > 32 ? 7 : 1))
                if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)))
                    return tag("distributivity fails", q);
        }
    if (F.characteristic() == 2) {
        u64 zero = 0;
        for (Elem a = 0; a < q; ++a) {
            zero += F.trace2(a) == 0;
            if (F.trace2(F.sqr(a)) != F.trace2(a))
                return tag("Tr(a^2) != Tr(a)", q);
            for (Elem b = 0; b < q; ++b)
                if (F.trace2(F.add(a, b)) != (F.trace2(a) ^ F.trace2(b)))
                    return tag("trace not additive", q);
        }
        if (zero != q / 2)
            return tag("trace-0 count != 2^(n-1)", q);
        return {};
    }
    u64 squares = 0;
    for (Elem a = 1; a < q; ++a) {
        const int ca = F.chi(a);
        squares += ca == 1;
        for (Elem b = 1; b < q; ++b)
            if (F.chi(F.mul(a, b)) != ca * F.chi(b))
                return tag("chi not multiplicative", q);
        const auto r = F.sqrt(a);
        if (r.has_value() != (ca == 1))
            return tag("sqrt existence disagrees with chi", q);
        if (r && (F.sqr(*r) != a || *r > F.neg(*r)))
            return tag("sqrt wrong or not canonical", q);
    }
    if (squares != (q - 1) / 2)
        return tag("square count != (q-1)/2", q);
    for (u64 m : {2, 4, 8}) {
        std::set<Elem> powers;
        for (Elem b = 1; b < q; ++b)
            powers.insert(F.pow(b, m));
        for (Elem a = 1; a < q; ++a)
            if (F.is_nth_power(a, m) != powers.contains(a))
                return tag("is_nth_power disagrees with enumeration", q);
    }
    return {};
}

std::string group_properties(u64 q)
{
    const auto f = field_of(q);
    const Field& F = *f;
    std::mt19937_64 rng(0x5eed + q);
    Elem nonsquare = 0;
    for (Elem d = 1; d < q && !nonsquare; ++d)
        if (F.chi(d) == -1)
            nonsquare = d;
    const u64 hasse = isqrt(4 * q);
    for (Elem l = 2; l < q; ++l) {
        const Curve E = legendre_curve(f, l);
        const u64 N = count_points(E);
        const u64 Nt = count_points(twist(E, nonsquare));
        if (N + Nt != 2 * q + 2)
            return tag("twist counts do not sum to 2q + 2", q);
        if (!in_hasse_interval(q, N) || (N > q + 1 + hasse) || (N + hasse < q + 1))
            return tag("Hasse bound fails", q);
        if (N % 4 != 0)
            return tag("Legendre count not divisible by 4", q);
        for (const Curve& C : {E, twist(E, nonsquare)}) {
            const auto pts = points(C);
            if (pts.size() != count_points(C))
                return tag("point list disagrees with character sum", q);
            for (const Point& P : pts) {
                if (!add(C, P, neg(C, P)).infinity || add(C, P, Point::at_infinity()) != P)
                    return tag("identity or inverse fails", q);
            }
            const auto check = [&](const Point& P, const Point& Q, const Point& R) {
                return add(C, add(C, P, Q), R) == add(C, P, add(C, Q, R)) && add(C, P, Q) == add(C, Q, P);
            };
            if (q <= 13) {
                for (const Point& P : pts)
                    for (const Point& Q : pts)
                        for (const Point& R : pts)
                            if (!check(P, Q, R))
                                return tag("associativity fails", q);
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
                for (int k = 0; k < 100; ++k)
                    if (!check(pts[pick(rng)], pts[pick(rng)], pts[pick(rng)]))
                        return tag("associativity fails", q);
            }
        }
        const auto orb = orbit(F, l);
        const Elem j = j_invariant(E);
        for (Elem mu : orb)
            if (j_invariant(legendre_curve(f, mu)) != j)
                return tag("j not constant on orbit", q);
        const std::size_t s = orb.size();
        if (s != 1 && s != 2 && s != 3 && s != 6)
            return tag("orbit size not in {1,2,3,6}", q);
        const Elem special = F.add(F.sub(F.sqr(l), l), 1);
        const bool generic = l != F.neg(1) && l != F.from_int(2) && l != F.inv(F.from_int(2)) && special != 0;
        if (generic && s != 6)
            return tag("generic orbit does not have 6 elements", q);
        if (const auto img = two_isogenous_curve(E); img && count_points(*img) != N)
            return tag("2-isogenous curve has a different count", q);
    }
    return {};
}

std::string determinism()
{
    const std::vector<cli::RunConfig> configs = {
        {.command = "census", .q_min = 3, .q_max = 30, .format = "json"},
        {.command = "stats", .q_min = 3, .q_max = 60, .format = "csv"},
        {.command = "supersingular", .q_min = 3, .q_max = 60, .format = "json"},
        {.command = "classify", .q_min = 25, .q_max = 25, .format = "csv"},
        {.command = "char2", .n_min = 1, .n_max = 6, .format = "json"},
    };
    for (auto cfg : configs) {
        std::string first;
        for (unsigned jobs : {1u, 4u, 1u, 3u}) {
            cfg.jobs = jobs;
            std::ostringstream out, err;
            if (cli::run(cfg, out, err) != 0)
                return "command " + cfg.command + " failed: " + err.str();
            if (first.empty())
                first = out.str();
            else if (out.str() != first)
                return "output of " + cfg.command + " depends on run or job count";
        }
    }
    return {};
}

}  // namespace

CriterionResult infrastructure_sweep(u64 q_max, Options opt)
{
    struct Item {
        int kind;
        u64 q;
    };
    std::vector<Item> items;
    for (u64 q : odd_prime_powers(3, q_max)) {
        items.push_back({0, q});
        items.push_back({1, q});
    }
    for (u64 q = 2; q <= 128; q *= 2)
        items.push_back({0, q});
    items.push_back({2, 0});
    return run_items(10, "field and group-law properties, byte-identical output", items, opt,
                     [](const Item& it) -> std::string {
                         switch (it.kind) {
                         case 0:
                             return field_properties(it.q);
                         case 1:
                             return group_properties(it.q);
                         default:
                             return determinism();
                         }
                     });
}

std::vector<CriterionResult> run_all(Options opt)
{
    return {isogeny_criterion_sweep(199, opt),     exception_sweep({9, 25, 49, 81, 121, 169}, opt),
            stats_sweep(1000, 343, opt), deuring_sweep(200, opt),
            sp_sweep(500, opt),          structure_sweep(31, opt),
            four_torsion_sweep(121, opt), descent_twist_class_sweep(49, 49, 100, opt),
            char2_sweep(10, opt),        infrastructure_sweep(121, opt)};
}

}  // namespace legendre::verify
