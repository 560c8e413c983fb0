#include "legendre/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "legendre/error.hpp"

namespace legendre {

bool in_hasse_interval(u64 q, u64 N)
{
    const std::int64_t t = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(N);
    return static_cast<u128>(static_cast<__int128>(t) * t) <= static_cast<u128>(4) * q;
}

std::pair<u64, u64> hasse_bounds(u64 q)
{
    const u64 s = isqrt(4 * q);  // floor(2 sqrt q)
    return {q + 1 - s, q + 1 + s};
}

bool is_square(u64 q)
{
    const u64 s = isqrt(q);
    return s * s == q;
}

std::int64_t normalized_r(u64 q)
{
    if (!is_square(q))
        throw std::invalid_argument("normalized_r: q is not a square");
    const auto s = static_cast<std::int64_t>(isqrt(q));
    return ((s % 4) + 4) % 4 == 1 ? s : -s;
}

bool predict_legendre_isogenous(u64 q, u64 N)
{
    if (!in_hasse_interval(q, N))
        throw std::out_of_range("point count outside the Hasse interval");
    if (N % 4 != 0)
        return false;
    if (!is_square(q))
        return true;
    const std::int64_t r1 = normalized_r(q) + 1;
    return static_cast<std::int64_t>(N) != r1 * r1;
}

std::vector<u64> legendre_counts(const Field& f, u64 cap)
{
    require_within_cap(f.order(), cap, "legendre_counts");
    const u64 q = f.order();
    // chi(x(x-1)) is shared by every lambda.
    std::vector<Elem> base(q);
    for (Elem x = 0; x < q; ++x)
        base[x] = f.mul(x, f.sub(x, 1));
    std::vector<u64> out(q, 0);
    for (Elem l = 2; l < q; ++l) {
        std::int64_t s = 0;
        for (Elem x = 0; x < q; ++x)
            s += f.chi(f.mul(base[x], f.sub(x, l)));
        out[l] = static_cast<u64>(static_cast<std::int64_t>(q) + 1 + s);
    }
    return out;
}

std::optional<Elem> find_witness(const Field& f, u64 N, u64 cap)
{
    const auto counts = legendre_counts(f, cap);
    for (Elem l = 2; l < f.order(); ++l)
        if (counts[l] == N)
            return l;
    return std::nullopt;
}

std::optional<Elem> find_witness(u64 q, u64 N, u64 cap)
{
    const auto pn = prime_power_split(q);
    if (!pn || pn->first == 2)
        throw std::invalid_argument("find_witness: q must be an odd prime power");
    require_within_cap(q, cap, "find_witness");
    const auto f = make_field(pn->first, pn->second);
    return find_witness(*f, N, cap);
}

bool is_nonsingular(const Field& f, const Weierstrass& w)
{
    const auto [a, b, c] = w;
    // a^2 b^2 - 4 b^3 - 4 a^3 c - 27 c^2 + 18 a b c
    const Elem a2 = f.sqr(a), b2 = f.sqr(b);
    Elem d = f.mul(a2, b2);
    d = f.sub(d, f.mul(f.from_int(4), f.mul(b2, b)));
    d = f.sub(d, f.mul(f.from_int(4), f.mul(f.mul(a2, a), c)));
    d = f.sub(d, f.mul(f.from_int(27), f.sqr(c)));
    d = f.add(d, f.mul(f.from_int(18), f.mul(f.mul(a, b), c)));
    return d != 0;
}

u64 count_weierstrass(const Field& f, const Weierstrass& w)
{
    const auto [a, b, c] = w;
    std::int64_t s = 0;
    for (Elem x = 0; x < f.order(); ++x) {
        const Elem v = f.add(f.mul(f.add(f.mul(f.add(x, a), x), b), x), c);
        s += f.chi(v);
    }
    return static_cast<u64>(static_cast<std::int64_t>(f.order()) + 1 + s);
}

namespace {

// Calls visit(w, count) for every nonsingular curve of the sweep until it
// returns false.
template <class Visit>
void sweep_all_curves(const Field& f, u64 cap, Visit&& visit)
{
    if (f.characteristic() == 2)
        throw std::invalid_argument("all-curve sweep needs odd characteristic");
    require_within_cap(f.order(), cap, "all-curve sweep");
    const u64 q = f.order();
    std::vector<int> chi(q);
    for (Elem v = 0; v < q; ++v)
        chi[v] = f.chi(v);
    std::vector<Elem> partial(q);
    const bool char3 = f.characteristic() == 3;
    const u64 a_range = char3 ? q : 1;
    for (Elem a = 0; a < a_range; ++a) {
        for (Elem b = 0; b < q; ++b) {
            for (Elem x = 0; x < q; ++x)
                partial[x] = f.mul(f.add(f.mul(f.add(x, a), x), b), x);
            for (Elem c = 0; c < q; ++c) {
                const Weierstrass w{a, b, c};
                if (!is_nonsingular(f, w))
                    continue;
                std::int64_t s = 0;
                for (Elem x = 0; x < q; ++x)
                    s += chi[f.add(partial[x], c)];
                if (!visit(w, static_cast<u64>(static_cast<std::int64_t>(q) + 1 + s)))
                    return;
            }
        }
    }
}

}  // namespace

std::vector<u64> attainable_counts(const Field& f, u64 cap)
{
    std::set<u64> seen;
    sweep_all_curves(f, cap, [&](const Weierstrass&, u64 n) {
        seen.insert(n);
        return true;
    });
    return {seen.begin(), seen.end()};
}

std::optional<Weierstrass> find_curve_with_count(const Field& f, u64 N, u64 cap)
{
    std::optional<Weierstrass> found;
    sweep_all_curves(f, cap, [&](const Weierstrass& w, u64 n) {
        if (n != N)
            return true;
        found = w;
        return false;
    });
    return found;
}

std::optional<Curve> split_form(const FieldPtr& f, const Weierstrass& w)
{
    const auto [a, b, c] = w;
    std::vector<Elem> roots;
    for (Elem x = 0; x < f->order(); ++x) {
        const Elem v = f->add(f->mul(f->add(f->mul(f->add(x, a), x), b), x), c);
        if (v == 0)
            roots.push_back(x);
    }
    if (roots.size() != 3)
        return std::nullopt;
    return Curve(f, roots[0], roots[1], roots[2], 1);
}

Census census(u64 q, u64 cap)
{
    const auto pn = prime_power_split(q);
    if (!pn || pn->first == 2)
        throw std::invalid_argument("census: q must be an odd prime power");
    require_within_cap(q, cap, "census");
    const auto f = make_field(pn->first, pn->second);

    Census out;
    out.q = q;
    const auto attained = attainable_counts(*f, cap);
    const auto counts = legendre_counts(*f);
    std::set<u64> lset;
    for (Elem l = 2; l < q; ++l)
        lset.insert(counts[l]);
    out.legendre_attained.assign(lset.begin(), lset.end());

    if (is_square(q)) {
        const std::int64_t r1 = normalized_r(q) + 1;
        out.exception = static_cast<u64>(r1 * r1);
    }

    std::set<u64> predicted;
    bool consistent = true;
    for (u64 N : attained) {
        ClassRecord rec;
        rec.q = q;
        rec.N = N;
        for (Elem l = 2; l < q; ++l)
            if (counts[l] == N)
                rec.legendre_witnesses.push_back(l);
        rec.legendre_isogenous = !rec.legendre_witnesses.empty();
        if (N % 4 != 0)
            rec.excluded_reason = kReasonNotDivisibleBy4;
        else if (out.exception && N == *out.exception)
            rec.excluded_reason = kReasonException;
        const bool pred = predict_legendre_isogenous(q, N);
        if (pred)
            predicted.insert(N);
        if (pred != rec.legendre_isogenous)
            consistent = false;
        if (N % 4 == 0)
            ++out.attained_multiples_of_4;
        out.records.push_back(std::move(rec));
    }

    const auto [lo, hi] = hasse_bounds(q);
    for (u64 N = lo; N <= hi; ++N)
        if (!std::binary_search(attained.begin(), attained.end(), N))
            out.unattained_in_hasse.push_back(N);

    if (out.exception) {
        out.exception_attained = std::binary_search(attained.begin(), attained.end(), *out.exception);
        out.exception_legendre = lset.contains(*out.exception);
    }
    const bool sets_equal = predicted == lset;
    const bool exception_ok = !out.exception || (out.exception_attained && !out.exception_legendre);
    out.criterion_holds = consistent && sets_equal && exception_ok;

    const double p = static_cast<double>(pn->first);
    out.density_estimate = std::sqrt(static_cast<double>(q)) * (1.0 - 1.0 / p);
    return out;
}

}  // namespace legendre
