#include "legendre/char2.hpp"

#include <algorithm>
#include <stdexcept>

namespace legendre {

namespace {

void require_char2(const Field& f)
{
    if (f.characteristic() != 2)
        throw std::invalid_argument("expected a field of characteristic 2");
}

// x^3 + a2 x^2 + a4 x + a6
Elem rhs(const Field& f, Elem x, Elem a2, Elem a4, Elem a6)
{
    return f.add(f.mul(f.add(f.mul(f.add(x, a2), x), a4), x), a6);
}

}  // namespace

Char2Curve::Char2Curve(FieldPtr f, Elem beta, Elem lambda) : f_(std::move(f)), beta_(beta), lambda_(lambda)
{
    require_char2(*f_);
    if (beta >= f_->order() || lambda >= f_->order())
        throw std::invalid_argument("curve coefficient out of range");
    if (lambda == 0)
        throw std::domain_error("lambda must be nonzero");
}

bool Char2Curve::contains(Elem x, Elem y) const
{
    const Field& f = *f_;
    return f.add(f.sqr(y), f.mul(x, y)) == rhs(f, x, beta_, 0, lambda_);
}

u64 char2_count_model(const Field& f, Elem a2, Elem a4, Elem a6, u64 cap)
{
    require_char2(f);
    require_within_cap(f.order(), cap, "char2_count");
    u64 n = 2;  // infinity and the single point over x = 0
    for (Elem x = 1; x < f.order(); ++x) {
        const Elem w = f.div(rhs(f, x, a2, a4, a6), f.sqr(x));
        if (f.trace2(w) == 0)
            n += 2;
    }
    return n;
}

u64 char2_count(const Char2Curve& E, u64 cap)
{
    return char2_count_model(E.field(), E.beta(), 0, E.lambda(), cap);
}

u64 char2_count_trace_set(const Char2Curve& E, u64 cap)
{
    if (E.beta() != 0)
        throw std::invalid_argument("trace-set formula applies to beta = 0");
    const Field& f = E.field();
    require_within_cap(f.order(), cap, "char2_count_trace_set");
    u64 N = 0;
    for (Elem x = 1; x < f.order(); ++x)
        if (f.trace2(f.add(x, f.div(E.lambda(), f.sqr(x)))) == 0)
            ++N;
    return 2 + 2 * N;
}

Elem half_trace(const Field& f, Elem a)
{
    require_char2(f);
    if (f.degree() % 2 == 0)
        throw std::invalid_argument("half-trace needs odd degree");
    Elem s = 0, t = a;
    for (unsigned i = 0; i <= (f.degree() - 1) / 2; ++i) {
        s = f.add(s, t);
        t = f.sqr(f.sqr(t));
    }
    return s;
}

std::vector<std::pair<Elem, Elem>> char2_points(const Char2Curve& E, u64 cap)
{
    const Field& f = E.field();
    require_within_cap(f.order(), cap, "char2_points");
    std::vector<std::pair<Elem, Elem>> out;
    out.emplace_back(0, *f.sqrt(E.lambda()));
    const bool odd = f.degree() % 2 == 1;
    for (Elem x = 1; x < f.order(); ++x) {
        const Elem w = f.div(rhs(f, x, E.beta(), 0, E.lambda()), f.sqr(x));
        if (f.trace2(w) != 0)
            continue;
        Elem z = 0;
        if (odd) {
            z = half_trace(f, w);
        } else {
            while (f.add(f.sqr(z), z) != w)
                ++z;
        }
        out.emplace_back(x, f.mul(x, z));
        out.emplace_back(x, f.mul(x, f.add(z, 1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 char2_count_brute(const Field& f, Elem a2, Elem a4, Elem a6, u64 cap)
{
    require_char2(f);
    require_within_cap(f.order(), cap, "char2_count_brute");
    u64 n = 1;
    for (Elem x = 0; x < f.order(); ++x) {
        const Elem r = rhs(f, x, a2, a4, a6);
        for (Elem y = 0; y < f.order(); ++y)
            if (f.add(f.sqr(y), f.mul(x, y)) == r)
                ++n;
    }
    return n;
}

Char2Curve char2_twist(const Char2Curve& E, Elem alpha)
{
    return {E.field_ptr(), E.field().add(E.beta(), alpha), E.lambda()};
}

Char2PropReport verify_char2_prop(unsigned n, u64 cap)
{
    const auto fp = make_field(2, n);
    const Field& f = *fp;
    require_within_cap(f.order(), cap, "verify_char2_prop");
    const u64 q = f.order();
    Char2PropReport rep;
    rep.n = n;
    std::vector<Elem> t(q);
    std::vector<Elem> inv_sq(q, 0);
    for (Elem x = 1; x < q; ++x)
        inv_sq[x] = f.inv(f.sqr(x));
    for (Elem l = 1; l < q; ++l) {
        // (x^3 + beta x^2 + l) / x^2 = (x + l / x^2) + beta
        for (Elem x = 1; x < q; ++x)
            t[x] = f.add(x, f.mul(l, inv_sq[x]));
        u64 count_tr[2] = {0, 0};
        bool seen[2] = {false, false};
        u64 family = 0;
        for (Elem beta = 0; beta < q; ++beta) {
            u64 N = 2;
            for (Elem x = 1; x < q; ++x)
                if (f.trace2(f.add(t[x], beta)) == 0)
                    N += 2;
            const int tr = f.trace2(beta);
            if (beta == 0) {
                family = N;
                if (N % 4 != 0)
                    rep.family_divisible = false;
            }
            if (N % 4 == 0 && tr != 0)
                rep.converse = false;
            if (seen[tr] && count_tr[tr] != N)
                rep.twist_sum = false;
            seen[tr] = true;
            count_tr[tr] = N;
        }
        if (seen[0] && seen[1] && count_tr[0] + count_tr[1] != 2 * q + 2)
            rep.twist_sum = false;

        const Elem root = *f.sqrt(l);
        u64 fixed = 0, matching = 0;
        for (Elem x = 1; x < q; ++x) {
            const Elem image = f.div(root, x);
            if (image == x)
                ++fixed;
            if (f.trace2(x) == f.trace2(image))
                ++matching;
        }
        if (fixed != 1 || matching % 2 != 1 || 2 + 2 * matching != family)
            rep.involution = false;
    }
    return rep;
}

bool frobenius_image_check(const Field& f, Elem lambda, u64 cap)
{
    if (lambda == 0)
        throw std::domain_error("lambda must be nonzero");
    const Elem l2 = f.sqr(lambda);
    const u64 frob = char2_count_model(f, 0, 0, l2, cap);
    const u64 shifted = char2_count_model(f, 0, lambda, 0, cap);
    const u64 base = char2_count_model(f, 0, 0, lambda, cap);
    return frob == shifted && frob == base;
}

}  // namespace legendre
