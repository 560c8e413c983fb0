#include "legendre/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "legendre/error.hpp"

namespace legendre {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs))
{
    for (Elem c : c_)
        if (c >= f_->order())
            throw std::invalid_argument("polynomial coefficient out of range");
    normalize();
}

Poly Poly::x_power(FieldPtr f, std::size_t k)
{
    std::vector<Elem> c(k + 1, 0);
    c[k] = 1;
    return Poly(std::move(f), std::move(c));
}

void Poly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Elem Poly::eval(Elem x) const
{
    const Field& f = *f_;
    Elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Poly Poly::monic() const
{
    if (c_.empty())
        return *this;
    const Elem li = f_->inv(c_.back());
    std::vector<Elem> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        c[i] = f_->mul(c_[i], li);
    return Poly(f_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b)
{
    require_same_field(*a.f_, *b.f_);
    const Field& f = *a.f_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        const Elem x = i < a.c_.size() ? a.c_[i] : 0;
        const Elem y = i < b.c_.size() ? b.c_[i] : 0;
        c[i] = f.add(x, y);
    }
    return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b)
{
    require_same_field(*a.f_, *b.f_);
    const Field& f = *a.f_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        const Elem x = i < a.c_.size() ? a.c_[i] : 0;
        const Elem y = i < b.c_.size() ? b.c_[i] : 0;
        c[i] = f.sub(x, y);
    }
    return Poly(a.f_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b)
{
    require_same_field(*a.f_, *b.f_);
    if (a.is_zero() || b.is_zero())
        return Poly::zero(a.f_);
    const Field& f = *a.f_;
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    return Poly(a.f_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b)
{
    return a.f_->same_as(*b.f_) && a.c_ == b.c_;
}

std::string Poly::to_string() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        const std::string coef = f_->to_string(c_[i]);
        const bool paren = coef.find('+') != std::string::npos;
        if (i == 0 || c_[i] != 1)
            out += paren ? "(" + coef + ")" : coef;
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

DivMod divmod(const Poly& f, const Poly& g)
{
    require_same_field(f.field(), g.field());
    if (g.is_zero())
        throw std::domain_error("division by the zero polynomial");
    const Field& F = f.field();
    std::vector<Elem> r = f.coeffs();
    const auto& d = g.coeffs();
    const size_t dg = d.size() - 1;
    if (r.size() < d.size())
        return {Poly::zero(f.field_ptr()), f};
    std::vector<Elem> qt(r.size() - dg, 0);
    const Elem li = F.inv(d.back());
    for (size_t i = r.size(); i-- > dg;) {
        const Elem c = F.mul(r[i], li);
        if (c == 0)
            continue;
        qt[i - dg] = c;
        for (size_t j = 0; j <= dg; ++j)
            r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, d[j]));
    }
    r.resize(dg);
    return {Poly(f.field_ptr(), std::move(qt)), Poly(f.field_ptr(), std::move(r))};
}

Poly deuring(u64 p)
{
    if (p == 2)
        throw std::invalid_argument("Deuring polynomial needs an odd prime");
    auto f = make_field(p, 1);
    const u64 m = (p - 1) / 2;
    // Pascal row m, reduced mod p.
    std::vector<u64> row{1};
    for (u64 r = 1; r <= m; ++r) {
        std::vector<u64> next(r + 1, 1);
        for (u64 k = 1; k < r; ++k)
            next[k] = (row[k - 1] + row[k]) % p;
        row = std::move(next);
    }
    std::vector<Elem> c(m + 1);
    const bool negate = m % 2 == 1;
    for (u64 k = 0; k <= m; ++k) {
        const Elem b = row[k];
        const Elem sq = f->mul(b, b);
        c[k] = negate ? f->neg(sq) : sq;
    }
    return Poly(f, std::move(c));
}

Poly poly_gcd(const Poly& f, const Poly& g)
{
    require_same_field(f.field(), g.field());
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool divides(const Poly& f, const Poly& g)
{
    if (f.is_zero())
        throw std::domain_error("divides: divisor is the zero polynomial");
    return divmod(g, f).remainder.is_zero();
}

Poly substitute_neg(const Poly& f)
{
    std::vector<Elem> c = f.coeffs();
    for (size_t i = 1; i < c.size(); i += 2)
        c[i] = f.field().neg(c[i]);
    return Poly(f.field_ptr(), std::move(c));
}

Poly x_pow_mod(u64 e, const Poly& m)
{
    if (m.is_zero())
        throw std::domain_error("x_pow_mod: zero modulus");
    const auto& fp = m.field_ptr();
    Poly result = divmod(Poly(fp, {1}), m).remainder;
    Poly base = divmod(Poly::x_power(fp, 1), m).remainder;
    while (e) {
        if (e & 1)
            result = divmod(result * base, m).remainder;
        base = divmod(base * base, m).remainder;
        e >>= 1;
    }
    return result;
}

Poly embed(const Poly& f, const FieldPtr& target)
{
    const Field& src = f.field();
    if (src.same_as(*target))
        return Poly(target, f.coeffs());
    if (src.degree() != 1 || src.characteristic() != target->characteristic())
        throw std::invalid_argument("embed: source must be the prime subfield of the target");
    // The prime subfield sits at indices 0..p-1 of every extension.
    return Poly(target, f.coeffs());
}

namespace {

Poly pow_mod(Poly base, u64 e, const Poly& m)
{
    Poly result = divmod(Poly(m.field_ptr(), {1}), m).remainder;
    base = divmod(base, m).remainder;
    while (e) {
        if (e & 1)
            result = divmod(result * base, m).remainder;
        base = divmod(base * base, m).remainder;
        e >>= 1;
    }
    return result;
}

// g monic, squarefree and a product of linear factors over an odd-order field.
// Splits with gcd(g, (x + a)^((q-1)/2) - 1) for a = start, start + 1, ...
void split_linear(const Poly& g, Elem start, std::vector<Elem>& out)
{
    const Field& F = g.field();
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1) {
        out.push_back(F.neg(g.coeffs()[0]));
        return;
    }
    const u64 q = F.order();
    const Poly one(g.field_ptr(), {1});
    for (u64 k = 0; k < q; ++k) {
        const Elem a = (start + k) % q;
        const Poly h = poly_gcd(g, pow_mod(Poly(g.field_ptr(), {a, 1}), (q - 1) / 2, g) - one);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, a + 1, out);
            split_linear(divmod(g, h).quotient, a + 1, out);
            return;
        }
    }
    throw std::logic_error("split_linear: no splitting shift found");
}

}  // namespace

std::vector<Fe> roots_in(const Poly& f, const FieldPtr& target, u64 cap)
{
    if (f.is_zero())
        throw std::domain_error("roots_in: zero polynomial");
    const Poly g = embed(f, target);
    std::vector<Elem> found;
    if (target->characteristic() == 2) {
        require_within_cap(target->order(), cap, "roots_in");
        for (Elem x = 0; x < target->order(); ++x)
            if (g.eval(x) == 0)
                found.push_back(x);
    } else if (g.degree() > 0) {
        const Poly split = poly_gcd(g, x_pow_mod(target->order(), g) - Poly::x_power(target, 1));
        split_linear(split, 0, found);
        std::sort(found.begin(), found.end());
    }
    std::vector<Fe> out;
    for (Elem x : found)
        out.emplace_back(*target, x);
    return out;
}

long root_count_by_gcd(const Poly& f, const FieldPtr& target)
{
    const Poly g = embed(f, target);
    if (g.degree() <= 0)
        return 0;
    const Poly xq = x_pow_mod(target->order(), g);
    const Poly h = xq - Poly::x_power(target, 1);
    return poly_gcd(g, h).degree();
}

}  // namespace legendre
