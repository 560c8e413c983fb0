#include "legendre/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace legendre {

Curve::Curve(FieldPtr f, Elem alpha, Elem beta, Elem gamma, Elem delta)
    : f_(std::move(f)), roots_{alpha, beta, gamma}, delta_(delta)
{
    const Field& F = *f_;
    if (F.characteristic() == 2)
        throw std::invalid_argument("split-root curves need odd characteristic");
    for (Elem r : roots_)
        if (r >= F.order())
            throw std::invalid_argument("curve coefficient out of range");
    if (delta >= F.order() || delta == 0)
        throw std::domain_error("twist coefficient must be nonzero");
    if (alpha == beta || beta == gamma || alpha == gamma)
        throw std::domain_error("singular curve: repeated root");
    for (int i = 0; i < 3; ++i)
        scaled_[i] = F.mul(delta_, roots_[i]);
    const auto [A, B, C] = scaled_;
    a2_ = F.neg(F.add(F.add(A, B), C));
    a4_ = F.add(F.add(F.mul(A, B), F.mul(A, C)), F.mul(B, C));
    delta_inv_ = F.inv(delta_);
}

bool Curve::is_legendre() const
{
    return roots_[0] == 0 && roots_[1] == 1 && delta_ == 1;
}

std::optional<Elem> Curve::lambda() const
{
    if (!is_legendre())
        return std::nullopt;
    return roots_[2];
}

Elem Curve::cubic(Elem x) const
{
    const Field& F = *f_;
    return F.mul(F.mul(F.sub(x, roots_[0]), F.sub(x, roots_[1])), F.sub(x, roots_[2]));
}

bool Curve::contains(const Point& P) const
{
    if (P.infinity)
        return true;
    const Field& F = *f_;
    if (P.x >= F.order() || P.y >= F.order())
        return false;
    return F.mul(delta_, F.sqr(P.y)) == cubic(P.x);
}

Curve legendre_curve(const FieldPtr& f, Elem lambda)
{
    if (lambda == 0 || lambda == 1)
        throw std::domain_error("Legendre parameter must avoid 0 and 1");
    return Curve(f, 0, 1, lambda, 1);
}

Curve twist(const Curve& E, Elem d)
{
    if (d == 0)
        throw std::domain_error("twist by zero");
    return Curve(E.field_ptr(), E.alpha(), E.beta(), E.gamma(), E.field().mul(E.delta(), d));
}

Point neg(const Curve& E, const Point& P)
{
    if (P.infinity)
        return P;
    return Point::affine(P.x, E.field().neg(P.y));
}

namespace {

struct Long {
    Elem X, Y;
};

Long to_long(const Curve& E, const Point& P)
{
    const Field& F = E.field();
    return {F.mul(E.delta(), P.x), F.mul(F.sqr(E.delta()), P.y)};
}

Point add_long(const Curve& E, const Point& P, const Point& Q)
{
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    const Field& F = E.field();
    const auto [x1, y1] = to_long(E, P);
    const auto [x2, y2] = to_long(E, Q);
    Elem slope;
    if (x1 == x2) {
        if (F.add(y1, y2) == 0)
            return Point::at_infinity();
        // tangent: (3x^2 + 2 a2 x + a4) / 2y
        const Elem num = F.add(F.add(F.mul(F.from_int(3), F.sqr(x1)),
                                     F.mul(F.from_int(2), F.mul(E.a2(), x1))),
                               E.a4());
        slope = F.div(num, F.add(y1, y1));
    } else {
        slope = F.div(F.sub(y2, y1), F.sub(x2, x1));
    }
    const Elem x3 = F.sub(F.sub(F.sub(F.sqr(slope), E.a2()), x1), x2);
    const Elem y3 = F.sub(F.mul(slope, F.sub(x1, x3)), y1);
    const Elem di = E.delta_inv();
    return Point::affine(F.mul(x3, di), F.mul(y3, F.sqr(di)));
}

void require_on(const Curve& E, const Point& P)
{
    if (!E.contains(P))
        throw std::invalid_argument("point is not on the curve");
}

}  // namespace

Point add(const Curve& E, const Point& P, const Point& Q)
{
    require_on(E, P);
    require_on(E, Q);
    return add_long(E, P, Q);
}

Point dbl(const Curve& E, const Point& P) { return add(E, P, P); }

Point scalar_mul(const Curve& E, const Point& P, u64 k)
{
    require_on(E, P);
    Point acc = Point::at_infinity();
    Point base = P;
    while (k) {
        if (k & 1)
            acc = add_long(E, acc, base);
        base = add_long(E, base, base);
        k >>= 1;
    }
    return acc;
}

u64 count_points(const Curve& E, u64 cap)
{
    const Field& F = E.field();
    require_within_cap(F.order(), cap, "count_points");
    const int cd = F.chi(E.delta());
    std::int64_t sum = 0;
    for (Elem x = 0; x < F.order(); ++x)
        sum += F.chi(E.cubic(x));
    return static_cast<u64>(static_cast<std::int64_t>(F.order()) + 1 + cd * sum);
}

std::vector<Point> points(const Curve& E, u64 cap)
{
    const Field& F = E.field();
    require_within_cap(F.order(), cap, "points");
    const Elem di = F.inv(E.delta());
    std::vector<Point> out{Point::at_infinity()};
    for (Elem x = 0; x < F.order(); ++x) {
        const Elem w = F.mul(E.cubic(x), di);
        if (w == 0) {
            out.push_back(Point::affine(x, 0));
        } else if (auto r = F.sqrt(w)) {
            out.push_back(Point::affine(x, *r));
            out.push_back(Point::affine(x, F.neg(*r)));
        }
    }
    return out;
}

u64 point_order(const Curve& E, const Point& P, u64 N)
{
    u64 ord = N;
    for (auto [l, e] : factorize(N)) {
        for (int i = 0; i < e; ++i) {
            if (scalar_mul(E, P, ord / l).infinity)
                ord /= l;
            else
                break;
        }
    }
    return ord;
}

std::pair<u64, u64> group_structure(const Curve& E, u64 cap)
{
    const auto pts = points(E, cap);
    const u64 N = pts.size();
    u64 exponent = 1;
    for (const Point& P : pts) {
        exponent = std::max(exponent, point_order(E, P, N));
        if (exponent == N)
            break;
    }
    return {N / exponent, exponent};
}

std::vector<Point> doubled_points(const Curve& E, u64 cap)
{
    std::vector<Point> out;
    for (const Point& P : points(E, cap))
        out.push_back(add_long(E, P, P));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

u64 four_torsion_count(const Curve& E, u64 cap)
{
    u64 n = 0;
    for (const Point& P : points(E, cap)) {
        const Point twoP = add_long(E, P, P);
        if (add_long(E, twoP, twoP).infinity)
            ++n;
    }
    return n;
}

std::vector<Elem> orbit(const Field& F, Elem l)
{
    if (l == 0 || l == 1)
        throw std::domain_error("Legendre parameter must avoid 0 and 1");
    const Elem one = 1;
    const Elem inv = F.inv(l);
    const Elem oml = F.sub(one, l);
    std::vector<Elem> out{l, oml, inv, F.sub(one, inv), F.inv(oml), F.div(l, F.sub(l, one))};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Elem j_invariant(const Curve& E)
{
    const Field& F = E.field();
    const Elem l = F.div(F.sub(E.gamma(), E.alpha()), F.sub(E.beta(), E.alpha()));
    const Elem t = F.add(F.sub(F.sqr(l), l), 1);
    const Elem num = F.mul(F.from_int(256), F.mul(F.sqr(t), t));
    const Elem den = F.mul(F.sqr(l), F.sqr(F.sub(l, 1)));
    return F.div(num, den);
}

bool is_isomorphic(const Curve& E, const Curve& E2)
{
    require_same_field(E.field(), E2.field());
    const Field& F = E.field();
    if (j_invariant(E) != j_invariant(E2))
        return false;
    // Isomorphisms between y^2 = cubic models are X = w X' + r with w a
    // nonzero square; solve for (w, r) under each pairing of the roots.
    const auto& A = E.scaled_roots();
    const auto& B = E2.scaled_roots();
    std::array<int, 3> perm{0, 1, 2};
    do {
        const Elem b0 = B[perm[0]], b1 = B[perm[1]], b2 = B[perm[2]];
        const Elem w = F.div(F.sub(A[0], A[1]), F.sub(b0, b1));
        const Elem r = F.sub(A[0], F.mul(w, b0));
        if (F.sub(A[2], r) == F.mul(w, b2) && F.chi(w) == 1)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::array<int, 3> descent_image(const Curve& E, const Point& P)
{
    if (E.delta() != 1)
        throw std::invalid_argument("descent_image expects an untwisted model");
    if (P.infinity)
        return {1, 1, 1};
    if (!E.contains(P))
        throw std::invalid_argument("point is not on the curve");
    const Field& F = E.field();
    std::array<Elem, 3> v;
    for (int i = 0; i < 3; ++i)
        v[i] = F.sub(P.x, E.roots()[i]);
    for (int i = 0; i < 3; ++i)
        if (v[i] == 0)
            v[i] = F.mul(v[(i + 1) % 3], v[(i + 2) % 3]);
    return {F.chi(v[0]), F.chi(v[1]), F.chi(v[2])};
}

bool full_four_torsion_rational(const Curve& E)
{
    const auto l = E.lambda();
    if (!l)
        throw std::invalid_argument("full_four_torsion_rational expects a Legendre curve");
    const Field& F = E.field();
    return F.chi(F.neg(1)) == 1 && F.chi(*l) == 1 && F.chi(F.sub(1, *l)) == 1;
}

std::optional<Elem> two_isogeny(const Curve& E)
{
    const auto l = E.lambda();
    if (!l)
        throw std::invalid_argument("two_isogeny expects a Legendre curve");
    const Field& F = E.field();
    const auto s = F.sqrt(*l);
    if (!s)
        return std::nullopt;
    return F.sqr(F.div(F.add(*s, 1), F.sub(*s, 1)));
}

std::optional<Curve> two_isogenous_curve(const Curve& E)
{
    const auto lh = two_isogeny(E);
    if (!lh)
        return std::nullopt;
    return twist(legendre_curve(E.field_ptr(), *lh), E.field().neg(1));
}

}  // namespace legendre
