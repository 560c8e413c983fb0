#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "legendre/field.hpp"

namespace legendre {

struct Point {
    bool infinity = true;
    Elem x = 0;
    Elem y = 0;

    static Point at_infinity() { return {}; }
    static Point affine(Elem x, Elem y) { return {false, x, y}; }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b)
    {
        if (a.infinity != b.infinity)
            return a.infinity ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = a.x <=> b.x; c != 0)
            return c;
        return a.y <=> b.y;
    }
};

/// delta * y^2 = (x - alpha)(x - beta)(x - gamma) over an odd-characteristic
/// field, with alpha, beta, gamma pairwise distinct and delta nonzero.
class Curve {
public:
    Curve(FieldPtr f, Elem alpha, Elem beta, Elem gamma, Elem delta = 1);

    const FieldPtr& field_ptr() const { return f_; }
    const Field& field() const { return *f_; }
    Elem alpha() const { return roots_[0]; }
    Elem beta() const { return roots_[1]; }
    Elem gamma() const { return roots_[2]; }
    Elem delta() const { return delta_; }
    const std::array<Elem, 3>& roots() const { return roots_; }

    /// Roots (0, 1, lambda) with delta = 1.
    bool is_legendre() const;
    /// lambda for Legendre curves.
    std::optional<Elem> lambda() const;

    /// (x - alpha)(x - beta)(x - gamma)
    Elem cubic(Elem x) const;
    bool contains(const Point& P) const;

    // Long model Y^2 = X^3 + a2 X^2 + a4 X + a6, (X, Y) = (delta x, delta^2 y).
    Elem a2() const { return a2_; }
    Elem a4() const { return a4_; }
    const std::array<Elem, 3>& scaled_roots() const { return scaled_; }
    Elem delta_inv() const { return delta_inv_; }

private:
    FieldPtr f_;
    std::array<Elem, 3> roots_;
    Elem delta_;
    std::array<Elem, 3> scaled_;
    Elem a2_, a4_;
    Elem delta_inv_;
};

/// y^2 = x(x - 1)(x - lambda); throws std::domain_error for lambda in {0, 1}.
Curve legendre_curve(const FieldPtr& f, Elem lambda);

/// Multiplies the twist coefficient by d != 0.
Curve twist(const Curve& E, Elem d);

Point neg(const Curve& E, const Point& P);
/// Chord-tangent addition; throws std::invalid_argument for points off E.
Point add(const Curve& E, const Point& P, const Point& Q);
Point dbl(const Curve& E, const Point& P);
Point scalar_mul(const Curve& E, const Point& P, u64 k);

/// q + 1 + sum_x chi(delta f(x)).
u64 count_points(const Curve& E, u64 cap = kDefaultEnumerationCap);

/// All rational points, infinity first, then by (x, y) index.
std::vector<Point> points(const Curve& E, u64 cap = kDefaultEnumerationCap);

/// Order of P in a group of order N.
u64 point_order(const Curve& E, const Point& P, u64 N);

/// Invariant factors (d1, d2), d1 | d2, d1 d2 = N.
std::pair<u64, u64> group_structure(const Curve& E, u64 cap = kDefaultEnumerationCap);

/// [2]E(F_q) by doubling every rational point, sorted.
std::vector<Point> doubled_points(const Curve& E, u64 cap = kDefaultEnumerationCap);

/// Number of rational points P with [4]P = O.
u64 four_torsion_count(const Curve& E, u64 cap = kDefaultEnumerationCap);

/// {lambda, 1-lambda, 1/lambda, 1-1/lambda, 1/(1-lambda), lambda/(lambda-1)}, sorted.
std::vector<Elem> orbit(const Field& f, Elem lambda);

Elem j_invariant(const Curve& E);

/// Exact F_q-isomorphism test for split-root models.
bool is_isomorphic(const Curve& E, const Curve& E2);

/// Square classes of (x - alpha, x - beta, x - gamma) at P (delta = 1 only).
std::array<int, 3> descent_image(const Curve& E, const Point& P);

/// -1, lambda and 1 - lambda are all squares (Legendre curves only).
bool full_four_torsion_rational(const Curve& E);

/// lambda-hat = ((s + 1) / (s - 1))^2 with s the canonical sqrt(lambda);
/// nullopt when lambda is a non-square.
std::optional<Elem> two_isogeny(const Curve& E);

/// E / <(0, 0)> in split form: E_{lambda-hat} twisted by -1. It equals
/// E_{lambda-hat} up to isomorphism only when -1 is a square.
std::optional<Curve> two_isogenous_curve(const Curve& E);

}  // namespace legendre
