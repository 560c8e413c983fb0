#pragma once

#include <utility>
#include <vector>

#include "legendre/field.hpp"

namespace legendre {

/// y^2 + xy = x^3 + beta x^2 + lambda over F_{2^n}, lambda != 0.
class Char2Curve {
public:
    Char2Curve(FieldPtr f, Elem beta, Elem lambda);
    /// The family member y^2 + xy = x^3 + lambda.
    static Char2Curve family(FieldPtr f, Elem lambda) { return {std::move(f), 0, lambda}; }

    const FieldPtr& field_ptr() const { return f_; }
    const Field& field() const { return *f_; }
    Elem beta() const { return beta_; }
    Elem lambda() const { return lambda_; }
    /// j = 1 / lambda.
    Elem j_invariant() const { return f_->inv(lambda_); }

    bool contains(Elem x, Elem y) const;

private:
    FieldPtr f_;
    Elem beta_;
    Elem lambda_;
};

/// Point count: infinity, (0, sqrt(lambda)), and two points over every
/// x != 0 with Tr((x^3 + beta x^2 + lambda) / x^2) = 0.
u64 char2_count(const Char2Curve& E, u64 cap = kDefaultEnumerationCap);

/// 2 + 2 #{x != 0 : Tr(x + lambda / x^2) = 0}; family members only.
u64 char2_count_trace_set(const Char2Curve& E, u64 cap = kDefaultEnumerationCap);

/// Affine points sorted by (x, y): half-trace for odd n, a z-scan otherwise.
std::vector<std::pair<Elem, Elem>> char2_points(const Char2Curve& E, u64 cap = kDefaultEnumerationCap);

/// #{y^2 + xy = x^3 + a2 x^2 + a4 x + a6} + 1 by scanning every (x, y).
u64 char2_count_brute(const Field& f, Elem a2, Elem a4, Elem a6, u64 cap = kDefaultEnumerationCap);

/// Same count via the Artin-Schreier criterion per x.
u64 char2_count_model(const Field& f, Elem a2, Elem a4, Elem a6, u64 cap = kDefaultEnumerationCap);

/// beta -> beta + alpha.
Char2Curve char2_twist(const Char2Curve& E, Elem alpha);

/// Half-trace sum_{i <= (n-1)/2} a^{4^i}; n odd only.
Elem half_trace(const Field& f, Elem a);

struct Char2PropReport {
    unsigned n = 0;
    bool family_divisible = true;   // 4 | #E_lambda for every lambda
    bool converse = true;           // 4 | #E(beta, lambda) => Tr(beta) = 0
    bool twist_sum = true;          // counts for Tr(beta) = 0 and 1 sum to 2^{n+1} + 2
    bool involution = true;         // x -> sqrt(lambda)/x has one fixed point, N odd
    bool ok() const { return family_divisible && converse && twist_sum && involution; }
};

/// Full sweep over every (beta, lambda) in F_{2^n}.
Char2PropReport verify_char2_prop(unsigned n, u64 cap = kDefaultEnumerationCap);

/// #(y^2 + xy = x^3 + lambda^2) equals #(eta^2 + xi eta = xi^3 + lambda xi),
/// and both equal #E_lambda.
bool frobenius_image_check(const Field& f, Elem lambda, u64 cap = kDefaultEnumerationCap);

}  // namespace legendre
