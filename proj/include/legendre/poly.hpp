#pragma once

#include <vector>

#include "legendre/field.hpp"

namespace legendre {

/// Dense univariate polynomial over a finite field, constant term first.
/// The leading coefficient is nonzero; the zero polynomial has no terms.
class Poly {
public:
    Poly(FieldPtr f, std::vector<Elem> coeffs);
    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly x_power(FieldPtr f, std::size_t k);

    const FieldPtr& field_ptr() const { return f_; }
    const Field& field() const { return *f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }
    Elem eval(Elem x) const;

    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    void normalize();

    FieldPtr f_;
    std::vector<Elem> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Schoolbook long division; throws std::domain_error when g is zero.
DivMod divmod(const Poly& f, const Poly& g);

/// H_p(x) = (-1)^m sum_{k=0}^m C(m,k)^2 x^k over F_p, m = (p-1)/2.
Poly deuring(u64 p);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);

/// f | g; throws std::domain_error when f is zero.
bool divides(const Poly& f, const Poly& g);

/// f(-x).
Poly substitute_neg(const Poly& f);

/// x^e mod m by binary exponentiation; m nonzero.
Poly x_pow_mod(u64 e, const Poly& m);

/// Coefficient embedding into `target`. Source must be the prime field of
/// `target` or `target` itself.
Poly embed(const Poly& f, const FieldPtr& target);

/// Distinct roots of f in `target`, index order. Odd characteristic splits
/// gcd(f, x^q - x); characteristic 2 evaluates at every element.
/// The returned elements point at *target.
std::vector<Fe> roots_in(const Poly& f, const FieldPtr& target,
                         u64 cap = kDefaultEnumerationCap);

/// deg gcd(f, x^q - x) with f embedded in `target`: distinct-root count.
long root_count_by_gcd(const Poly& f, const FieldPtr& target);

}  // namespace legendre
