#pragma once

// Finite fields F_q, q = p^n, with elements stored as the integer index
// sum c_i p^i of their coefficient vector over the basis 1, t, ..., t^{n-1}.
// The index order is the canonical element order used throughout.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "legendre/arith.hpp"

namespace legendre {

inline constexpr u64 kDefaultEnumerationCap = u64{1} << 20;

/// Fields up to this size get log/antilog/Zech tables.
inline constexpr u64 kTableCap = u64{1} << 20;

/// Largest supported characteristic.
inline constexpr u64 kMaxCharacteristic = u64{1} << 20;

using Elem = u64;

class Fe;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field: characteristic p, degree n and a monic irreducible modulus.
///
/// Immutable after construction. Raw-index arithmetic (add, mul, ...) is the
/// fast path used by the exhaustive sweeps; Fe wraps it with field checks.
class Field {
public:
    /// Deterministic field with the index-least monic irreducible modulus.
    /// `seed` is reserved and currently ignored.
    static FieldPtr make(u64 p, unsigned n, u64 seed = 0);

    u64 characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    u64 order() const { return q_; }
    /// Monic modulus, constant term first, length n+1; empty when n == 1.
    std::span<const u64> modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }

    bool same_as(const Field& other) const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;
    Elem from_coeffs(std::span<const u64> c) const;
    std::vector<u64> coeffs(Elem a) const;
    bool in_prime_subfield(Elem a) const { return a < p_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem sqr(Elem a) const { return mul(a, a); }
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, u64 e) const;

    /// Quadratic character in {-1, 0, +1}; odd characteristic only.
    int chi(Elem a) const;
    /// Canonical (index-smaller) square root, or nullopt for non-squares.
    std::optional<Elem> sqrt(Elem a) const;
    /// a is an m-th power in F_q^*; throws on a == 0.
    bool is_nth_power(Elem a, u64 m) const;
    /// Absolute trace F_{2^n} -> F_2 as 0 or 1; characteristic 2 only.
    int trace2(Elem a) const;

    Fe element(Elem a) const;
    Fe element_from_int(std::int64_t v) const;

    std::string to_string(Elem a) const;

    // Implementation detail, public for std::make_shared.
    struct Private {};
    Field(Private, u64 p, unsigned n, std::vector<u64> modulus);

private:
    Elem mul_slow(Elem a, Elem b) const;
    Elem pow_slow(Elem a, u64 e) const;
    Elem add_digits(Elem a, Elem b) const;
    void build_tables();
    Elem tonelli_shanks(Elem a) const;

    u64 p_;
    unsigned n_;
    u64 q_;
    std::vector<u64> modulus_;
    std::vector<u64> place_;  // p^i

    std::vector<std::uint32_t> exp_;   // g^k, k < q-1
    std::vector<std::uint32_t> log_;   // log_g a, a != 0
    std::vector<std::uint32_t> zech_;  // log(1 + g^k), kNoLog when zero
    u64 trace_mask_ = 0;
    Elem nonresidue_ = 0;
};

/// Same as Field::make.
FieldPtr make_field(u64 p, unsigned n, u64 seed = 0);

/// Element of a finite field. Holds a non-owning pointer: the Field must
/// outlive its elements (keep the FieldPtr alive).
class Fe {
public:
    Fe() = default;
    Fe(const Field& f, Elem index) : f_(&f), v_(index) {}

    const Field& field() const { return *f_; }
    Elem index() const { return v_; }
    std::vector<u64> coeffs() const { return f_->coeffs(v_); }
    bool is_zero() const { return v_ == 0; }

    Fe operator-() const { return {*f_, f_->neg(v_)}; }
    friend Fe operator+(const Fe& a, const Fe& b);
    friend Fe operator-(const Fe& a, const Fe& b);
    friend Fe operator*(const Fe& a, const Fe& b);
    friend Fe operator/(const Fe& a, const Fe& b);
    Fe inv() const { return {*f_, f_->inv(v_)}; }
    Fe pow(u64 e) const { return {*f_, f_->pow(v_, e)}; }

    friend bool operator==(const Fe& a, const Fe& b);
    /// Canonical index order; throws FieldMismatch across fields.
    friend std::strong_ordering operator<=>(const Fe& a, const Fe& b);

    std::string to_string() const { return f_->to_string(v_); }

private:
    const Field* f_ = nullptr;
    Elem v_ = 0;
};

/// Throws FieldMismatch unless a and b share a field.
void require_same_field(const Field& a, const Field& b);

int quadratic_character(const Fe& a);
bool is_nth_power(const Fe& a, u64 m);
std::optional<Fe> sqrt(const Fe& a);
int trace2(const Fe& a);

/// All q elements in index order; throws CapExceeded when q > cap.
std::vector<Fe> enumerate(const Field& f, u64 cap = kDefaultEnumerationCap);

/// Throws CapExceeded when q > cap.
void require_within_cap(u64 q, u64 cap, const char* what);

}  // namespace legendre
