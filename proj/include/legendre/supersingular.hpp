#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "legendre/field.hpp"
#include "legendre/poly.hpp"

namespace legendre {

/// Supersingular Legendre data for one odd prime p.
struct SsTable {
    u64 p = 0;
    std::int64_t p_prime = 0;  // (-1)^((p-1)/2) p, always 1 mod 4
    FieldPtr fp;               // F_p
    FieldPtr fp2;              // F_{p^2}
    Poly deuring_poly;         // H_p over F_p
    std::vector<Elem> roots_fp2;  // distinct roots in F_{p^2}, index order
    std::vector<Elem> roots_fp;   // the roots lying in F_p
    u64 s_p = 0;
    std::optional<u64> h;  // h(-p) for p = 3 mod 4, p > 3
};

/// Builds F_{p^2}, finds the roots of H_p there and counts those in F_p.
/// Throws std::logic_error if H_p has fewer than (p-1)/2 distinct roots.
SsTable supersingular_lambdas(u64 p, u64 cap = kDefaultEnumerationCap);

/// Every root lambda gives E_lambda(F_{p^2}) ~ (Z/|p'-1|)^2.
bool verify_ss_structure(u64 p, u64 cap = kDefaultEnumerationCap);
bool verify_ss_structure(const SsTable& t);

struct EighthPowerCheck {
    bool elementwise = false;  // -lambda is an 8th power for every root
    bool divisibility = false; // H_p(-x) | x^((p^2-1)/8) - 1
    bool agree() const { return elementwise == divisibility; }
    bool ok() const { return elementwise && divisibility; }
};

EighthPowerCheck eighth_power_checks(const SsTable& t);
/// Both checks hold (and therefore agree).
bool verify_eighth_power(u64 p);

/// One reduced primitive form (a, b, c) of discriminant b^2 - 4ac.
struct ReducedForm {
    std::int64_t a, b, c;
    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// Reduced primitive forms of discriminant -p, p = 3 mod 4, p > 3.
std::vector<ReducedForm> reduced_forms(u64 p);

/// h(-p) by counting reduced forms; throws std::invalid_argument unless
/// p = 3 mod 4 and p > 3.
u64 class_number(u64 p);

/// s_p = 0 iff p = 1 mod 4, s_3 = 1, s_p = 3 h(-p) otherwise.
bool verify_sp_formula(u64 p);
bool verify_sp_formula(const SsTable& t);

}  // namespace legendre
