#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/field.hpp"

namespace legendre {

/// Largest q for which census() sweeps every Weierstrass curve.
inline constexpr u64 kAllCurvesCap = 199;

inline constexpr const char* kReasonNotDivisibleBy4 = "not divisible by 4";
inline constexpr const char* kReasonException = "maximal/minimal exception (r+1)\xC2\xB2";

/// An isogeny class over F_q, keyed by its point count.
struct ClassRecord {
    u64 q = 0;
    u64 N = 0;
    std::vector<Elem> legendre_witnesses;  // lambda with #E_lambda = N, index order
    bool legendre_isogenous = false;
    std::string excluded_reason;  // empty when none
};

/// |N - q - 1| <= 2 sqrt(q), exactly.
bool in_hasse_interval(u64 q, u64 N);
/// Smallest and largest integers of the Hasse interval.
std::pair<u64, u64> hasse_bounds(u64 q);

bool is_square(u64 q);

/// The r with r^2 = q and r = 1 mod 4; throws std::invalid_argument when q
/// is not a square.
std::int64_t normalized_r(u64 q);

/// 4 | N, and N != (r+1)^2 when q is a square. Throws std::out_of_range
/// when N is outside the Hasse interval.
bool predict_legendre_isogenous(u64 q, u64 N);

/// #E_lambda for every lambda, indexed by lambda (entries 0 and 1 unused).
std::vector<u64> legendre_counts(const Field& f, u64 cap = kDefaultEnumerationCap);

/// Index-smallest lambda with #E_lambda = N.
std::optional<Elem> find_witness(const Field& f, u64 N, u64 cap = kDefaultEnumerationCap);
std::optional<Elem> find_witness(u64 q, u64 N, u64 cap = kDefaultEnumerationCap);

/// y^2 = x^3 + a x^2 + b x + c, as (a, b, c).
using Weierstrass = std::array<Elem, 3>;

/// Nonzero discriminant of the cubic x^3 + a x^2 + b x + c.
bool is_nonsingular(const Field& f, const Weierstrass& w);

/// q + 1 + sum_x chi(x^3 + a x^2 + b x + c).
u64 count_weierstrass(const Field& f, const Weierstrass& w);

/// Point counts attained by any elliptic curve over F_q, ascending. Sweeps
/// y^2 = x^3 + ax + b for p > 3 and the full cubic family for p = 3.
std::vector<u64> attainable_counts(const Field& f, u64 cap = kAllCurvesCap);

/// First curve of the all-curves sweep with N points.
std::optional<Weierstrass> find_curve_with_count(const Field& f, u64 N, u64 cap = kAllCurvesCap);

/// Split-root form of a Weierstrass curve whose cubic splits over F_q.
std::optional<Curve> split_form(const FieldPtr& f, const Weierstrass& w);

struct Census {
    u64 q = 0;
    std::vector<ClassRecord> records;      // one per attained N, ascending
    std::vector<u64> unattained_in_hasse;  // N in the interval with no curve
    std::vector<u64> legendre_attained;    // distinct #E_lambda, ascending
    std::optional<u64> exception;          // (r+1)^2 for square q
    bool exception_attained = false;
    bool exception_legendre = false;
    bool criterion_holds = false;
    /// Attained N divisible by 4, against the sqrt(q)(1 - 1/p) estimate.
    u64 attained_multiples_of_4 = 0;
    double density_estimate = 0.0;
};

/// Sweeps all curves and all Legendre curves over F_q and checks the
/// Legendre-isogeny criterion by set equality.
Census census(u64 q, u64 cap = kAllCurvesCap);

}  // namespace legendre
