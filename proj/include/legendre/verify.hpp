#pragma once

// Exhaustive verification sweeps. Each returns a CriterionResult whose
// `detail` names the first counterexample found.

#include <string>
#include <vector>

#include "legendre/arith.hpp"

namespace legendre::verify {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    unsigned jobs = 1;
};

/// Legendre-isogeny criterion for every odd prime power q <= q_max.
CriterionResult isogeny_criterion_sweep(u64 q_max = 199, Options opt = {});
/// (r+1)^2 attained by some curve, by no Legendre curve, with group (|r+1|, |r+1|).
CriterionResult exception_sweep(std::vector<u64> qs = {9, 25, 49, 81, 121, 169}, Options opt = {});
/// S(q) closed form for q <= q_max; auxiliary counts for q <= aux_max.
CriterionResult stats_sweep(u64 q_max = 1000, u64 aux_max = 343, Options opt = {});
/// H_p degree and distinct roots, eighth-power checks, gcd root counts.
CriterionResult deuring_sweep(u64 p_max = 200, Options opt = {});
/// s_p formula with the reduced-forms class number.
CriterionResult sp_sweep(u64 p_max = 500, Options opt = {});
/// E_lambda(F_{p^2}) ~ (Z/|p'-1|)^2 for every supersingular lambda.
CriterionResult structure_sweep(u64 p_max = 31, Options opt = {});
/// Three equivalent conditions on full rational 4-torsion.
CriterionResult four_torsion_sweep(u64 q_max = 121, Options opt = {});
/// Descent kernel, twist isomorphism at j = 1728, classes of three.
CriterionResult descent_twist_class_sweep(u64 descent_q_max = 49, u64 twist_q_max = 49, u64 class_q_max = 100,
                            Options opt = {});
/// Characteristic-2 family for n <= n_max.
CriterionResult char2_sweep(unsigned n_max = 10, Options opt = {});
/// Field and group-law property suites, determinism across job counts.
CriterionResult infrastructure_sweep(u64 q_max = 121, Options opt = {});

std::vector<CriterionResult> run_all(Options opt = {});

}  // namespace legendre::verify
