#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "legendre/classify.hpp"
#include "legendre/field.hpp"

namespace legendre::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    /// count | classify | census | supersingular | stats | char2 | verify-all
    std::string command;
    /// Range of q, or of p for `supersingular`.
    u64 q_min = 0;
    u64 q_max = 0;
    /// Range of n for `char2`.
    unsigned n_min = 1;
    unsigned n_max = 0;
    /// Legendre parameter for `count`: an index, or "c0,c1,..." constant first.
    std::optional<std::string> lambda;
    /// Quadratic coefficient index for `char2`.
    u64 beta = 0;
    std::string format = "json";
    /// Empty: write to the output stream.
    std::string out;
    unsigned jobs = 1;
    u64 cap = kDefaultEnumerationCap;
    u64 curves_cap = kAllCurvesCap;
};

/// Executes one command. Returns kExitOk, kExitInvariant (a checked
/// statement failed; a report goes to `err`) or kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace legendre::cli
