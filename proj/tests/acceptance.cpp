// One line per acceptance criterion. Criteria with a wall-clock budget run
// single-threaded and fail when they exceed it.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <thread>

#include "legendre/verify.hpp"

using namespace legendre;
using verify::CriterionResult;

namespace {

struct Criterion {
    int id;
    std::function<CriterionResult(verify::Options)> run;
    double budget_seconds;  // 0: none
    bool single_threaded;
};

}  // namespace

int main()
{
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::vector<Criterion> criteria = {
        {1, [](auto o) { return verify::isogeny_criterion_sweep(199, o); }, 300, true},
        {2, [](auto o) { return verify::exception_sweep({9, 25, 49, 81, 121, 169}, o); }, 0, false},
        {3, [](auto o) { return verify::stats_sweep(1000, 343, o); }, 120, true},
        {4, [](auto o) { return verify::deuring_sweep(200, o); }, 0, false},
        {5, [](auto o) { return verify::sp_sweep(500, o); }, 60, true},
        {6, [](auto o) { return verify::structure_sweep(31, o); }, 0, false},
        {7, [](auto o) { return verify::four_torsion_sweep(121, o); }, 0, false},
        {8, [](auto o) { return verify::descent_twist_class_sweep(49, 49, 100, o); }, 0, false},
        {9, [](auto o) { return verify::char2_sweep(10, o); }, 0, false},
        {10, [](auto o) { return verify::infrastructure_sweep(121, o); }, 0, false},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        CriterionResult r = c.run({.jobs = c.single_threaded ? 1u : hw});
        std::string note = r.detail;
        if (r.passed && c.budget_seconds > 0 && r.seconds > c.budget_seconds) {
            r.passed = false;
            note += "; exceeded " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
        }
        std::printf("%s criterion %d: %s (%s; %.2f s%s)\n", r.passed ? "PASS" : "FAIL", r.id, r.label.c_str(),
                    note.c_str(), r.seconds, c.single_threaded ? ", 1 thread" : "");
        std::fflush(stdout);
        failures += !r.passed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
