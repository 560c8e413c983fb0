// Command-line front end: sweeps and exports over Legendre curves.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "legendre/cli.hpp"

namespace {

struct Flags {
    std::optional<legendre::u64> q, q_min, q_max;
    std::optional<unsigned> n, n_min, n_max;
    std::optional<std::string> lambda;
    legendre::u64 beta = 0;
    std::string format = "json";
    std::string out;
    unsigned jobs = 1;
    legendre::u64 cap = legendre::kDefaultEnumerationCap;
    legendre::u64 curves_cap = legendre::kAllCurvesCap;
};

void add_common(CLI::App* sub, Flags& f)
{
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", f.out, "Write output to PATH instead of stdout");
    sub->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-q", f.cap, "Enumeration cap on field size");
}

void add_q_range(CLI::App* sub, Flags& f, const std::string& name)
{
    sub->add_option("--" + name, f.q, "Single " + name);
    sub->add_option("--" + name + "-min", f.q_min, "Smallest " + name);
    sub->add_option("--" + name + "-max", f.q_max, "Largest " + name);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Legendre elliptic curves over finite fields"};
    app.require_subcommand(1);
    Flags f;

    auto* count = app.add_subcommand("count", "Point counts of Legendre curves");
    add_q_range(count, f, "q");
    count->add_option("--lambda", f.lambda, "Legendre parameter: index or c0,c1,...");

    auto* classify = app.add_subcommand("classify", "Isogeny classes over F_q with Legendre witnesses");
    add_q_range(classify, f, "q");
    classify->add_option("--max-curves-q", f.curves_cap, "Cap for the all-curves sweep");

    auto* census = app.add_subcommand("census", "Per-q summary of the all-curves census");
    add_q_range(census, f, "q");
    census->add_option("--max-curves-q", f.curves_cap, "Cap for the all-curves sweep");

    auto* ss = app.add_subcommand("supersingular", "Supersingular Legendre parameters per prime");
    add_q_range(ss, f, "p");

    auto* stats = app.add_subcommand("stats", "Sum of Legendre point counts S(q)");
    add_q_range(stats, f, "q");

    auto* char2 = app.add_subcommand("char2", "The family y^2 + xy = x^3 + beta x^2 + lambda");
    char2->add_option("--n", f.n, "Single n");
    char2->add_option("--n-min", f.n_min, "Smallest n");
    char2->add_option("--n-max", f.n_max, "Largest n");
    char2->add_option("--beta", f.beta, "Quadratic coefficient (index)");

    auto* verify = app.add_subcommand("verify-all", "Run every verification sweep");

    for (auto* sub : {count, classify, census, ss, stats, char2, verify})
        add_common(sub, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return legendre::cli::kExitUsage;
    }

    legendre::cli::RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    if (f.q) {
        cfg.q_min = cfg.q_max = *f.q;
    } else {
        cfg.q_min = f.q_min.value_or(3);
        cfg.q_max = f.q_max.value_or(0);
    }
    if (f.n) {
        cfg.n_min = cfg.n_max = *f.n;
    } else {
        cfg.n_min = f.n_min.value_or(1);
        cfg.n_max = f.n_max.value_or(0);
    }
    cfg.lambda = f.lambda;
    cfg.beta = f.beta;
    cfg.format = f.format;
    cfg.out = f.out;
    cfg.jobs = f.jobs;
    cfg.cap = f.cap;
    cfg.curves_cap = f.curves_cap;
    return legendre::cli::run(cfg, std::cout, std::cerr);
}
