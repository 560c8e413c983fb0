#include "legendre/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "legendre/char2.hpp"
#include "legendre/error.hpp"
#include "legendre/parallel.hpp"
#include "legendre/report.hpp"
#include "legendre/stats.hpp"
#include "legendre/supersingular.hpp"
#include "legendre/verify.hpp"

namespace legendre::cli {

namespace {

using report::Json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A checked statement failed; `what` names it.
struct InvariantFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<u64> q_range(const RunConfig& c)
{
    if (c.q_min == 0 || c.q_max < c.q_min)
        throw UsageError("empty q range");
    auto qs = odd_prime_powers(c.q_min, c.q_max);
    if (qs.empty())
        throw UsageError("no odd prime power in the requested range");
    if (qs.front() > c.cap)
        throw UsageError("enumeration cap is below the smallest requested q");
    return qs;
}

FieldPtr field_of(u64 q)
{
    const auto pn = prime_power_split(q);
    return make_field(pn->first, pn->second);
}

Elem parse_element(const Field& f, const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != ' ')
            s += ch;
    if (s.empty())
        throw UsageError("empty field element");
    try {
        if (s.find(',') == std::string::npos) {
            const u64 v = std::stoull(s);
            if (v >= f.order())
                throw UsageError("element index out of range");
            return v;
        }
        std::vector<u64> coeffs;
        std::stringstream ss(s);
        for (std::string part; std::getline(ss, part, ',');)
            coeffs.push_back(std::stoull(part));
        return f.from_coeffs(coeffs);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("cannot parse field element '" + text + "'");
    }
}

std::string run_count(const RunConfig& c)
{
    const auto qs = q_range(c);
    if (c.lambda && qs.size() != 1)
        throw UsageError("--lambda needs a single q");
    Json arr = Json::array();
    std::ostringstream csv;
    csv << "q,lambda,count\n";
    for (u64 q : qs) {
        require_within_cap(q, c.cap, "count");
        const auto f = field_of(q);
        std::vector<Elem> lambdas;
        if (c.lambda) {
            const Elem l = parse_element(*f, *c.lambda);
            if (l == 0 || l == 1)
                throw UsageError("lambda must avoid 0 and 1");
            lambdas.push_back(l);
        } else {
            for (Elem l = 2; l < q; ++l)
                lambdas.push_back(l);
        }
        const auto counts = parallel_map<u64>(lambdas.size(), c.jobs, [&](std::size_t i) {
            return count_points(legendre_curve(f, lambdas[i]), c.cap);
        });
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (counts[i] % 4 != 0)
                throw InvariantFailure("Legendre count divisible by 4: fails at q=" + std::to_string(q));
            arr.push_back(report::curve_with_count(legendre_curve(f, lambdas[i]), counts[i]));
            csv << q << ',' << lambdas[i] << ',' << counts[i] << '\n';
        }
    }
    return c.format == "csv" ? csv.str() : report::dump(arr);
}

std::vector<Census> censuses(const RunConfig& c)
{
    const auto qs = q_range(c);
    for (u64 q : qs)
        require_within_cap(q, c.curves_cap, "census");
    auto cs = parallel_map<Census>(qs.size(), c.jobs, [&](std::size_t i) { return census(qs[i], c.curves_cap); });
    for (const auto& cen : cs)
        if (!cen.criterion_holds)
            throw InvariantFailure("Legendre-isogeny criterion (4 | N, N != (r+1)^2): fails at q=" +
                                   std::to_string(cen.q));
    return cs;
}

std::string run_classify(const RunConfig& c)
{
    const auto cs = censuses(c);
    Json arr = Json::array();
    std::vector<ClassRecord> all;
    for (const auto& cen : cs) {
        const auto f = field_of(cen.q);
        for (const auto& r : cen.records) {
            arr.push_back(report::class_record(*f, r));
            all.push_back(r);
        }
    }
    return c.format == "csv" ? report::class_records_csv(all) : report::dump(arr);
}

std::string run_census(const RunConfig& c)
{
    const auto cs = censuses(c);
    if (c.format == "csv")
        return report::census_csv(cs);
    Json arr = Json::array();
    for (const auto& cen : cs)
        arr.push_back(report::census_summary(cen));
    return report::dump(arr);
}

std::string run_supersingular(const RunConfig& c)
{
    if (c.q_min == 0 || c.q_max < c.q_min)
        throw UsageError("empty p range");
    const auto ps = odd_primes(c.q_min, c.q_max);
    if (ps.empty())
        throw UsageError("no odd prime in the requested range");
    for (u64 p : ps)
        require_within_cap(p * p, c.cap, "supersingular");
    const auto ts = parallel_map<std::optional<SsTable>>(ps.size(), c.jobs, [&](std::size_t i) {
        return std::optional<SsTable>(supersingular_lambdas(ps[i], c.cap));
    });
    std::vector<SsTable> tables;
    for (const auto& t : ts)
        tables.push_back(*t);
    for (const auto& t : tables) {
        if (!verify_sp_formula(t))
            throw InvariantFailure("s_p = 0 / 1 / 3h(-p): fails at p=" + std::to_string(t.p));
        if (!eighth_power_checks(t).ok())
            throw InvariantFailure("-lambda is an 8th power in F_{p^2}: fails at p=" + std::to_string(t.p));
    }
    if (c.format == "csv")
        return report::ss_csv(tables);
    Json arr = Json::array();
    for (const auto& t : tables)
        arr.push_back(report::ss_table(t));
    return report::dump(arr);
}

std::string run_stats(const RunConfig& c)
{
    const auto qs = q_range(c);
    for (u64 q : qs)
        require_within_cap(q, c.cap, "stats");
    const auto rs =
        parallel_map<StatsRecord>(qs.size(), c.jobs, [&](std::size_t i) { return legendre_sum(qs[i], c.cap); });
    for (const auto& r : rs)
        if (!r.formula_ok || !r.assembly_ok)
            throw InvariantFailure("S(q) = (q-2)(q+1) + 1 + (-1)^((q-1)/2): fails at q=" + std::to_string(r.q));
    if (c.format == "csv")
        return report::stats_csv(rs);
    Json arr = Json::array();
    for (const auto& r : rs)
        arr.push_back(report::stats_record(r));
    return report::dump(arr);
}

std::string run_char2(const RunConfig& c)
{
    if (c.n_min == 0 || c.n_max < c.n_min)
        throw UsageError("empty n range");
    if (c.n_max >= 63)
        throw UsageError("n too large");
    Json arr = Json::array();
    std::vector<report::Char2Row> rows;
    for (unsigned n = c.n_min; n <= c.n_max; ++n) {
        require_within_cap(u64{1} << n, c.cap, "char2");
        const auto f = make_field(2, n);
        if (c.beta >= f->order())
            throw UsageError("beta index out of range for n=" + std::to_string(n));
        const u64 q = f->order();
        const auto counts = parallel_map<u64>(q - 1, c.jobs, [&](std::size_t i) {
            return char2_count(Char2Curve(f, c.beta, static_cast<Elem>(i + 1)), c.cap);
        });
        for (Elem l = 1; l < q; ++l) {
            const u64 N = counts[l - 1];
            if ((N % 4 == 0) != (f->trace2(c.beta) == 0))
                throw InvariantFailure("4 | #E iff Tr(beta) = 0 in characteristic 2: fails at n=" +
                                       std::to_string(n));
            report::Char2Row row{n, l, c.beta, N};
            arr.push_back(report::char2_row(*f, row));
            rows.push_back(row);
        }
    }
    return c.format == "csv" ? report::char2_csv(rows) : report::dump(arr);
}

int run_verify_all(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const auto results = verify::run_all({.jobs = c.jobs});
    const verify::CriterionResult* failed = nullptr;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.label << "  (" << r.detail << ", "
            << static_cast<long>(r.seconds * 1000) << " ms)\n";
        if (!r.passed && !failed)
            failed = &r;
    }
    if (failed) {
        err << "invariant failure: [" << failed->id << "] " << failed->label << ": " << failed->detail << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        if (c.format != "json" && c.format != "csv")
            throw UsageError("--format must be json or csv");
        if (c.jobs == 0)
            throw UsageError("--jobs must be at least 1");
        if (c.command == "verify-all")
            return run_verify_all(c, out, err);

        std::string text;
        if (c.command == "count")
            text = run_count(c);
        else if (c.command == "classify")
            text = run_classify(c);
        else if (c.command == "census")
            text = run_census(c);
        else if (c.command == "supersingular")
            text = run_supersingular(c);
        else if (c.command == "stats")
            text = run_stats(c);
        else if (c.command == "char2")
            text = run_char2(c);
        else
            throw UsageError("unknown command '" + c.command + "'");

        if (c.out.empty()) {
            out << text;
        } else {
            std::ofstream file(c.out, std::ios::binary);
            if (!file)
                throw UsageError("cannot open output file " + c.out);
            file << text;
        }
        return kExitOk;
    } catch (const InvariantFailure& e) {
        err << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const CapExceeded& e) {
        err << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

}  // namespace legendre::cli
