#pragma once

// JSON and CSV encodings shared by the CLI and the Python bindings.
// JSON objects keep a fixed key order; CSV has a header row and no quoting.

#include <string>
#include <vector>

#include <json.hpp>

#include "legendre/char2.hpp"
#include "legendre/classify.hpp"
#include "legendre/curve.hpp"
#include "legendre/stats.hpp"
#include "legendre/supersingular.hpp"

namespace legendre::report {

using Json = nlohmann::ordered_json;

/// Coefficient vector, constant term first.
Json element(const Field& f, Elem a);
Json modulus(const Field& f);
Json poly(const Poly& p);

Json curve(const Curve& E);
Json curve_with_count(const Curve& E, u64 count);

Json class_record(const Field& f, const ClassRecord& r);
std::string class_records_csv(const std::vector<ClassRecord>& rs);

Json census_summary(const Census& c);
std::string census_csv(const std::vector<Census>& cs);

Json ss_table(const SsTable& t);
std::string ss_csv(const std::vector<SsTable>& ts);

Json stats_record(const StatsRecord& r);
std::string stats_csv(const std::vector<StatsRecord>& rs);

struct Char2Row {
    unsigned n;
    Elem lambda;
    Elem beta;
    u64 count;
};
Json char2_row(const Field& f, const Char2Row& r);
std::string char2_csv(const std::vector<Char2Row>& rs);

/// Serialised top-level array, two-space indent, trailing newline.
std::string dump(const Json& array);

}  // namespace legendre::report
