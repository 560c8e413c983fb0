#include "legendre/report.hpp"

#include <sstream>

namespace legendre::report {

Json element(const Field& f, Elem a)
{
    Json arr = Json::array();
    for (u64 c : f.coeffs(a))
        arr.push_back(c);
    return arr;
}

Json modulus(const Field& f)
{
    Json arr = Json::array();
    for (u64 c : f.modulus())
        arr.push_back(c);
    return arr;
}

Json poly(const Poly& p)
{
    Json arr = Json::array();
    for (Elem c : p.coeffs())
        arr.push_back(element(p.field(), c));
    return arr;
}

Json curve(const Curve& E)
{
    const Field& f = E.field();
    Json j;
    j["p"] = f.characteristic();
    j["n"] = f.degree();
    j["modulus"] = modulus(f);
    j["alpha"] = element(f, E.alpha());
    j["beta"] = element(f, E.beta());
    j["gamma"] = element(f, E.gamma());
    j["delta"] = element(f, E.delta());
    if (auto l = E.lambda())
        j["lambda"] = element(f, *l);
    return j;
}

Json curve_with_count(const Curve& E, u64 count)
{
    Json j = curve(E);
    j["count"] = count;
    return j;
}

Json class_record(const Field& f, const ClassRecord& r)
{
    Json j;
    j["q"] = r.q;
    j["N"] = r.N;
    Json w = Json::array();
    for (Elem l : r.legendre_witnesses)
        w.push_back(element(f, l));
    j["legendre_witnesses"] = std::move(w);
    j["legendre_isogenous"] = r.legendre_isogenous;
    j["excluded_reason"] = r.excluded_reason.empty() ? Json(nullptr) : Json(r.excluded_reason);
    return j;
}

std::string class_records_csv(const std::vector<ClassRecord>& rs)
{
    std::ostringstream os;
    os << "q,N,witness_count,first_witness,legendre_isogenous,excluded_reason\n";
    for (const auto& r : rs) {
        os << r.q << ',' << r.N << ',' << r.legendre_witnesses.size() << ',';
        if (!r.legendre_witnesses.empty())
            os << r.legendre_witnesses.front();
        os << ',' << (r.legendre_isogenous ? 1 : 0) << ',' << r.excluded_reason << '\n';
    }
    return os.str();
}

Json census_summary(const Census& c)
{
    Json j;
    j["q"] = c.q;
    j["attained_multiples_of_4"] = c.attained_multiples_of_4;
    j["density_estimate"] = c.density_estimate;
    j["legendre_attained"] = c.legendre_attained;
    j["unattained_in_hasse"] = c.unattained_in_hasse;
    j["exception"] = c.exception ? Json(*c.exception) : Json(nullptr);
    j["exception_attained"] = c.exception_attained;
    j["exception_legendre"] = c.exception_legendre;
    j["criterion_holds"] = c.criterion_holds;
    return j;
}

std::string census_csv(const std::vector<Census>& cs)
{
    std::ostringstream os;
    os << "q,attained_multiples_of_4,legendre_distinct,unattained_in_hasse,exception,"
          "exception_attained,exception_legendre,criterion_holds\n";
    for (const auto& c : cs) {
        os << c.q << ',' << c.attained_multiples_of_4 << ',' << c.legendre_attained.size() << ','
           << c.unattained_in_hasse.size() << ',';
        if (c.exception)
            os << *c.exception;
        os << ',' << (c.exception_attained ? 1 : 0) << ',' << (c.exception_legendre ? 1 : 0) << ','
           << (c.criterion_holds ? 1 : 0) << '\n';
    }
    return os.str();
}

Json ss_table(const SsTable& t)
{
    Json j;
    j["p"] = t.p;
    j["p_prime"] = t.p_prime;
    j["s_p"] = t.s_p;
    j["h"] = t.h ? Json(*t.h) : Json(nullptr);
    j["roots_fp"] = t.roots_fp;
    Json r = Json::array();
    for (Elem l : t.roots_fp2)
        r.push_back(element(*t.fp2, l));
    j["roots_fp2"] = std::move(r);
    return j;
}

std::string ss_csv(const std::vector<SsTable>& ts)
{
    std::ostringstream os;
    os << "p,s_p,h,3h,ok\n";
    for (const auto& t : ts) {
        os << t.p << ',' << t.s_p << ',';
        if (t.h)
            os << *t.h << ',' << 3 * *t.h;
        else
            os << ',';
        os << ',' << (verify_sp_formula(t) ? 1 : 0) << '\n';
    }
    return os.str();
}

Json stats_record(const StatsRecord& r)
{
    Json j;
    j["q"] = r.q;
    j["S"] = r.S;
    j["S_bar"] = r.S_bar;
    j["delta"] = r.delta();
    j["S_tilde"] = r.aux.S_tilde;
    j["S_0"] = r.aux.S_0;
    j["S_1"] = r.aux.S_1;
    j["formula_ok"] = r.formula_ok;
    return j;
}

std::string stats_csv(const std::vector<StatsRecord>& rs)
{
    std::ostringstream os;
    os << "q,S,S_bar,delta,formula_ok\n";
    for (const auto& r : rs)
        os << r.q << ',' << r.S << ',' << r.S_bar << ',' << r.delta() << ',' << (r.formula_ok ? 1 : 0)
           << '\n';
    return os.str();
}

Json char2_row(const Field& f, const Char2Row& r)
{
    Json j;
    j["n"] = r.n;
    j["lambda"] = element(f, r.lambda);
    j["beta"] = element(f, r.beta);
    j["count"] = r.count;
    return j;
}

std::string char2_csv(const std::vector<Char2Row>& rs)
{
    std::ostringstream os;
    os << "n,lambda,beta,count\n";
    for (const auto& r : rs)
        os << r.n << ',' << r.lambda << ',' << r.beta << ',' << r.count << '\n';
    return os.str();
}

std::string dump(const Json& array) { return array.dump(2) + "\n"; }

}  // namespace legendre::report
