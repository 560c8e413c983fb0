#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "legendre/char2.hpp"
#include "legendre/classify.hpp"
#include "legendre/cli.hpp"
#include "legendre/curve.hpp"
#include "legendre/error.hpp"
#include "legendre/field.hpp"
#include "legendre/poly.hpp"
#include "legendre/stats.hpp"
#include "legendre/supersingular.hpp"

namespace py = pybind11;
using namespace legendre;

namespace {

// Python-side handle; keeps the field alive for every curve built on it.
struct PyField {
    FieldPtr f;
};

Elem check(const PyField& F, Elem a)
{
    if (a >= F.f->order())
        throw py::index_error("element index out of range");
    return a;
}

py::object opt(const std::optional<Elem>& v) { return v ? py::cast(*v) : py::none(); }

std::vector<std::pair<Elem, Elem>> affine(const std::vector<Point>& pts)
{
    std::vector<std::pair<Elem, Elem>> out;
    for (const auto& P : pts)
        if (!P.infinity)
            out.emplace_back(P.x, P.y);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Legendre elliptic curves over finite fields";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
    py::register_exception<FieldMismatch>(m, "FieldMismatch", PyExc_ValueError);

    py::class_<PyField>(m, "Field")
        .def(py::init([](u64 p, unsigned n) { return PyField{make_field(p, n)}; }), py::arg("p"),
             py::arg("n") = 1)
        .def_property_readonly("p", [](const PyField& F) { return F.f->characteristic(); })
        .def_property_readonly("n", [](const PyField& F) { return F.f->degree(); })
        .def_property_readonly("q", [](const PyField& F) { return F.f->order(); })
        .def_property_readonly("modulus", [](const PyField& F) {
            return std::vector<u64>(F.f->modulus().begin(), F.f->modulus().end());
        })
        .def("add", [](const PyField& F, Elem a, Elem b) { return F.f->add(check(F, a), check(F, b)); })
        .def("sub", [](const PyField& F, Elem a, Elem b) { return F.f->sub(check(F, a), check(F, b)); })
        .def("neg", [](const PyField& F, Elem a) { return F.f->neg(check(F, a)); })
        .def("mul", [](const PyField& F, Elem a, Elem b) { return F.f->mul(check(F, a), check(F, b)); })
        .def("inv", [](const PyField& F, Elem a) { return F.f->inv(check(F, a)); })
        .def("pow", [](const PyField& F, Elem a, u64 e) { return F.f->pow(check(F, a), e); })
        .def("chi", [](const PyField& F, Elem a) { return F.f->chi(check(F, a)); })
        .def("sqrt", [](const PyField& F, Elem a) { return opt(F.f->sqrt(check(F, a))); })
        .def("is_nth_power", [](const PyField& F, Elem a, u64 m) { return F.f->is_nth_power(check(F, a), m); })
        .def("trace", [](const PyField& F, Elem a) { return F.f->trace2(check(F, a)); })
        .def("coeffs", [](const PyField& F, Elem a) { return F.f->coeffs(check(F, a)); })
        .def("from_coeffs", [](const PyField& F, const std::vector<u64>& c) { return F.f->from_coeffs(c); })
        .def("to_string", [](const PyField& F, Elem a) { return F.f->to_string(check(F, a)); })
        .def("__repr__", [](const PyField& F) {
            std::ostringstream s;
            s << "Field(" << F.f->characteristic() << ", " << F.f->degree() << ")";
            return s.str();
        });

    py::class_<Curve>(m, "Curve")
        .def(py::init([](const PyField& F, Elem a, Elem b, Elem c, Elem d) {
                 return Curve(F.f, check(F, a), check(F, b), check(F, c), check(F, d));
             }),
             py::arg("field"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta") = 1)
        .def_property_readonly("field", [](const Curve& E) { return PyField{E.field_ptr()}; })
        .def_property_readonly("roots", &Curve::roots)
        .def_property_readonly("delta", &Curve::delta)
        .def_property_readonly("lambda_", [](const Curve& E) { return opt(E.lambda()); })
        .def("count", [](const Curve& E) { return count_points(E); })
        .def("points", [](const Curve& E) { return affine(points(E)); })
        .def("group_structure", [](const Curve& E) { return group_structure(E); })
        .def("four_torsion_count", [](const Curve& E) { return four_torsion_count(E); })
        .def("j_invariant", &j_invariant)
        .def("contains", [](const Curve& E, Elem x, Elem y) { return E.contains(Point::affine(x, y)); })
        .def("add", [](const Curve& E, std::optional<std::pair<Elem, Elem>> P, std::optional<std::pair<Elem, Elem>> Q) {
            auto pt = [](const auto& v) { return v ? Point::affine(v->first, v->second) : Point::at_infinity(); };
            const Point R = add(E, pt(P), pt(Q));
            return R.infinity ? py::object(py::none()) : py::cast(std::pair{R.x, R.y});
        })
        .def("twist", [](const Curve& E, Elem d) { return twist(E, d); })
        .def("is_isomorphic", [](const Curve& E, const Curve& E2) { return is_isomorphic(E, E2); })
        .def("two_isogeny", [](const Curve& E) { return opt(two_isogeny(E)); });

    m.def("legendre_curve", [](const PyField& F, Elem l) { return legendre_curve(F.f, check(F, l)); });
    m.def("orbit", [](const PyField& F, Elem l) { return orbit(*F.f, check(F, l)); });

    m.def("predict_legendre_isogenous", &predict_legendre_isogenous, py::arg("q"), py::arg("N"));
    m.def("find_witness", [](u64 q, u64 N) { return opt(find_witness(q, N)); }, py::arg("q"), py::arg("N"));
    m.def("legendre_counts", [](u64 q) {
        const auto pn = prime_power_split(q);
        if (!pn || pn->first == 2)
            throw py::value_error("q must be an odd prime power");
        auto c = legendre_counts(*make_field(pn->first, pn->second));
        return std::vector<u64>(c.begin() + 2, c.end());
    });

    m.def("deuring", [](u64 p) { return deuring(p).coeffs(); });
    m.def("class_number", &class_number);
    m.def("supersingular_lambdas", [](u64 p) {
        const SsTable t = supersingular_lambdas(p);
        py::dict d;
        d["p"] = t.p;
        d["roots_fp2"] = t.roots_fp2;
        d["roots_fp"] = t.roots_fp;
        d["s_p"] = t.s_p;
        d["h"] = t.h ? py::cast(*t.h) : py::none();
        return d;
    });
    m.def("legendre_sum", [](u64 q) {
        const StatsRecord r = legendre_sum(q);
        py::dict d;
        d["q"] = r.q;
        d["S"] = r.S;
        d["S_bar"] = r.S_bar;
        d["formula_ok"] = r.formula_ok;
        return d;
    });

    m.def("char2_count", [](const PyField& F, Elem beta, Elem l) {
        return char2_count(Char2Curve(F.f, check(F, beta), check(F, l)));
    });

    m.def(
        "run",
        [](const std::string& command, u64 q_min, u64 q_max, unsigned n_min, unsigned n_max,
           std::optional<std::string> lambda, u64 beta, const std::string& format, unsigned jobs, u64 cap,
           u64 curves_cap) {
            cli::RunConfig c{.command = command, .q_min = q_min, .q_max = q_max, .n_min = n_min,
                             .n_max = n_max, .lambda = std::move(lambda), .beta = beta, .format = format,
                             .jobs = jobs, .cap = cap, .curves_cap = curves_cap};
            std::ostringstream out, err;
            int rc;
            {
                py::gil_scoped_release release;
                rc = cli::run(c, out, err);
            }
            return py::make_tuple(rc, out.str(), err.str());
        },
        py::arg("command"), py::arg("q_min") = 0, py::arg("q_max") = 0, py::arg("n_min") = 1,
        py::arg("n_max") = 0, py::arg("lambda_") = py::none(), py::arg("beta") = 0, py::arg("format") = "json",
        py::arg("jobs") = 1, py::arg("cap") = kDefaultEnumerationCap, py::arg("curves_cap") = kAllCurvesCap);
}
