#include "tautext/complex.hpp"
#include "tautext/curve.hpp"
#include "tautext/errors.hpp"
#include "tautext/hyperelliptic.hpp"
#include "tautext/jobs.hpp"
#include "tautext/selftest.hpp"
#include "tautext/spectral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tautext;

namespace pybind11::detail {

// Python int <-> cpp_int through the decimal string.
template <> struct type_caster<Integer> {
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr()))
            return false;
        value = Integer(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Integer& v, return_value_policy, handle)
    {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using DegreeMap = std::map<std::int64_t, Integer>;

GradedDims to_dims(const DegreeMap& m) { return GradedDims(GradedDims::Map(m.begin(), m.end())); }
DegreeMap from_dims(const GradedDims& v) { return DegreeMap(v.entries().begin(), v.entries().end()); }

std::map<std::int64_t, DimStatus> from_status(const GradedStatus& s) { return {s.entries().begin(), s.entries().end()}; }

py::list trail_list(const std::vector<HypothesisNote>& trail)
{
    py::list out;
    for (const auto& n : trail)
        out.append(py::make_tuple(n.hypothesis, n.how));
    return out;
}

const char* kind_name(PageFact::Kind k)
{
    switch (k) {
    case PageFact::Kind::e2:
        return "e2";
    case PageFact::Kind::e_infinity:
        return "e_infinity";
    case PageFact::Kind::d1_rank:
        return "d1_rank";
    default:
        return "e1";
    }
}

}  // namespace

PYBIND11_MODULE(_tautext, m)
{
    m.doc() = "Tautological bundles on symmetric products of curves";

    py::register_exception<UnderdeterminedCohomology>(m, "UnderdeterminedCohomology", PyExc_ValueError);
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);
    py::register_exception<InvalidOverride>(m, "InvalidOverride", PyExc_ValueError);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_ValueError);
    py::register_exception<UnknownFamily>(m, "UnknownFamily", PyExc_ValueError);
    py::register_exception<InvalidSpec>(m, "InvalidSpec", PyExc_ValueError);
    py::register_exception<OutOfModeledRange>(m, "OutOfModeledRange", PyExc_ValueError);

    m.def("shift", [](const DegreeMap& v, std::int64_t d) { return from_dims(shift(to_dims(v), d)); });
    m.def("dual", [](const DegreeMap& v) { return from_dims(dual(to_dims(v))); });
    m.def("direct_sum", [](const DegreeMap& v, const DegreeMap& w) { return from_dims(direct_sum(to_dims(v), to_dims(w))); });
    m.def("tensor", [](const DegreeMap& v, const DegreeMap& w) { return from_dims(tensor(to_dims(v), to_dims(w))); });
    m.def("sym_power", [](const DegreeMap& v, int k) { return from_dims(sym_power(to_dims(v), k)); });
    m.def("wedge_power", [](const DegreeMap& v, int k) { return from_dims(wedge_power(to_dims(v), k)); });
    m.def("euler_char", [](const DegreeMap& v) { return euler_char(to_dims(v)); });

    py::class_<DimStatus>(m, "DimStatus")
        .def_static("exact", [](Integer v) { return DimStatus::exact(std::move(v)); })
        .def_static("interval", [](Integer lo, Integer hi) { return DimStatus::interval(std::move(lo), std::move(hi)); })
        .def_property_readonly("lo", &DimStatus::lo)
        .def_property_readonly("hi", &DimStatus::hi)
        .def_property_readonly("rule", &DimStatus::rule)
        .def_property_readonly("is_exact", &DimStatus::is_exact)
        .def_property_readonly("is_unknown", &DimStatus::is_unknown)
        .def_property_readonly("value", [](const DimStatus& s) -> std::optional<Integer> {
            if (s.is_exact())
                return s.value();
            return std::nullopt;
        })
        .def("contains", &DimStatus::contains)
        .def("__str__", &DimStatus::render)
        .def("__repr__", [](const DimStatus& s) { return "DimStatus(" + s.render() + ")"; });

    py::class_<CurveSpec>(m, "Curve")
        .def(py::init([](int genus, bool hyperelliptic) {
                 CurveSpec x{genus, hyperelliptic};
                 x.validate();
                 return x;
             }),
             py::arg("genus"), py::arg("hyperelliptic") = false)
        .def_readonly("genus", &CurveSpec::genus)
        .def_readonly("hyperelliptic", &CurveSpec::hyperelliptic)
        .def_property_readonly("is_hyperelliptic", &CurveSpec::is_hyperelliptic);

    py::class_<BundleSpec>(m, "Bundle")
        .def(py::init([](int rank, std::int64_t degree, std::optional<Integer> h0, bool stable, std::string name) {
                 BundleSpec e;
                 e.rank = rank;
                 e.degree = degree;
                 e.h0_override = std::move(h0);
                 e.stable = stable;
                 e.name = std::move(name);
                 return e;
             }),
             py::arg("rank"), py::arg("degree"), py::arg("h0") = py::none(), py::arg("stable") = true,
             py::arg("name") = "E")
        .def_static("line", &BundleSpec::line, py::arg("degree"), py::arg("h0") = py::none(), py::arg("name") = "E")
        .def_static("trivial", &BundleSpec::trivial)
        .def_static("canonical", &BundleSpec::canonical, py::arg("curve"), py::arg("power") = 1)
        .def_readonly("name", &BundleSpec::name)
        .def_readonly("rank", &BundleSpec::rank)
        .def_readonly("degree", &BundleSpec::degree)
        .def_readonly("h0", &BundleSpec::h0_override);

    py::class_<CurveModel>(m, "CurveModel")
        .def(py::init<CurveSpec, Overrides>(), py::arg("curve"), py::arg("overrides") = Overrides{})
        .def_property_readonly("curve", &CurveModel::curve);

    m.def("bundle_cohomology", [](const CurveSpec& x, const BundleSpec& e, const Overrides& o) {
        return from_dims(bundle_cohomology(x, e, o));
    }, py::arg("curve"), py::arg("bundle"), py::arg("overrides") = Overrides{});
    m.def("hom_ext", [](const CurveSpec& x, const BundleSpec& e, const BundleSpec& f, const Overrides& o) {
        return from_dims(hom_ext(x, e, f, o));
    }, py::arg("curve"), py::arg("e"), py::arg("f"), py::arg("overrides") = Overrides{});
    m.def("koszul_k02", &koszul_k02, py::arg("curve"), py::arg("bundle"), py::arg("overrides") = Overrides{});
    m.def("w_space", &w_space, py::arg("curve"), py::arg("bundle"), py::arg("overrides") = Overrides{});

    m.def("signed_complex", [](int n) {
        auto c = build_signed_complex(n);
        py::list diffs;
        for (const auto& d : c.differentials) {
            py::list rows;
            for (std::size_t i = 0; i < d.rows(); ++i) {
                py::list row;
                for (std::size_t j = 0; j < d.cols(); ++j)
                    row.append(Integer(numerator(d(i, j))));
                rows.append(row);
            }
            diffs.append(rows);
        }
        return py::make_tuple(c.terms, diffs);
    }, py::arg("n"), "Index subsets per column and integer differential matrices.");

    m.def("orbit_decompose", [](int n, const std::string& family) {
        auto o = orbit_decompose(n, family);
        py::list out;
        for (std::size_t i = 0; i < o.representatives.size(); ++i)
            out.append(py::make_tuple(o.representatives[i], o.orbit_sizes[i], o.stabilizer_orders[i]));
        return out;
    }, py::arg("n"), py::arg("family"));

    m.def("e1_page", [](const CurveModel& cm, const BundleSpec& e, const BundleSpec& f, int n) {
        auto page = build_e1_page(cm, e, f, n);
        py::dict entries;
        for (const auto& [pq, s] : page.entries)
            entries[py::make_tuple(pq.first, pq.second)] = s;
        py::list facts;
        for (const auto& fct : page.facts)
            facts.append(py::make_tuple(kind_name(fct.kind), fct.p, fct.q, fct.value, fct.rule));
        py::dict out;
        out["entries"] = entries;
        out["facts"] = facts;
        out["euler_char"] = page.euler_char();
        out["trail"] = trail_list(page.trail);
        return out;
    }, py::arg("model"), py::arg("e"), py::arg("f"), py::arg("n"));

    m.def("e1_column", [](const CurveModel& cm, const BundleSpec& e, const BundleSpec& f, int n, int p) {
        return from_status(e1_term(cm, e, f, n, p).dims);
    }, py::arg("model"), py::arg("e"), py::arg("f"), py::arg("n"), py::arg("p"));

    m.def("hom_taut", [](const CurveModel& cm, const BundleSpec& e, int n) { return hom_taut(cm, e, n); },
          py::arg("model"), py::arg("bundle"), py::arg("n"));

    m.def("ext1_taut", [](const CurveModel& cm, const BundleSpec& e, int n) {
        auto r = ext1_taut(cm, e, n);
        py::dict out;
        out["hom"] = r.hom_dim;
        out["ext1"] = r.ext1_dim;
        out["summands"] = r.ext1_summands;
        out["euler_char"] = r.euler_char;
        out["trail"] = trail_list(r.trail);
        return out;
    }, py::arg("model"), py::arg("bundle"), py::arg("n"));

    m.def("euler_char_taut", &euler_char_taut, py::arg("model"), py::arg("e"), py::arg("f"), py::arg("n"));

    m.def("classify", [](const CurveModel& cm, const BundleSpec& e, int n) {
        auto v = classify_point(cm, e, n);
        py::dict out;
        out["verdict"] = v.verdict_name();
        out["criterion"] = v.criterion;
        out["witness"] = v.witness;
        out["threshold"] = v.threshold;
        out["trail"] = trail_list(v.trail);
        return out;
    }, py::arg("model"), py::arg("bundle"), py::arg("n"));

    m.def("wedge_taut_cohomology", [](const CurveModel& cm, const BundleSpec& l, int n, int k) {
        return from_dims(wedge_taut_cohomology(cm, l, n, k));
    }, py::arg("model"), py::arg("line"), py::arg("n"), py::arg("k"));

    py::class_<HyperellipticModel>(m, "HyperellipticModel")
        .def(py::init<int>(), py::arg("genus"))
        .def_property_readonly("genus", &HyperellipticModel::genus)
        .def("h0_power", &HyperellipticModel::h0_power)
        .def("mult_cokernel_dim", &HyperellipticModel::mult_cokernel_dim)
        .def("k02_omega", [](const HyperellipticModel& h) { return h.k02_via_sections(HyperellipticModel::K02Case::omega); })
        .def("k02_deg2_h01",
             [](const HyperellipticModel& h) { return h.k02_via_sections(HyperellipticModel::K02Case::deg2_h01); });

    m.def("run_job", [](const std::string& text, std::optional<std::string> format) {
        jobs::JobSpec spec;
        try {
            spec = jobs::parse_job(text);
        } catch (const jobs::JobError& e) {
            std::string msg = e.what();
            for (const auto& p : e.problems())
                msg += "\n" + p;
            throw py::value_error(msg);
        }
        if (format)
            spec.format = *format;
        auto res = jobs::run_job(spec);
        return py::make_tuple(jobs::render(res, spec.format), jobs::exit_code(spec, res));
    }, py::arg("job"), py::arg("format") = py::none(), "Run a JSON job; returns (rendered output, exit code).");

    m.def("selftest", [] {
        py::list out;
        for (const auto& c : run_selftest())
            out.append(py::make_tuple(c.name, c.passed(), c.cases, c.failures, c.detail));
        return out;
    });
}
