#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eden/cellular_automaton.hpp"
#include "eden/corpus.hpp"
#include "eden/entropy.hpp"
#include "eden/principal.hpp"
#include "eden/specification.hpp"
#include "eden/subshift.hpp"

namespace py = pybind11;
using namespace eden;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Garden-of-Eden theory: subshifts, block codes, entropy, principal actions";

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<InconclusiveError>(m, "InconclusiveError", PyExc_RuntimeError);

    py::class_<Window>(m, "Window")
        .def_static("interval", &Window::interval, py::arg("lo"), py::arg("hi"))
        .def("cells", &Window::cells)
        .def("__len__", &Window::size)
        .def("__repr__", [](const Window& w) { return format_window(w); });

    py::class_<Pattern>(m, "Pattern")
        .def_static("word", &Pattern::word, py::arg("symbols"), py::arg("offset") = 0)
        .def("window", &Pattern::window)
        .def("symbols", &Pattern::symbols)
        .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
        .def("__repr__", [](const Pattern& p) { return format_pattern(p); });

    py::class_<Subshift>(m, "Subshift")
        .def_static("full_shift", &Subshift::full_shift, py::arg("alphabet"), py::arg("dim") = 1)
        .def_property_readonly("alphabet_size", [](const Subshift& s) { return s.alphabet().size; })
        .def_property_readonly("dim", &Subshift::dim)
        .def("is_empty", &Subshift::is_empty)
        .def("words", &Subshift::words, py::arg("n"))
        .def("word_allowed", &Subshift::word_allowed, py::arg("word"))
        .def("count_words", &Subshift::count_words, py::arg("n"))
        .def("log_count_words", &Subshift::log_count_words, py::arg("n"))
        .def("equal_language",
             [](const Subshift& a, const Subshift& b) { return a.equal_language(b); })
        .def("language_subset_of",
             [](const Subshift& a, const Subshift& b) { return a.language_subset_of(b); });

    m.def("load_subshift", &load_subshift, py::arg("path_or_name"));
    m.def("parse_subshift", &parse_subshift, py::arg("text"));
    m.def("corpus_names", &corpus_names);
    m.def("pattern_allowed", &pattern_allowed, py::arg("shift"), py::arg("pattern"));

    py::class_<GluingCertificate>(m, "GluingCertificate")
        .def_readonly("gap", &GluingCertificate::gap)
        .def_readonly("checked_length", &GluingCertificate::checked_length);

    m.def(
        "strong_irreducibility_gap",
        [](const Subshift& X, long max_gap) { return strong_irreducibility_gap(X, max_gap); },
        py::arg("shift"), py::arg("max_gap") = 8);
    m.def(
        "weak_specification_check",
        [](const Subshift& X, double eps, long g) { return weak_specification_check(X, eps, g); },
        py::arg("shift"), py::arg("eps"), py::arg("gap"));

    py::class_<EntropyValue>(m, "EntropyValue")
        .def_readonly("value", &EntropyValue::value)
        .def_readonly("n", &EntropyValue::n)
        .def_readonly("error_bound", &EntropyValue::error_bound)
        .def_property_readonly("method",
                               [](const EntropyValue& v) { return entropy_method_name(v.method); });

    m.def("entropy_exact", &entropy_exact_1d, py::arg("shift"));
    m.def("entropy_estimate", &entropy_estimate, py::arg("shift"), py::arg("n"), py::arg("eps"));
    m.def("entropy_gap_bound", &entropy_gap_bound, py::arg("Y"), py::arg("Z"),
          py::arg("eta") = 0.0);

    py::enum_<Verdict>(m, "Verdict")
        .value("YES", Verdict::Yes)
        .value("NO", Verdict::No)
        .value("INCONCLUSIVE", Verdict::Inconclusive);

    py::class_<ClassificationReport>(m, "ClassificationReport")
        .def_readonly("subject", &ClassificationReport::subject)
        .def_readonly("surjective", &ClassificationReport::surjective)
        .def_readonly("pre_injective", &ClassificationReport::pre_injective)
        .def_readonly("injective", &ClassificationReport::injective)
        .def_readonly("flags", &ClassificationReport::flags)
        .def_property_readonly("goe_witness",
                               [](const ClassificationReport& r) -> py::object {
                                   if (!r.goe) return py::none();
                                   return py::str(format_pattern(r.goe->pattern));
                               });

    py::class_<BlockCode>(m, "BlockCode")
        .def_static("eca", &BlockCode::eca, py::arg("rule"))
        .def_static(
            "create",
            [](const Subshift& dom, const Subshift& cod, long radius, std::vector<int> table) {
                return BlockCode(dom, cod, Window::interval(-radius, radius), std::move(table));
            },
            py::arg("domain"), py::arg("codomain"), py::arg("radius"), py::arg("table"))
        .def("classify", &BlockCode::classify)
        .def("is_surjective", [](const BlockCode& c) { return c.is_surjective(); })
        .def("is_pre_injective", [](const BlockCode& c) { return c.is_pre_injective(); })
        .def("is_injective", &BlockCode::is_injective)
        .def("apply_word", [](const BlockCode& c, const std::vector<int>& w) {
            return c.apply_pattern(Pattern::word(w)).symbols();
        });

    m.def("load_block_code", &load_block_code, py::arg("spec_or_path"),
          py::arg("domain") = std::nullopt, py::arg("codomain") = std::nullopt);

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def_property_readonly("lo", &LaurentPoly::lo)
        .def_property_readonly("hi", &LaurentPoly::hi)
        .def("coeff", &LaurentPoly::coeff)
        .def("__repr__", [](const LaurentPoly& f) { return format_poly(f); });

    m.def("make_poly", &make_poly, py::arg("coeffs"), py::arg("offset"));
    m.def("parse_poly", &parse_poly, py::arg("text"));

    py::class_<InvertibilityResult>(m, "InvertibilityResult")
        .def_readonly("invertible", &InvertibilityResult::invertible)
        .def_readonly("margin", &InvertibilityResult::margin);
    m.def("is_l1_invertible", &is_l1_invertible, py::arg("f"));

    py::class_<SummableHomoclinic>(m, "SummableHomoclinic")
        .def_readonly("residual", &SummableHomoclinic::residual)
        .def_readonly("tail_bound", &SummableHomoclinic::tail_bound)
        .def_readonly("decay_rate", &SummableHomoclinic::decay_rate)
        .def("at", &SummableHomoclinic::at)
        .def("l1", &SummableHomoclinic::l1);
    m.def("l1_inverse", &l1_inverse, py::arg("f"), py::arg("tol") = 1e-9);

    py::class_<PrincipalPoint>(m, "PrincipalPoint")
        .def_readonly("lo", &PrincipalPoint::lo)
        .def_readonly("values", &PrincipalPoint::values)
        .def_readonly("residual", &PrincipalPoint::residual)
        .def_readonly("tail_bound", &PrincipalPoint::tail_bound)
        .def("at", &PrincipalPoint::at)
        .def("summability", &PrincipalPoint::summability);
    m.def("fundamental_homoclinic", &fundamental_homoclinic, py::arg("f"),
          py::arg("tol") = 1e-9);

    py::class_<GlueTarget>(m, "GlueTarget")
        .def(py::init([](long lo, long hi, std::vector<double> values) {
                 GlueTarget g;
                 g.window = Window::interval(lo, hi);
                 g.values = std::move(values);
                 return g;
             }),
             py::arg("lo"), py::arg("hi"), py::arg("values"));
    m.def("glue_specification", &glue_specification, py::arg("f"), py::arg("targets"),
          py::arg("eps"));
    m.def("mod1_dist", &mod1_dist, py::arg("a"));
}
