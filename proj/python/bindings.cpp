#include "carlson/bounds.hpp"
#include "carlson/classifier.hpp"
#include "carlson/errors.hpp"
#include "carlson/family.hpp"
#include "carlson/oracle.hpp"
#include "carlson/serialize.hpp"
#include "carlson/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace carlson;

namespace {

// Structured results cross the boundary as JSON text; the Python side decodes them.
std::string extrema_json(double a, double b) { return to_json(extrema_points({a, b})).dump(); }

std::string envelope_json(double x, const std::string& families) {
    const auto fams = families.empty() ? default_families() : parse_families(families);
    return to_json(best_envelope(x, fams)).dump();
}

std::string table_json(const std::vector<double>& xs, const std::string& families) {
    const auto fams = families.empty() ? default_families() : parse_families(families);
    return table_to_json(bound_table(xs, fams));
}

std::string suite_json(std::uint64_t seed, unsigned digits) {
    return reports_to_json(run_suite({seed, digits}));
}

}  // namespace

PYBIND11_MODULE(_carlson, m) {
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
    py::register_exception<InvalidFamily>(m, "InvalidFamily", PyExc_ValueError);
    py::register_exception<DegenerateParams>(m, "DegenerateParams", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

    m.def("arccos_hp", [](const std::string& x, unsigned digits) { return oracle::arccos_hp(std::string_view(x), digits).decimal; },
          py::arg("x"), py::arg("digits") = kDefaultDigits);
    m.def("approx_arccos", [](double x) {
        const Approximation ap = approx_arccos(x);
        return py::make_tuple(ap.value, ap.radius);
    });
    m.def("family_bounds", [](const std::string& id, double x) {
        const BoundInterval iv = family_bounds(parse_family(id), x);
        return py::make_tuple(iv.lower, iv.upper);
    });
    m.def("f_eval", [](double a, double b, double x) { return f_eval({a, b}, {x}); });
    m.def("g_eval", [](double a, double b, double x) { return g_eval({a, b}, {x}); });
    m.def("classify_symbolic", [](double a, double b) { return std::string(to_string(classify_symbolic({a, b}))); });
    m.def("classify_numeric", [](double a, double b, double tol) { return std::string(to_string(classify_numeric({a, b}, tol))); },
          py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);
    m.def("_extrema_json", &extrema_json);
    m.def("_envelope_json", &envelope_json);
    m.def("_table_json", &table_json);
    m.def("_suite_json", &suite_json);
}
