#include "pfol/certificate.hpp"
#include "pfol/families.hpp"
#include "pfol/parse.hpp"
#include "pfol/serialize.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pfol;

namespace {

py::object to_python(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_python(item));
            return std::move(out);
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
            return std::move(out);
        }
        default: return py::none();
    }
}

SparsePoly poly_in(const py::object& f, const Ring& ring) {
    if (py::isinstance<SparsePoly>(f)) return f.cast<SparsePoly>();
    return parse_poly(f.cast<std::string>(), ring);
}

PlaneVectorField field_in(const py::object& A, const py::object& B, const std::string& ring) {
    const Ring R = Ring::from_tag(ring);
    return PlaneVectorField(poly_in(A, R), poly_in(B, R));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "p-th powers, p-divisors and Newton polygon certificates for plane vector fields";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Ring>(m, "Ring")
        .def(py::init([](const std::string& tag) { return Ring::from_tag(tag); }), py::arg("tag"))
        .def_property_readonly("characteristic", &Ring::characteristic)
        .def_property_readonly("order", &Ring::order)
        .def_property_readonly("tag", &Ring::tag)
        .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
        .def("__repr__", [](const Ring& r) { return "Ring('" + r.tag() + "')"; });

    py::class_<SparsePoly>(m, "Poly")
        .def(py::init([](const std::string& text, const std::string& ring) {
                 return parse_poly(text, Ring::from_tag(ring));
             }),
             py::arg("text"), py::arg("ring") = "Z")
        .def_property_readonly("ring", &SparsePoly::ring)
        .def_property_readonly("degree", [](const SparsePoly& f) -> py::object {
            if (f.is_zero()) return py::none();
            return py::int_(f.total_degree().value());
        })
        .def("is_zero", &SparsePoly::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const SparsePoly& f, long long e) { return pow(f, e); })
        .def("__str__", &SparsePoly::str)
        .def("__repr__", [](const SparsePoly& f) { return "Poly('" + f.str() + "', '" + f.ring().tag() + "')"; });

    m.def("p_power",
          [](const py::object& A, const py::object& B, std::uint64_t p, const std::string& ring) {
              const auto vp = p_power(field_in(A, B, ring.empty() ? "F" + std::to_string(p) : ring), p);
              return py::make_tuple(vp.x_component, vp.y_component);
          },
          py::arg("A"), py::arg("B"), py::arg("p"), py::arg("ring") = "",
          "Components (v^p(x), v^p(y)) of the p-th power of A d/dx + B d/dy.");

    m.def("p_divisor",
          [](const py::object& A, const py::object& B, std::uint64_t p, const std::string& ring) {
              const auto v = field_in(A, B, ring.empty() ? "F" + std::to_string(p) : ring);
              if (v.ring().characteristic() != p) throw std::invalid_argument("ring characteristic must be p");
              return to_python(to_json(p_divisor(v)));
          },
          py::arg("A"), py::arg("B"), py::arg("p"), py::arg("ring") = "");

    m.def("degree_and_linf",
          [](const py::object& A, const py::object& B, const std::string& ring) {
              return to_python(to_json(degree_and_linf(field_in(A, B, ring))));
          },
          py::arg("A"), py::arg("B"), py::arg("ring") = "Z");

    m.def("is_invariant_curve",
          [](const py::object& A, const py::object& B, const py::object& F, const std::string& ring) {
              const auto v = field_in(A, B, ring);
              return is_invariant_curve(v, poly_in(F, v.ring()));
          },
          py::arg("A"), py::arg("B"), py::arg("F"), py::arg("ring") = "Z");

    m.def("newton_polytope",
          [](const py::object& f, const std::string& ring) {
              const LatticePolytope P = newton_polytope(poly_in(f, Ring::from_tag(ring)));
              std::vector<std::pair<long long, long long>> out;
              for (const auto& v : P.vertices()) out.emplace_back(v.x, v.y);
              return out;
          },
          py::arg("f"), py::arg("ring") = "F2", "Hull vertices, counterclockwise from the least one.");

    m.def("is_indecomposable",
          [](const py::object& f, const std::string& ring) {
              return is_indecomposable(newton_polytope(poly_in(f, Ring::from_tag(ring))));
          },
          py::arg("f"), py::arg("ring") = "F2");

    m.def("certify_irreducible",
          [](const py::object& f, const std::string& backend, int bound, const std::string& ring) {
              CertifyOptions options{backend_from_string(backend), bound, std::uint64_t{1} << 22};
              return to_python(to_json(certify_irreducible(poly_in(f, Ring::from_tag(ring)), options)));
          },
          py::arg("f"), py::arg("backend") = "auto", py::arg("bound") = 4, py::arg("ring") = "F2");

    m.def("family_field",
          [](const std::string& spec, const std::string& ring) {
              const auto v = make_field(FamilySpec::parse(spec), Ring::from_tag(ring));
              return py::make_tuple(v.A(), v.B());
          },
          py::arg("spec"), py::arg("ring") = "Z", "Components of a family, e.g. 'claudia:3,1,1,1'.");

    m.def("expected_divisor",
          [](const std::string& spec, bool corrected) {
              return expected_divisor(FamilySpec::parse(spec),
                                      corrected ? ClosedForm::corrected : ClosedForm::as_printed);
          },
          py::arg("spec"), py::arg("corrected") = false);

    m.def("verify_family",
          [](const std::string& spec) { return to_python(to_json(verify_family_theorem(FamilySpec::parse(spec)))); },
          py::arg("spec"));

    m.def("certify",
          [](const py::object& A, const py::object& B, bool nondicritical) {
              CertificateOptions options;
              options.assert_nondicritical = nondicritical;
              return to_python(to_json(theorem_main_certificate(field_in(A, B, "Z"), options)));
          },
          py::arg("A"), py::arg("B"), py::arg("assert_nondicritical") = false,
          "Non-algebraicity certificate for an integer vector field.");

    m.def("certify_family",
          [](const std::string& spec, bool nondicritical) {
              CertificateOptions options;
              options.assert_nondicritical = nondicritical;
              return to_python(to_json(theorem_main_certificate(make_field(FamilySpec::parse(spec)), options)));
          },
          py::arg("spec"), py::arg("assert_nondicritical") = false);

    m.attr("__version__") = "0.1.0";
}
