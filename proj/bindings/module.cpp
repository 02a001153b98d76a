#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "staircase/counting.hpp"
#include "staircase/experiments.hpp"
#include "staircase/ideal_file.hpp"
#include "staircase/ideal_ops.hpp"
#include "staircase/multiplicity.hpp"
#include "staircase/newton.hpp"

namespace py = pybind11;
using namespace staircase;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(r));
}

std::vector<ExponentVector> to_vectors(const std::vector<std::vector<Exponent>>& raw) {
  std::vector<ExponentVector> out;
  out.reserve(raw.size());
  for (const auto& e : raw) out.push_back(ExponentVector(e));
  return out;
}

std::vector<std::vector<Exponent>> from_gens(const MonomialIdeal& a) {
  std::vector<std::vector<Exponent>> out;
  for (const auto& g : a.gens) out.push_back(g.exps);
  return out;
}

py::dict result_dict(const MultiplicityResult& r) {
  py::dict d;
  d["value"] = fraction(r.value);
  d["method"] = method_name(r.method);
  py::list seq;
  for (const auto& [n, l] : r.sequence) seq.append(py::make_tuple(n, l));
  d["sequence"] = seq;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of monomial ideals: colengths, socles, integral "
            "closures, Hilbert-Samuel and Hilbert-Kunz multiplicities.";

  py::register_exception<malformed_input>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<invalid_ring>(m, "InvalidRing", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def_readonly("nvars", &MonomialIdeal::nvars)
      .def_property_readonly("gens", &from_gens)
      .def("is_zero", &MonomialIdeal::is_zero)
      .def("is_unit", &MonomialIdeal::is_unit)
      .def(py::self == py::self)
      .def("__repr__", [](const MonomialIdeal& a) {
        return "<MonomialIdeal (" + format_ideal(a, default_var_names(a.nvars)) + ")>";
      });

  py::class_<RingSpec>(m, "RingSpec")
      .def_readonly("nvars", &RingSpec::nvars)
      .def_readonly("defining", &RingSpec::defining)
      .def_readonly("krull_dim", &RingSpec::krull_dim)
      .def("is_polynomial", &RingSpec::is_polynomial)
      .def_property_readonly("faces",
                             [](const RingSpec& r) {
                               py::list out;
                               for (const auto& f : r.faces) {
                                 py::dict d;
                                 d["cover"] = f.cover;
                                 d["face"] = f.face;
                                 d["local_length"] = f.local_length;
                                 d["top_dimensional"] = f.top_dimensional;
                                 out.append(d);
                               }
                               return out;
                             })
      .def("__repr__", [](const RingSpec& r) {
        return "<RingSpec nvars=" + std::to_string(r.nvars) +
               " dim=" + std::to_string(r.krull_dim) + ">";
      });

  m.def("make_ideal", [](int nvars, const std::vector<std::vector<Exponent>>& gens) {
    return make_ideal(nvars, to_vectors(gens));
  });
  m.def("make_ring", [](int nvars, const std::vector<std::vector<Exponent>>& quotient) {
    return make_ring(nvars, make_ideal(nvars, to_vectors(quotient)));
  }, py::arg("nvars"), py::arg("quotient") = std::vector<std::vector<Exponent>>{});
  m.def("is_m_primary", &is_m_primary);

  m.def("ideal_sum", &sum);
  m.def("ideal_product", &product);
  m.def("ideal_power", &power);
  m.def("frobenius_power", &frobenius_power);
  m.def("colon", &colon);
  m.def("intersect", &intersect);
  m.def("contains", [](const MonomialIdeal& a, const std::vector<Exponent>& mono) {
    return contains(a, ExponentVector(mono));
  });
  m.def("ideal_leq", &ideal_leq);
  m.def("ord", &ord);
  m.def("project", &project);
  m.def("saturate_variables", &saturate_variables);

  m.def("colength", &colength);
  m.def("min_gens", &min_gens);
  m.def("socle_length", &socle_length);
  m.def("colon_quotient_length", &colon_quotient_length);

  m.def("integral_closure", &integral_closure);
  m.def("is_integrally_closed", &is_integrally_closed);
  m.def("complement_volume", [](const MonomialIdeal& a) {
    return fraction(complement_volume(newton_polyhedron(a)));
  });

  m.def("hs_multiplicity", [](const RingSpec& r, const MonomialIdeal& a) {
    return result_dict(hs_multiplicity(r, a));
  });
  m.def("hk_multiplicity", [](const RingSpec& r, const MonomialIdeal& a) {
    return result_dict(hk_multiplicity(r, a));
  });
  m.def("hs_sequence", &hs_sequence);
  m.def("hs_estimate", [](const RingSpec& r, const MonomialIdeal& a, Count n_max) {
    return result_dict(hs_estimate(r, a, n_max));
  });
  m.def("hk_sequence", [](const RingSpec& r, const MonomialIdeal& a, Exponent p, Count e_max) {
    py::list out;
    for (const auto& v : hk_sequence(r, a, p, e_max)) out.append(fraction(v));
    return out;
  });

  m.def("parse_ideal_file", [](const std::string& text) {
    ParsedIdealFile f = parse_ideal_file(text);
    return py::make_tuple(f.ring, f.ideal, f.var_names);
  });
  m.def("format_ideal", &format_ideal);
  m.def("default_var_names", &default_var_names);

  m.def("run_experiment",
        [](const std::string& name, const std::map<std::string, std::string>& params) {
          ExperimentReport rep = run_experiment(name, params);
          py::dict d;
          d["name"] = rep.name;
          d["pass"] = rep.pass;
          d["max_dev"] = fraction(rep.max_dev);
          d["csv"] = to_csv(rep);
          return d;
        },
        py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});
  m.def("experiment_names", &experiment_names);
}
