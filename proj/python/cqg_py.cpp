#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cqg/commands.hpp"

namespace py = pybind11;
using namespace cqg;

namespace {

Backend backend_of(const std::string& b) {
  if (b == "exact") return Backend::GaussQ;
  if (b == "float") return Backend::FloatC;
  throw InputError("backend must be exact or float");
}

sumu::Word parse_word(const std::string& s) {
  sumu::Word w;
  for (char ch : s) {
    switch (ch) {
      case 'a': w.push_back(sumu::Gen::A); break;
      case 'h': w.push_back(sumu::Gen::H); break;
      case 'c': w.push_back(sumu::Gen::C); break;
      case 'd': w.push_back(sumu::Gen::D); break;
      case ' ': break;
      default: throw InputError(std::string("unknown letter '") + ch + "', use a, h, c, d");
    }
  }
  return w;
}

// canonical words in the same letters: "", "aac", "hd"
std::string letters(const sumu::Mono& m) {
  std::string s;
  for (auto g : m.word()) s += "ahcd"[static_cast<int>(g)];
  return s;
}

std::map<std::string, std::string> to_py(const sumu::Poly& p) {
  std::map<std::string, std::string> out;
  for (const auto& [m, c] : p) out[letters(m)] = c.str();
  return out;
}

sumu::Poly poly_of(const sumu::Engine& e, const std::string& w) { return e.normalize(parse_word(w)); }

std::string dump(const Report& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compact quantum groups: axiom checks, integrals, the antipode calculus and SU_mu(2)";
  m.attr("__version__") = CQG_VERSION;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);

  m.def("corpus", [] {
    std::map<std::string, std::string> out;
    for (const auto& [name, j] : corpus()) out[name] = j.dump();
    return out;
  }, "Shipped structure files as JSON strings, keyed by file name.");

  auto parse = [](const std::string& s) {
    try {
      return Json::parse(s);
    } catch (const Json::exception& e) {
      throw InputError(e.what());
    }
  };
  m.def("run_check", [=](const std::string& s, const std::string& b) { return dump(run_check(parse(s), backend_of(b))); },
        py::arg("structure"), py::arg("backend") = "exact");
  m.def("run_decompose",
        [=](const std::string& s, const std::string& b, unsigned seed) { return dump(run_decompose(parse(s), backend_of(b), seed)); },
        py::arg("structure"), py::arg("backend") = "exact", py::arg("seed") = 1);
  m.def("run_compact", [=](const std::string& s, const std::string& b) { return dump(run_compact(parse(s), backend_of(b))); },
        py::arg("structure"), py::arg("backend") = "exact");
  m.def("run_antipode",
        [=](const std::string& s, const std::string& b, double tol) { return dump(run_antipode(parse(s), backend_of(b), tol)); },
        py::arg("structure"), py::arg("backend") = "exact", py::arg("tolerance") = 1e-8);
  m.def("run_sumu",
        [](int sign, int degree, const std::string& identity, bool rewriting, unsigned seed) {
          return dump(run_sumu(sign, degree, identity, rewriting, seed));
        },
        py::arg("sign") = 1, py::arg("degree") = 6, py::arg("identity") = "all", py::arg("rewriting") = false,
        py::arg("seed") = 1);
  m.def("fnv1a", &fnv1a_hex);

  py::class_<sumu::Engine>(m, "SumuEngine", "SU_mu(2) with mu = sign * s^2. Words use the letters a, h (alpha hat), c, d (gamma°).")
      .def(py::init<int>(), py::arg("sign") = 1)
      .def_property_readonly("sign", &sumu::Engine::sign)
      .def("normalize", [](const sumu::Engine& e, const std::string& w) { return to_py(poly_of(e, w)); })
      .def("is_canonical", [](const sumu::Engine& e, const std::string& w) { return e.is_canonical(parse_word(w)); })
      .def("delta",
           [](const sumu::Engine& e, const std::string& w) {
             std::map<std::pair<std::string, std::string>, std::string> out;
             for (const auto& [k, c] : e.delta(poly_of(e, w))) out[{letters(k.first), letters(k.second)}] = c.str();
             return out;
           })
      .def("eps", [](const sumu::Engine& e, const std::string& w) { return e.eps(poly_of(e, w)).str(); })
      .def("antipode", [](const sumu::Engine& e, const std::string& w) { return to_py(e.apply(e.antipode_op(), poly_of(e, w))); })
      .def("circ", [](const sumu::Engine& e, const std::string& w) { return to_py(e.apply(e.circ_op(), poly_of(e, w))); })
      .def("theta", [](const sumu::Engine& e, const std::string& w) { return e.evaluate(e.theta(), poly_of(e, w)).str(); })
      .def("beta", [](const sumu::Engine& e, const std::string& w) { return e.evaluate(e.beta(), poly_of(e, w)).str(); })
      .def("verify",
           [](const sumu::Engine& e, const std::string& name, int degree) {
             auto r = sumu::verify(e, name, degree);
             return py::dict(py::arg("identity") = r.identity, py::arg("degree") = r.degree, py::arg("passed") = r.passed,
                             py::arg("checked") = r.checked, py::arg("witness") = r.witness);
           },
           py::arg("identity"), py::arg("degree") = 6);
  m.def("identity_names", &sumu::identity_names);
}
