#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuspgroup/abelian.hpp"
#include "cuspgroup/cli.hpp"
#include "cuspgroup/curves.hpp"
#include "cuspgroup/errors.hpp"
#include "cuspgroup/families.hpp"
#include "cuspgroup/fox.hpp"
#include "cuspgroup/homcount.hpp"

namespace py = pybind11;
using namespace cusp;

namespace {

std::vector<std::vector<int>> relator_lists(const Presentation& p) {
  std::vector<std::vector<int>> out;
  for (const auto& r : p.relators()) out.push_back(r.letters());
  return out;
}

Presentation family(const std::string& name, int n) {
  if (name == "pi1") return presentation_pi1(n);
  if (name == "pi1-reduced") return presentation_pi1_reduced(n);
  if (name == "oka") return presentation_oka(n);
  if (name == "G") return presentation_G();
  if (name == "zariski3") return presentation_zariski3(ZariskiVariant::Corrected);
  if (name == "derived") return derive_pi1_via_rs(n);
  throw InvalidParameter("unknown family " + name);
}

py::dict structure(const AbelianStructure& a) {
  py::dict d;
  d["free_rank"] = a.free_rank;
  py::list torsion;
  for (const auto& t : a.torsion) torsion.append(py::int_(py::str(t.get_str())));
  d["torsion"] = torsion;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);

  py::class_<Presentation>(m, "Presentation")
      .def(py::init([](std::vector<std::string> names, const std::vector<std::vector<int>>& relators) {
             std::vector<Word> words;
             for (const auto& r : relators) words.emplace_back(r);
             return Presentation(std::move(names), std::move(words));
           }),
           py::arg("generators"), py::arg("relators"))
      .def_property_readonly("generators", &Presentation::names)
      .def_property_readonly("relators", &relator_lists)
      .def("simplify", [](const Presentation& p, std::size_t budget) { return simplify(p, budget); },
           py::arg("budget") = 1000)
      .def("__str__", &to_text);

  m.def("present", &family, py::arg("family"), py::arg("n") = 3);
  m.def("abelianization", [](const Presentation& p) { return structure(abelianization(p)); });
  m.def("count_homs", [](const Presentation& p, int k) { return count_homs(p, k).total; }, py::arg("p"),
        py::arg("k"));
  m.def(
      "alexander_polynomial",
      [](const Presentation& p, std::size_t strip) {
        const AlexanderResult r = alexander_polynomial(p, strip);
        return py::make_tuple(r.polynomial.to_string(), r.stripped);
      },
      py::arg("p"), py::arg("strip_t_minus_1") = 2);
  m.def("superabundance", [](int n) {
    const SuperabundanceReport r = superabundance(n);
    py::dict d;
    d["primes"] = r.primes;
    d["rank"] = r.rank;
    d["h0"] = r.h0;
    d["s"] = r.s;
    return d;
  });
  m.def("milnor_ratio", [](long n) { return milnor_ratio(n).get_str(); });
  m.def(
      "run",
      [](const std::string& subcommand, int n, const std::string& format) {
        cli::RunConfig c;
        c.subcommand = subcommand;
        c.n = n;
        c.format = format;
        const cli::RunResult r = cli::run(c);
        return py::make_tuple(r.exit_code, r.output);
      },
      py::arg("subcommand"), py::arg("n") = 3, py::arg("format") = "json");
}
