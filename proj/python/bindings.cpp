#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "autorbit/catalog.hpp"
#include "autorbit/error.hpp"
#include "autorbit/group_file.hpp"
#include "autorbit/report.hpp"
#include "autorbit/verifier.hpp"

namespace py = pybind11;
using namespace autorbit;

namespace {

verify::Options make_options(std::uint64_t max_order, std::optional<double> timeout) {
  verify::Options o;
  o.max_order = max_order;
  o.timeout_secs = timeout;
  return o;
}

py::dict analyze(const PermGroup& g, std::uint64_t max_order, std::optional<double> timeout) {
  auto r = report::build({g.name(), "python", g, std::nullopt}, make_options(max_order, timeout));
  py::dict d;
  d["name"] = r.name;
  d["degree"] = r.degree;
  d["order"] = r.order;
  d["primes"] = r.primes;
  d["solvable"] = r.solvable;
  if (r.skipped) {
    d["skipped"] = *r.skipped;
    return d;
  }
  d["simple"] = r.simple.value_or(false);
  d["spectrum"] = r.spectrum;
  d["classes"] = *r.classes;
  d["omega"] = *r.omega;
  d["at"] = *r.at;
  d["aut_order"] = *r.aut_order;
  py::list cells;
  for (const auto& c : r.cells) cells.append(py::make_tuple(c.element_order, c.size));
  d["orbits"] = cells;
  py::list chars;
  for (const auto& k : r.characteristic) chars.append(k.order);
  d["characteristic_orders"] = chars;
  return d;
}

}  // namespace

PYBIND11_MODULE(_autorbit, m) {
  m.doc() = "Automorphism orbits of finite permutation groups";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegreeMismatch>(m, "DegreeMismatch", PyExc_ValueError);
  py::register_exception<UnknownGroupError>(m, "UnknownGroupError", PyExc_KeyError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& cycles, std::size_t degree) {
             return Permutation::from_cycles(cycles, degree);
           }),
           py::arg("cycles"), py::arg("degree"))
      .def_static("from_images",
                  [](const std::vector<Point>& images) { return Permutation::from_images(images); })
      .def_property_readonly("degree", &Permutation::degree)
      .def("images", &Permutation::images_one_based)
      .def("order", &Permutation::order)
      .def("inverse", &Permutation::inverse)
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def("__pow__", [](const Permutation& a, std::int64_t k) { return power(a, k); })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& a) { return PermutationHash{}(a); })
      .def("__str__", &Permutation::to_cycles)
      .def("__repr__", [](const Permutation& a) { return "Permutation('" + a.to_cycles() + "')"; });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<std::size_t, std::vector<Permutation>, std::string>(), py::arg("degree"),
           py::arg("generators"), py::arg("name") = "")
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("name", &PermGroup::name)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("order", &PermGroup::order)
      .def("__contains__", &PermGroup::contains)
      .def("__repr__", [](const PermGroup& g) {
        return "PermGroup(" + (g.name().empty() ? std::string("?") : g.name()) +
               ", order=" + std::to_string(g.order()) + ")";
      });

  m.def("group", &catalog::build, py::arg("name"), "Build a group from its catalog name");
  m.def("load_group_file", [](const std::filesystem::path& p) { return load_group_file(p).group(); });
  m.def("parse_group_file", [](const std::string& text) { return parse_group_file(text).group(); });

  m.def("omega", py::overload_cast<const PermGroup&>(&omega), py::arg("group"));
  m.def("spectrum", [](const PermGroup& g) { return spectrum(ElementTable(g)); });
  m.def("is_solvable", &is_solvable);
  m.def("automorphism_group_order",
        [](const PermGroup& g) { return automorphism_group_order(ElementTable(g)); });
  m.def("isomorphic", py::overload_cast<const PermGroup&, const PermGroup&>(&isomorphic));
  m.def("direct_product", &direct_product);
  m.def("analyze", &analyze, py::arg("group"), py::arg("max_order") = 0,
        py::arg("timeout_secs") = std::nullopt,
        "Invariant report as a dict: order, spectrum, omega, orbit census, ...");

  m.def("verify_targets", &verify::targets);
  m.def(
      "verify",
      [](const std::string& target, std::optional<std::filesystem::path> corpus, bool defaults,
         std::uint64_t max_order, std::optional<double> timeout) {
        auto o = make_options(max_order, timeout);
        o.corpus_dir = corpus;
        o.include_defaults = defaults;
        auto out = verify::run(target, o);
        py::list verdicts;
        for (const auto& v : out.verdicts)
          verdicts.append(py::make_tuple(std::string(verify::to_string(v.status)), v.check,
                                         v.subject, v.reason));
        return py::make_tuple(out.exit_code(), verdicts);
      },
      py::arg("target"), py::arg("corpus") = std::nullopt, py::arg("defaults") = true,
      py::arg("max_order") = 0, py::arg("timeout_secs") = std::nullopt,
      "Returns (exit_code, [(status, check, subject, reason), ...])");
}
