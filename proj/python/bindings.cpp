#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoendo/frobenius.hpp"
#include "monoendo/report.hpp"

namespace py = pybind11;
using namespace monoendo;

namespace {

std::string run(const std::string& command, const std::string& config_text, std::optional<std::int64_t> q,
                std::optional<std::string> word, std::optional<int> depth, std::optional<std::size_t> cell) {
  const Config cfg = parse_config(config_text, "<config>");
  RunOptions opts;
  opts.q = q;
  opts.depth = depth;
  opts.cell = cell;
  if (word) opts.word = parse_word(*word);
  py::gil_scoped_release release;
  return render(run_command(command, cfg, opts));
}

DatumPtr datum_of(const std::string& cartan_type, const std::string& isogeny) {
  if (isogeny == "sc" || isogeny == "simply_connected") return RootDatum::from_cartan(cartan_type, Isogeny::simply_connected);
  if (isogeny == "ad" || isogeny == "adjoint") return RootDatum::from_cartan(cartan_type, Isogeny::adjoint);
  throw InputError("isogeny must be \"sc\" or \"adjoint\"");
}

}  // namespace

PYBIND11_MODULE(_monoendo, m) {
  m.doc() = "Monodromic Hecke algebras, blocks, cells and Frobenius counts for root data";
  m.attr("__version__") = MONOENDO_VERSION;
  m.attr("REPORT_SCHEMA") = kReportSchema;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<RefusalError>(m, "RefusalError", PyExc_RuntimeError);

  m.def("run", &run, py::arg("command"), py::arg("config_text"), py::arg("q") = py::none(),
        py::arg("word") = py::none(), py::arg("depth") = py::none(), py::arg("cell") = py::none(),
        "Report for analyze | kl | cells | cocycle | count | bsl as a JSON string.");

  m.def(
      "endoscopic_type",
      [](const std::string& cartan_type, const std::vector<std::string>& chi, const std::string& isogeny) {
        const ReflectionSubgroup g = w_circ(CharParam::parse(datum_of(cartan_type, isogeny), chi));
        return g.is_trivial() ? std::string("torus") : g.type_label();
      },
      py::arg("cartan_type"), py::arg("chi"), py::arg("isogeny") = "sc");

  m.def(
      "count_torus_case",
      [](const std::string& cartan_type, const std::vector<std::string>& chi, std::int64_t q,
         const std::string& delta, const std::string& isogeny) {
        const DatumPtr d = datum_of(cartan_type, isogeny);
        IntMat dm = IntMat::identity(d->rank());
        if (delta == "unitary" || delta == "opposition") dm = Twist::opposition(d);
        else if (delta != "split" && delta != "identity") throw InputError("delta must be split or unitary");
        return count_torus_case(CharParam::parse(d, chi), Twist::frobenius(d, q, dm)).count;
      },
      py::arg("cartan_type"), py::arg("chi"), py::arg("q"), py::arg("delta") = "split", py::arg("isogeny") = "sc");
}
