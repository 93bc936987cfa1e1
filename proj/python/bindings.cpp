#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycperm/autgroups.hpp"
#include "cycperm/cyclotomic.hpp"
#include "cycperm/equivalence.hpp"
#include "cycperm/error.hpp"
#include "cycperm/field.hpp"
#include "cycperm/json_io.hpp"

namespace py = pybind11;
using namespace cycperm;

// Reports cross the boundary as JSON text; the package decodes them.
namespace {

CyclicCode make_code(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& d) {
  return cyclic_code(make_field_of_order(q), n, d);
}

std::string analyze_json(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& d,
                         std::uint64_t node_budget) {
  AnalyzeOptions opt;
  opt.node_budget = node_budget;
  return to_json(analyze(make_code(q, n, d), opt)).dump();
}

std::string equivalent_json(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& d1,
                            const std::vector<std::uint32_t>& d2, const std::string& strategy) {
  return to_json(decide_equivalence(make_code(q, n, d1), make_code(q, n, d2), parse_strategy(strategy))).dump();
}

std::string enumerate_json(std::uint32_t q, std::uint32_t n) {
  Json out = Json::array();
  for (auto& spec : enumerate_cyclic_codes(make_field_of_order(q), n)) {
    CyclicCode code{spec, to_linear_code(spec)};
    out.push_back(code_summary(code, min_distance(code.code)));
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<Error>(m, "CycpermError");

  m.def("count_cyclic_codes", [](std::uint32_t n, std::uint64_t q) { return to_json(count_cyclic_codes(n, q)).dump(); },
        py::arg("n"), py::arg("q"));
  m.def("enumerate_json", &enumerate_json, py::arg("q"), py::arg("n"));
  m.def("analyze_json", &analyze_json, py::arg("q"), py::arg("n"), py::arg("defining_set"),
        py::arg("node_budget") = kDefaultNodeBudget);
  m.def("equivalent_json", &equivalent_json, py::arg("q"), py::arg("n"), py::arg("defining_set"),
        py::arg("other_defining_set"), py::arg("strategy") = "hp");
  m.def("multiplier_set", [](std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& d) {
    return multiplier_scan(make_code(q, n, d)).multiplier_set;
  });
  m.def("cyclotomic_cosets", [](std::uint32_t q, std::uint32_t n) {
    return CyclotomicContext(make_field_of_order(q), n).cosets();
  });
}
