#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmcells/alcove.hpp"
#include "cmcells/blocks.hpp"
#include "cmcells/cores.hpp"
#include "cmcells/domino.hpp"
#include "cmcells/errors.hpp"
#include "cmcells/report.hpp"
#include "cmcells/verify.hpp"

namespace py = pybind11;
using namespace cmcells;

namespace {

using Rows = std::vector<int>;

Multipartition to_mp(const std::vector<Rows>& comps) {
  std::vector<Partition> parts;
  for (const auto& c : comps) parts.emplace_back(c);
  return Multipartition(std::move(parts));
}

std::vector<Rows> from_mp(const Multipartition& mp) {
  std::vector<Rows> out;
  for (const auto& c : mp.components()) out.push_back(c.parts());
  return out;
}

std::string blocks_json(int ell, int n, std::optional<std::string> theta, std::optional<std::string> c_s,
                        std::optional<std::string> c_t, int max_size, unsigned workers) {
  BlockOptions options;
  options.max_size = max_size;
  options.workers = workers;
  if (n < 0) throw InvalidParameter("n must be nonnegative");
  if (theta.has_value() == (c_s || c_t)) throw InvalidParameter("give exactly one of theta or (c_s, c_t)");
  py::gil_scoped_release release;
  if (theta) {
    ThetaPoint point = ThetaPoint::parse(*theta);
    if (point.ell() != ell) throw InvalidParameter("theta must have ell coordinates");
    return block_report(cm_partition(ell, n, point, options)).dump();
  }
  if (!c_s || !c_t) throw InvalidParameter("c_s and c_t must be given together");
  if (ell != 2) throw InvalidParameter("c_s/c_t describe type B (ell = 2)");
  return block_report(cm_partition_from_c_type_B(Rational::parse(*c_s), Rational::parse(*c_t), n, options)).dump();
}

std::string cells_json(int n, int r, int max_size, unsigned workers) {
  if (n < 0 || r < 0) throw InvalidParameter("n and r must be nonnegative");
  CellOptions options;
  options.max_size = max_size;
  options.workers = workers;
  py::gil_scoped_release release;
  return cell_report(r_cells(n, r, options)).dump();
}

std::string verify_json(int max_n, int max_r, bool stretch, bool inject_fault, unsigned workers) {
  if (max_n < 0 || max_r < 0) throw InvalidParameter("max_n and max_r must be nonnegative");
  VerifyOptions options;
  options.max_n = max_n;
  options.max_r = max_r;
  options.workers = workers;
  if (stretch) options.extra = {{5, 0}, {5, 1}, {5, 2}};
  if (inject_fault) options.fault = Fault::flip_residue_parity;
  py::gil_scoped_release release;
  return verify_report(run_verification(options)).dump();
}

}  // namespace

PYBIND11_MODULE(_cmcells, m) {
  m.doc() = "Calogero-Moser blocks and type-B domino r-cells, exact arithmetic";

  auto& base = py::register_exception<Error>(m, "CmcellsError");
  py::register_exception<InvalidParameter>(m, "InvalidParameterError", base.ptr());
  py::register_exception<EnumerationLimit>(m, "EnumerationLimitError", base.ptr());
  py::register_exception<WrongCore>(m, "WrongCoreError", base.ptr());
  py::register_exception<NotNormalizable>(m, "NotNormalizableError", base.ptr());
  py::register_exception<InvalidShape>(m, "InvalidShapeError", base.ptr());
  py::register_exception<NoPath>(m, "NoPathError", base.ptr());
  py::register_exception<Overflow>(m, "OverflowError", base.ptr());

  m.def("blocks_json", &blocks_json, py::arg("ell"), py::arg("n"), py::arg("theta") = py::none(),
        py::arg("c_s") = py::none(), py::arg("c_t") = py::none(), py::arg("max_size") = kDefaultMaxPartitionSize,
        py::arg("workers") = 1);
  m.def("cells_json", &cells_json, py::arg("n"), py::arg("r"), py::arg("max_size") = kDefaultMaxPartitionSize,
        py::arg("workers") = 1);
  m.def("verify_json", &verify_json, py::arg("max_n") = 4, py::arg("max_r") = 3, py::arg("stretch") = false,
        py::arg("inject_fault") = false, py::arg("workers") = 1);
  m.def("reduce_json", [](const std::string& theta, bool adjacent) {
    return reduce_report(ThetaPoint::parse(theta), adjacent).dump();
  }, py::arg("theta"), py::arg("adjacent") = false);

  m.def("tau", [](const Rows& charge, const std::vector<Rows>& mp) { return tau(Charge(charge), to_mp(mp)).parts(); },
        py::arg("charge"), py::arg("multipartition"));
  m.def("tau_inverse", [](const Rows& charge, const Rows& lambda) {
    return from_mp(tau_inverse(Charge(charge), Partition(lambda)));
  }, py::arg("charge"), py::arg("partition"));
  m.def("ell_core", [](const Rows& lambda, int ell) { return ell_core(Partition(lambda), ell).parts(); },
        py::arg("partition"), py::arg("ell"));
  m.def("core_of_charge", [](const Rows& charge) { return core_of_charge(Charge(charge)).parts(); },
        py::arg("charge"));
  m.def("j_heart", [](const Rows& lambda, const std::vector<int>& J, int ell) {
    return j_heart(Partition(lambda), TypeJ(ell, J)).parts();
  }, py::arg("partition"), py::arg("J"), py::arg("ell"));
  m.def("P_r", [](int n, int r) {
    std::vector<Rows> out;
    for (const auto& lambda : enumerate_P_r(n, r)) out.push_back(lambda.parts());
    return out;
  }, py::arg("n"), py::arg("r"));
}
