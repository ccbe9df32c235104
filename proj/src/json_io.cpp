#include "witkit/json_io.hpp"

#include <cmath>
#include <fstream>

#include "witkit/errors.hpp"

namespace witkit {

Json matrix_to_json(const CMatrix& x) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      entries.push_back({x(i, j).real(), x(i, j).imag()});
  return Json{{"rows", x.rows()}, {"cols", x.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw IoError("matrix: expected {rows, cols, entries}");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw IoError("matrix: rows and cols must be positive");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols))
    throw IoError("matrix: entry count does not match rows*cols");
  CMatrix x(rows, cols);
  std::size_t idx = 0;
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw IoError("matrix: entries must be [re, im] pairs");
    const double re = e[0].get<double>(), im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw IoError("matrix: non-finite entry rejected");
    x(static_cast<Eigen::Index>(idx) / cols, static_cast<Eigen::Index>(idx) % cols) =
        Complex(re, im);
    ++idx;
  }
  return x;
}

Json witness_to_json(const Witness& w) {
  Json recipe{{"form", w.recipe.form},
              {"basis", w.recipe.basis},
              {"grouping", w.recipe.grouping},
              {"rotations", w.recipe.rotations},
              {"L", w.recipe.L},
              {"weights", w.recipe.weights},
              {"scale", w.recipe.scale},
              {"q_norm", w.recipe.q_norm}};
  return Json{{"matrix", matrix_to_json(w.matrix)},
              {"recipe", std::move(recipe)},
              {"min_eigenvalue", w.min_eigenvalue},
              {"proper", w.proper}};
}

Witness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw IoError("witness: missing matrix");
  Witness w;
  w.matrix = matrix_from_json(j.at("matrix"));
  if (!is_hermitian(w.matrix, 1e-10)) throw IoError("witness: matrix is not Hermitian");
  if (j.contains("recipe")) {
    const Json& r = j.at("recipe");
    w.recipe.form = r.value("form", "unknown");
    w.recipe.basis = r.value("basis", "");
    w.recipe.grouping = r.value("grouping", "");
    w.recipe.rotations = r.value("rotations", "");
    w.recipe.L = r.value("L", -1);
    w.recipe.weights = r.value("weights", std::vector<double>{});
    w.recipe.scale = r.value("scale", 1.0);
    w.recipe.q_norm = r.value("q_norm", 0.0);
  }
  w.min_eigenvalue = min_eigenvalue(w.matrix);
  w.proper = w.min_eigenvalue < -1e-9;
  return w;
}

Json state_to_json(const DensityState& s) {
  return Json{{"matrix", matrix_to_json(s.matrix)},
              {"dims", {s.dim_a, s.dim_b}},
              {"original_trace", s.original_trace},
              {"renormalized", s.renormalized}};
}

Json povm_to_json(const SymmetricPovm& povm, const PovmValidation& validation) {
  Json elements = Json::array();
  for (const auto& group : povm.elements) {
    Json row = Json::array();
    for (const auto& e : group) row.push_back(matrix_to_json(e));
    elements.push_back(std::move(row));
  }
  Json params{{"d", povm.params.d},
              {"N", povm.params.N},
              {"M", povm.params.M},
              {"x", povm.params.x},
              {"t", povm.params.t},
              {"degenerate", povm.degenerate}};
  Json report{{"trace_defect", validation.trace_defect},
              {"purity_defect", validation.purity_defect},
              {"within_defect", validation.within_defect},
              {"across_defect", validation.across_defect},
              {"resolution_defect", validation.resolution_defect},
              {"min_eigenvalue", validation.min_eigenvalue},
              {"ok", validation.ok()}};
  return Json{{"params", std::move(params)},
              {"elements", std::move(elements)},
              {"validation", std::move(report)}};
}

SymmetricPovm povm_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("params") || !j.contains("elements"))
    throw IoError("povm: expected {params, elements}");
  const Json& p = j.at("params");
  SymmetricPovm povm;
  povm.params.d = p.at("d").get<int>();
  povm.params.N = p.at("N").get<int>();
  povm.params.M = p.at("M").get<int>();
  povm.params.x = p.at("x").get<double>();
  povm.params.t = p.at("t").get<double>();
  povm.degenerate = p.value("degenerate", povm.params.t == 0.0);
  for (const Json& row : j.at("elements")) {
    std::vector<CMatrix> group;
    for (const Json& e : row) group.push_back(matrix_from_json(e));
    povm.elements.push_back(std::move(group));
  }
  if (povm.elements.size() != static_cast<std::size_t>(povm.params.N))
    throw IoError("povm: element rows do not match N");
  for (const auto& group : povm.elements)
    if (group.size() != static_cast<std::size_t>(povm.params.M))
      throw IoError("povm: element row width does not match M");
  return povm;
}

Json certificate_to_json(const CertificateReport& r) {
  return Json{{"state_valid", r.state_valid},
              {"ppt", r.ppt},
              {"detected", r.detected},
              {"indecomposable_certified", r.indecomposable_certified},
              {"ppt_min_eigenvalue", r.ppt_min_eigenvalue},
              {"expectation", r.expectation},
              {"detection_tol", r.detection_tol},
              {"psd_tol", r.psd_tol}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace witkit
