#include "witkit/cli.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "witkit/errors.hpp"
#include "witkit/examples.hpp"
#include "witkit/json_io.hpp"
#include "witkit/lab.hpp"
#include "witkit/maps.hpp"
#include "witkit/povm.hpp"
#include "witkit/presets.hpp"
#include "witkit/witness.hpp"

namespace witkit {

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kNegative = 2;

void emit(std::ostream& out, const Json& config, const Json& result,
          const std::string& out_path) {
  const Json report{{"config", config}, {"result", result}};
  out << report.dump(2) << "\n";
  if (!out_path.empty()) save_json_file(out_path, report);
}

std::vector<double> parse_csv_doubles(const std::string& csv) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  for (double v : parse_csv_doubles(csv)) out.push_back(static_cast<int>(v));
  return out;
}

GroupedBasis resolve_basis(const std::string& basis, const std::string& group, int n_groups) {
  GroupedBasis b = basis_from_preset(basis, group);
  if (n_groups > 0 && n_groups < b.N) b = b.take_first(n_groups);
  return b;
}

double resolve_x(const GroupedBasis& basis, const std::string& x_flag) {
  if (x_flag == "opt") return optimal_x(basis);
  try {
    return std::stod(x_flag);
  } catch (const std::exception&) {
    throw Error("--x expects a number or 'opt'");
  }
}

DensityState state_from_file(const std::string& path, bool renormalize) {
  const Json j = load_json_file(path);
  CMatrix m;
  int dim_a = 0, dim_b = 0;
  if (j.is_object() && j.contains("matrix")) {
    m = matrix_from_json(j.at("matrix"));
    if (j.contains("dims") && j.at("dims").is_array() && j.at("dims").size() == 2) {
      dim_a = j.at("dims")[0].get<int>();
      dim_b = j.at("dims")[1].get<int>();
    }
  } else {
    m = matrix_from_json(j);
  }
  if (dim_a == 0) {
    const auto root = static_cast<int>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
    if (static_cast<Eigen::Index>(root) * root != m.rows())
      throw IoError("state: dims not given and dimension is not a perfect square");
    dim_a = dim_b = root;
  }
  return validate_state(m, dim_a, dim_b, renormalize);
}

RotationSet resolve_rotations(const Json& spec, int n_groups) {
  if (spec.is_string()) return rotations_from_preset(spec.get<std::string>(), n_groups);
  if (spec.is_array()) {
    RotationSet set;
    for (const Json& jm : spec) {
      const CMatrix cm = matrix_from_json(jm);
      if (cm.imag().cwiseAbs().maxCoeff() > 0) throw IoError("rotation matrices must be real");
      set.matrices.push_back(cm.real());
      set.modes.push_back(RotationMode::Strict);
    }
    if (set.count() != n_groups) throw IoError("one rotation per POVM group required");
    return set;
  }
  throw IoError("rotations: expected a preset name or an array of matrices");
}

int cmd_povm_build(const std::string& basis, const std::string& group, const std::string& x_flag,
                   int n_groups, const std::string& out_path, double tol, std::ostream& out) {
  const GroupedBasis b = resolve_basis(basis, group, n_groups);
  const double x = resolve_x(b, x_flag);
  const Json config{{"command", "povm build"}, {"basis", basis},   {"group", group},
                    {"x", x},                  {"n", b.N},         {"tol", tol},
                    {"out", out_path}};
  SymmetricPovm povm;
  try {
    povm = build_povm_x(b, x, tol);
  } catch (const PositivityViolation& e) {
    emit(out, config,
         Json{{"error", e.what()}, {"alpha", e.alpha}, {"k", e.k}, {"min_eigenvalue", e.min_eig}},
         out_path);
    return kNegative;
  }
  const PovmValidation validation = validate_povm(povm);
  emit(out, config, povm_to_json(povm, validation), out_path);
  return validation.ok() ? kOk : kNegative;
}

int cmd_povm_validate(const std::string& in_path, const std::string& out_path,
                      std::ostream& out) {
  const SymmetricPovm povm = povm_from_json(load_json_file(in_path));
  const PovmValidation validation = validate_povm(povm);
  const Json config{{"command", "povm validate"}, {"in", in_path}};
  emit(out, config, povm_to_json(povm, validation), out_path);
  return validation.ok() ? kOk : kNegative;
}

int cmd_povm_optx(const std::string& basis, const std::string& group, int n_groups,
                  std::ostream& out) {
  const GroupedBasis b = resolve_basis(basis, group, n_groups);
  const double x = optimal_x(b);
  const auto range = x_range(b.d, b.M);
  const Json config{{"command", "povm optx"}, {"basis", basis}, {"group", group}, {"n", b.N}};
  emit(out, config,
       Json{{"x_opt", x}, {"range_low", range.low}, {"range_high", range.high}}, "");
  return kOk;
}

int cmd_map_build(const std::string& spec_path, const std::string& out_path, std::ostream& out) {
  const Json spec = load_json_file(spec_path);
  const std::string basis = spec.at("basis").get<std::string>();
  const std::string group = spec.value("group", std::string{});
  const int n_groups = spec.value("n", 0);
  const GroupedBasis b = resolve_basis(basis, group, n_groups);
  const double x = spec.at("x").is_string() ? resolve_x(b, spec.at("x").get<std::string>())
                                            : spec.at("x").get<double>();
  const int L = spec.at("L").get<int>();
  const RotationSet rotations = resolve_rotations(
      spec.contains("rotations") ? spec.at("rotations") : Json("identity:" + std::to_string(b.M)),
      b.N);
  const MapSpec map_spec = MapSpec::make(build_povm_x(b, x), rotations, L);
  const SuperOp phi = build_map(map_spec);
  const Json config{{"command", "map build"}, {"spec", spec}, {"out", out_path}};
  emit(out, config,
       Json{{"choi", matrix_to_json(phi.choi)},
            {"d", phi.d},
            {"trace_preservation_defect", trace_preservation_defect(phi)},
            {"coefficients",
             {{"a", map_spec.a}, {"b", map_spec.b}, {"y", map_spec.y}, {"L", map_spec.L}}}},
       out_path);
  return kOk;
}

RMatrix q_preset(const std::string& name, int dim) {
  if (name == "identity") return RMatrix::Identity(dim, dim);
  if (name == "zero") return RMatrix::Zero(dim, dim);
  const CMatrix cm = matrix_from_json(load_json_file(name));
  if (cm.imag().cwiseAbs().maxCoeff() > 0) throw IoError("Q must be real");
  return cm.real();
}

int cmd_witness_build(const std::string& form, const std::string& basis,
                      const std::string& group, int n_groups, int L,
                      const std::string& rotation, const std::string& x_flag,
                      const std::string& weights_csv, const std::string& subtract_csv,
                      const std::string& q_flag, const std::string& out_path,
                      std::ostream& out) {
  const Json config{{"command", "witness build"},
                    {"form", form},
                    {"basis", basis},
                    {"group", group},
                    {"n", n_groups},
                    {"L", L},
                    {"rotation", rotation},
                    {"x", x_flag},
                    {"weights", weights_csv},
                    {"subtract", subtract_csv},
                    {"q", q_flag},
                    {"out", out_path}};
  Witness w;
  if (form == "ccnr") {
    GroupedBasis b = resolve_basis(basis, group.empty() ? "chunk:2" : group, 0);
    CcnrSpec spec;
    spec.basis.push_back(b.g0);
    for (const auto& g : b.flat()) spec.basis.push_back(g);
    spec.q = q_preset(q_flag.empty() ? "identity" : q_flag, b.d * b.d);
    w = ccnr_witness(spec);
  } else {
    GroupedBasis b = resolve_basis(basis, group, n_groups);
    if (form == "rescaled") {
      const std::string rot = rotation.empty() ? "identity:" + std::to_string(b.M) : rotation;
      w = rescaled_witness(b, rotations_from_preset(rot, b.N), L < 0 ? b.N : L);
    } else if (form == "m2") {
      std::vector<int> signs(static_cast<std::size_t>(b.N) + 1, 1);
      for (int idx : parse_csv_ints(subtract_csv)) {
        if (idx < 0 || idx > b.N) throw Error("--subtract index out of range");
        signs[static_cast<std::size_t>(idx)] = -1;
      }
      w = m2_witness(b, signs);
    } else if (form == "weighted") {
      const std::string rot = rotation.empty() ? "identity:" + std::to_string(b.M) : rotation;
      std::vector<double> weights = parse_csv_doubles(weights_csv);
      if (weights.empty()) weights.assign(static_cast<std::size_t>(b.N), 1.0);
      w = weighted_witness(b, rotations_from_preset(rot, b.N), weights);
    } else if (form == "choi") {
      const double x = resolve_x(b, x_flag.empty() ? "opt" : x_flag);
      const std::string rot = rotation.empty() ? "identity:" + std::to_string(b.M) : rotation;
      const MapSpec spec = MapSpec::make(build_povm_x(b, x),
                                         rotations_from_preset(rot, b.N), L < 0 ? b.N : L);
      w = choi_witness(build_map(spec));
    } else {
      throw Error("unknown witness form '" + form + "'");
    }
    w.recipe.basis = basis;
    w.recipe.grouping = group;
    w.recipe.rotations = rotation;
  }
  emit(out, config, witness_to_json(w), out_path);
  return kOk;
}

int cmd_detect(const std::string& witness_path, const std::string& state_path, bool renormalize,
               double tol, const std::string& out_path, std::ostream& out) {
  const Witness w = witness_from_json(load_json_file(witness_path));
  const DensityState state = state_from_file(state_path, renormalize);
  const double expectation = evaluate(w, state);
  const bool detected = expectation < -tol;
  const Json config{{"command", "detect"},     {"witness", witness_path},
                    {"state", state_path},     {"renormalize", renormalize},
                    {"tol", tol},              {"out", out_path}};
  emit(out, config,
       Json{{"expectation", expectation},
            {"detected", detected},
            {"original_trace", state.original_trace}},
       out_path);
  return detected ? kOk : kNegative;
}

int cmd_certify(const std::string& witness_path, const std::string& state_path, bool renormalize,
                double tol, const std::string& out_path, std::ostream& out) {
  const Witness w = witness_from_json(load_json_file(witness_path));
  const DensityState state = state_from_file(state_path, renormalize);
  CertificateReport report = certify_indecomposable(w, state);
  report.detection_tol = tol;
  report.detected = report.expectation < -tol;
  report.indecomposable_certified = report.state_valid && report.ppt && report.detected;
  const Json config{{"command", "certify"},    {"witness", witness_path},
                    {"state", state_path},     {"renormalize", renormalize},
                    {"tol", tol},              {"out", out_path}};
  emit(out, config, certificate_to_json(report), out_path);
  return report.indecomposable_certified ? kOk : kNegative;
}

int cmd_hunt(const std::string& witness_path, int restarts, int iters, std::uint64_t seed,
             const std::string& out_path, std::ostream& out) {
  const Witness w = witness_from_json(load_json_file(witness_path));
  const auto root =
      static_cast<int>(std::llround(std::sqrt(static_cast<double>(w.matrix.rows()))));
  const auto found = ppt_detection_search(w, root, root, restarts, iters, seed);
  const Json config{{"command", "hunt-ppt"}, {"witness", witness_path}, {"restarts", restarts},
                    {"iters", iters},        {"seed", seed},            {"out", out_path}};
  if (!found) {
    emit(out, config, Json{{"found", false}}, out_path);
    return kNegative;
  }
  const double expectation = evaluate(w, *found);
  const PptResult ppt = is_ppt(*found);
  emit(out, config,
       Json{{"found", true},
            {"state", state_to_json(*found)},
            {"expectation", expectation},
            {"ppt_min_eigenvalue", ppt.min_eigenvalue}},
       out_path);
  return kOk;
}

int cmd_example_reproduce(const std::string& id, const std::string& out_path,
                          std::ostream& out) {
  const ReproduceReport report = reproduce(id);
  const Json config{{"command", "example reproduce"}, {"id", id}, {"report", out_path}};
  Json result{{"id", report.id},
              {"ratio", report.ratio},
              {"max_deviation", report.max_deviation},
              {"matched", report.matched},
              {"certificate", certificate_to_json(report.certificate)},
              {"display_expectation", report.display_expectation}};
  if (report.has_unboosted_check) result["unboosted_expectation"] = report.unboosted_expectation;
  emit(out, config, result, out_path);
  return (report.matched && report.certificate.indecomposable_certified) ? kOk : kNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entanglement witnesses from symmetric measurements"};
  app.require_subcommand(1);
  double tol = 1e-9;
  app.add_option("--tol", tol, "global tolerance override (detection / positivity)");

  std::string basis, group, x_flag = "opt", out_path, in_path, spec_path;
  std::string witness_path, state_path, form, rotation, weights_csv, subtract_csv, q_flag, id;
  int n_groups = 0, L = -1, restarts = 50, iters = 200;
  std::uint64_t seed = 0;
  bool renormalize = false;

  auto* povm = app.add_subcommand("povm", "build and validate symmetric POVM families");
  auto* povm_build = povm->add_subcommand("build", "construct an (N,M)-POVM family");
  povm_build->add_option("--basis", basis)->required();
  povm_build->add_option("--group", group)->required();
  povm_build->add_option("--x", x_flag, "purity parameter or 'opt'");
  povm_build->add_option("--n", n_groups, "restrict to the first n groups");
  povm_build->add_option("--out", out_path);
  auto* povm_validate = povm->add_subcommand("validate", "re-check the symmetry conditions");
  povm_validate->add_option("--in", in_path)->required();
  povm_validate->add_option("--out", out_path);
  auto* povm_optx = povm->add_subcommand("optx", "largest x keeping every element PSD");
  povm_optx->add_option("--basis", basis)->required();
  povm_optx->add_option("--group", group)->required();
  povm_optx->add_option("--n", n_groups);

  auto* map = app.add_subcommand("map", "positive trace-preserving maps");
  auto* map_build = map->add_subcommand("build", "assemble the Choi matrix from a spec file");
  map_build->add_option("--spec", spec_path)->required();
  map_build->add_option("--out", out_path);

  auto* witness = app.add_subcommand("witness", "entanglement witness factory");
  auto* witness_build = witness->add_subcommand("build", "build a witness in a chosen form");
  witness_build->add_option("--form", form)->required();
  witness_build->add_option("--basis", basis)->required();
  witness_build->add_option("--group", group);
  witness_build->add_option("--n", n_groups);
  witness_build->add_option("--L", L);
  witness_build->add_option("--rotation", rotation);
  witness_build->add_option("--x", x_flag);
  witness_build->add_option("--weights", weights_csv, "comma-separated per-group weights");
  witness_build->add_option("--subtract", subtract_csv, "m2 form: alphas taken negative");
  witness_build->add_option("--q", q_flag, "ccnr form: identity | zero | matrix file");
  witness_build->add_option("--out", out_path);

  auto* detect = app.add_subcommand("detect", "evaluate Tr(W rho)");
  detect->add_option("--witness", witness_path)->required();
  detect->add_option("--state", state_path)->required();
  detect->add_flag("--renormalize", renormalize);
  detect->add_option("--out", out_path);

  auto* certify = app.add_subcommand("certify", "PPT + detection certificate");
  certify->add_option("--witness", witness_path)->required();
  certify->add_option("--state", state_path)->required();
  certify->add_flag("--renormalize", renormalize);
  certify->add_option("--out", out_path);

  auto* hunt = app.add_subcommand("hunt-ppt", "search for a detected PPT state");
  hunt->add_option("--witness", witness_path)->required();
  hunt->add_option("--restarts", restarts);
  hunt->add_option("--iters", iters);
  hunt->add_option("--seed", seed);
  hunt->add_option("--out", out_path);

  auto* example = app.add_subcommand("example", "bundled reference constructions");
  auto* example_list = example->add_subcommand("list", "list known ids");
  auto* example_reproduce = example->add_subcommand("reproduce", "replay a bundled recipe");
  example_reproduce->add_option("id", id)->required();
  example_reproduce->add_option("--report", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return kBadInput;
  }
  if (tol <= 0) {
    err << "argument error: --tol must be positive\n";
    return kBadInput;
  }

  try {
    if (povm_build->parsed()) return cmd_povm_build(basis, group, x_flag, n_groups, out_path,
                                                    tol, out);
    if (povm_validate->parsed()) return cmd_povm_validate(in_path, out_path, out);
    if (povm_optx->parsed()) return cmd_povm_optx(basis, group, n_groups, out);
    if (map_build->parsed()) return cmd_map_build(spec_path, out_path, out);
    if (witness_build->parsed())
      return cmd_witness_build(form, basis, group, n_groups, L, rotation, x_flag, weights_csv,
                               subtract_csv, q_flag, out_path, out);
    if (detect->parsed()) return cmd_detect(witness_path, state_path, renormalize, tol,
                                            out_path, out);
    if (certify->parsed()) return cmd_certify(witness_path, state_path, renormalize, tol,
                                              out_path, out);
    if (hunt->parsed()) return cmd_hunt(witness_path, restarts, iters, seed, out_path, out);
    if (example_list->parsed()) {
      out << Json{{"examples", example_ids()}}.dump(2) << "\n";
      return kOk;
    }
    if (example_reproduce->parsed()) return cmd_example_reproduce(id, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  err << "no command given\n";
  return kBadInput;
}

}  // namespace witkit
