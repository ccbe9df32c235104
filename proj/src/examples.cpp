#include "witkit/examples.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "witkit/errors.hpp"
#include "witkit/presets.hpp"

namespace witkit {

namespace {

const Complex kI(0.0, 1.0);

CMatrix hermitian_from_entries(const RVector& diag,
                               const std::vector<std::tuple<int, int, Complex>>& upper,
                               double prefactor) {
  CMatrix m = CMatrix::Zero(diag.size(), diag.size());
  m.diagonal() = diag.cast<Complex>();
  for (const auto& [i, j, val] : upper) {
    m(i, j) = val;
    m(j, i) = std::conj(val);
  }
  return m * prefactor;
}

ExampleBundle make_ex3() {
  const double s3 = std::sqrt(3.0);
  ExampleBundle b;
  b.id = "ex3";
  b.basis_preset = "gellmann:3";
  b.grouping_preset = "ex3";
  b.rotation_preset = "cycle:3";
  b.N = 4;
  b.M = 3;
  b.L = 3;
  RVector wd(9);
  wd << 2, 2, 8, 8, 2, 2, 2, 8, 2;
  const Complex z = 3.0 * (1.0 - kI * s3);
  b.witness_display =
      hermitian_from_entries(wd, {{0, 4, z}, {0, 8, z}, {4, 8, z}}, 1.0 / 6.0);
  RVector sd(9);
  sd << 125, 125, 34, 34, 125, 125, 125, 34, 125;
  const Complex w = -5.0 * (5.0 - 12.0 * kI);
  b.state_display =
      hermitian_from_entries(sd, {{0, 4, w}, {0, 8, w}, {4, 8, w}}, 1.0 / 579.0);
  b.notes = "state prefactor 1/579 conflicts with the diagonal sum 852; "
            "certification renormalizes by the trace";
  return b;
}

ExampleBundle make_ex4() {
  const double s3 = std::sqrt(3.0);
  ExampleBundle b;
  b.id = "ex4";
  b.basis_preset = "mub3";
  b.grouping_preset = "ex4";
  b.rotation_preset = "identity:2";
  b.N = 7;
  b.M = 2;
  b.L = 3;
  RVector wd(9);
  wd << 2 + s3, 5, 5 - s3, 5, 2 - s3, 5 + s3, 5 - s3, 5 + s3, 2;
  b.witness_display = hermitian_from_entries(
      wd,
      {{0, 4, 2.0}, {0, 8, 2.0}, {4, 8, 2.0}, {1, 5, -4.0}, {1, 6, -4.0}, {5, 6, -4.0},
       {2, 3, -4.0}, {2, 7, -4.0}, {3, 7, -4.0}},
      1.0 / 6.0);
  RVector sd(9);
  sd << 3, 2, 2, 2, 3, 2, 2, 2, 3;
  b.state_display = hermitian_from_entries(
      sd,
      {{0, 4, 1.0}, {0, 8, 1.0}, {4, 8, 1.0}, {1, 5, 2.0}, {1, 6, 2.0}, {5, 6, 2.0},
       {2, 3, 2.0}, {2, 7, 2.0}, {3, 7, 2.0}},
      1.0 / 21.0);
  b.constants["omega"] = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
  b.constants["u"] = (1.0 - kI) * (1.0 + s3);
  b.constants["v"] = 2.0 + s3 + kI;
  return b;
}

ExampleBundle make_ex5() {
  const double s5 = std::sqrt(5.0);
  ExampleBundle b;
  b.id = "ex5";
  b.basis_preset = "gellmann:3";
  b.grouping_preset = "ex5";
  b.rotation_preset = "rcycle:5";
  b.N = 1;
  b.M = 5;
  b.L = 1;
  b.weights = {5.0 * (1.0 + s5) * (1.0 + s5)};
  const Complex a = 15.0 * (1.0 - kI) * (2.0 - kI + s5);
  const Complex bc = 15.0 * (1.0 - kI) * (2.0 + kI + s5);
  const Complex c = -30.0 * s5 * (2.0 + s5);
  const Complex dc = 30.0 * (1.0 - 2.0 * kI) * (2.0 + s5);
  b.constants["A"] = a;
  b.constants["B"] = bc;
  b.constants["C"] = c;
  b.constants["D"] = dc;
  RVector wd = RVector::Constant(9, 4.0);
  // (2,6) carries -A, as Hermiticity against the printed (6,2) = -A* requires
  b.witness_display = hermitian_from_entries(
      wd,
      {{0, 4, std::conj(bc)}, {0, 5, c}, {0, 7, std::conj(dc)}, {0, 8, std::conj(bc)},
       {1, 3, std::conj(a)}, {1, 6, -30.0 * kI}, {2, 3, 30.0 * kI}, {2, 6, -a}},
      1.0 / 6.0);
  RVector sd = RVector::Constant(9, 10.0);
  b.state_display = hermitian_from_entries(
      sd, {{1, 3, 3.0 - 6.0 * kI}, {2, 6, -3.0 - 6.0 * kI}}, 1.0 / 90.0);
  b.notes = "weight is the total multiplier 5(1+sqrt(5))^2 on the alpha=1 term; "
            "the unboosted witness must not detect the state";
  return b;
}

Witness wrap_display(const CMatrix& m, const std::string& id) {
  Witness w;
  w.matrix = m;
  w.recipe.form = "display";
  w.recipe.basis = id;
  w.min_eigenvalue = min_eigenvalue(m);
  w.proper = w.min_eigenvalue < -1e-9;
  return w;
}

}  // namespace

std::vector<std::string> example_ids() { return {"ex3", "ex4", "ex5"}; }

ExampleBundle load_example(const std::string& id) {
  if (id == "ex3") return make_ex3();
  if (id == "ex4") return make_ex4();
  if (id == "ex5") return make_ex5();
  throw Error("unknown example id '" + id + "'");
}

Witness build_example_witness(const ExampleBundle& bundle) {
  GroupedBasis basis = basis_from_preset(bundle.basis_preset, bundle.grouping_preset);
  if (bundle.N < basis.N) basis = basis.take_first(bundle.N);
  const RotationSet rotations = rotations_from_preset(bundle.rotation_preset, basis.N);
  if (!bundle.weights.empty()) return weighted_witness(basis, rotations, bundle.weights);
  return rescaled_witness(basis, rotations, bundle.L);
}

ReproduceReport reproduce(const std::string& id) {
  const ExampleBundle bundle = load_example(id);
  ReproduceReport report;
  report.id = id;

  const Witness built = build_example_witness(bundle);
  const Proportionality prop = proportionality(built.matrix, bundle.witness_display);
  report.ratio = prop.ratio;
  // deviation measured on the display scale
  report.max_deviation = (prop.ratio > 0) ? prop.max_deviation / prop.ratio
                                          : std::numeric_limits<double>::infinity();
  report.matched = prop.ratio > 0 && report.max_deviation <= 1e-8;

  const DensityState state = validate_state(bundle.state_display, 3, 3, /*renormalize=*/true);
  const Witness display = wrap_display(bundle.witness_display, id);
  report.certificate = certify_indecomposable(display, state);
  report.display_expectation = report.certificate.expectation;

  if (id == "ex5") {
    report.has_unboosted_check = true;
    ExampleBundle unboosted = bundle;
    unboosted.weights = {1.0};
    const Witness plain = build_example_witness(unboosted);
    report.unboosted_expectation = evaluate(plain, state);
  }
  return report;
}

}  // namespace witkit
