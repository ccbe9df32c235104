#include <doctest.h>

#include <cmath>

#include "witkit/errors.hpp"
#include "witkit/maps.hpp"
#include "witkit/matrix.hpp"
#include "witkit/presets.hpp"
#include "witkit/rng.hpp"

using namespace witkit;

namespace {

MapSpec reference_spec(int L) {
  const GroupedBasis basis = basis_from_preset("gellmann:3", "ex3");
  return MapSpec::make(build_povm_x(basis, 5.0 / 9), RotationSet::cycle(4, 3), L);
}

}  // namespace

TEST_CASE("validate_rotation modes") {
  CHECK(validate_rotation(RMatrix::Identity(3, 3), RotationMode::Strict));
  RMatrix cyc(3, 3);
  cyc << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  CHECK(validate_rotation(cyc, RotationMode::Strict));
  std::string diag;
  CHECK_FALSE(validate_rotation(-RMatrix::Identity(2, 2), RotationMode::Strict, 1e-10, &diag));
  CHECK(!diag.empty());
  CHECK(validate_rotation(-RMatrix::Identity(2, 2), RotationMode::SignFlip));
  CHECK(validate_rotation(RMatrix::Zero(4, 4), RotationMode::Zero));
  CHECK_FALSE(validate_rotation(RMatrix::Identity(4, 4), RotationMode::Zero));
}

TEST_CASE("random strict rotations satisfy both constraints") {
  Rng rng(17);
  for (int m : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 5; ++trial) {
      const RMatrix o = random_strict_rotation(m, rng);
      CHECK(validate_rotation(o, RotationMode::Strict, 1e-9));
    }
  }
}

TEST_CASE("apply_phi_alpha preserves identity and trace in strict mode") {
  const MapSpec spec = reference_spec(3);
  const RMatrix& o = spec.rotations.matrices[0];
  const CMatrix out = apply_phi_alpha(spec.povm, o, 0, CMatrix::Identity(3, 3));
  CHECK((out - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

  Rng rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix x = rng.hermitian(3);
    const CMatrix y = apply_phi_alpha(spec.povm, o, 1, x);
    CHECK(std::abs(y.trace() - x.trace()) < 1e-12);
    CHECK(is_hermitian(y, 1e-12));
  }

  CMatrix basis_state = CMatrix::Zero(3, 3);
  basis_state(0, 0) = 1.0;
  const CMatrix mapped = apply_phi_alpha(spec.povm, o, 0, basis_state);
  CHECK(std::abs(mapped.trace() - Complex(1, 0)) < 1e-12);
  CHECK(is_hermitian(mapped, 1e-12));

  CHECK_THROWS_AS(apply_phi_alpha(spec.povm, o, 9, basis_state), RangeError);
}

TEST_CASE("apply_phi0 is the depolarizing channel") {
  CHECK((apply_phi0(CMatrix::Identity(3, 3)) - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-15);
  CMatrix traceless = CMatrix::Zero(3, 3);
  traceless(0, 1) = 1.0;
  CHECK(apply_phi0(traceless).cwiseAbs().maxCoeff() < 1e-15);
  traceless(0, 1) = 0.0;
  traceless(0, 0) = 1.0;
  traceless(1, 1) = -1.0;
  CHECK(apply_phi0(traceless).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("MapSpec coefficients follow the x overlap algebra") {
  const MapSpec spec = reference_spec(3);
  const auto& p = spec.povm.params;
  CHECK(spec.y == doctest::Approx((p.d - p.M * p.x) / (p.M * (p.M - 1.0))).epsilon(1e-14));
  CHECK(spec.b ==
        doctest::Approx((p.d - 1.0) * (p.M * p.M * p.x - p.d) / (p.d * (p.M - 1.0)))
            .epsilon(1e-12));
  CHECK(spec.a == doctest::Approx(spec.b - p.N + 2 * spec.L).epsilon(1e-14));
}

TEST_CASE("build_map produces a trace-preserving unital Choi matrix") {
  for (int L : {0, 2, 4}) {
    const MapSpec spec = reference_spec(L);
    const SuperOp phi = build_map(spec);
    CHECK(trace_preservation_defect(phi) < 1e-9);
    CHECK(is_hermitian(phi.choi, 1e-10));
    const CMatrix mapped_id = apply_superop(phi, CMatrix::Identity(3, 3));
    CHECK((mapped_id - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("apply_superop agrees with the direct sum of maps") {
  const MapSpec spec = reference_spec(3);
  const SuperOp phi = build_map(spec);
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix x = rng.hermitian(3);
    CMatrix direct = spec.a * apply_phi0(x);
    for (int alpha = 0; alpha < 4; ++alpha) {
      const CMatrix term = apply_phi_alpha(spec.povm, spec.rotations.matrices[alpha], alpha, x);
      direct += (alpha >= spec.L) ? term : -term;
    }
    direct /= spec.b;
    CHECK((apply_superop(phi, x) - direct).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("map linearity on random inputs") {
  const SuperOp phi = build_map(reference_spec(2));
  Rng rng(12);
  const CMatrix x = rng.hermitian(3), y = rng.hermitian(3);
  const CMatrix lhs = apply_superop(phi, 0.7 * x + Complex(0, 1.3) * y);
  const CMatrix rhs = 0.7 * apply_superop(phi, x) + Complex(0, 1.3) * apply_superop(phi, y);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("degenerate scale and invalid rotation are rejected") {
  const GroupedBasis basis = basis_from_preset("gellmann:3", "ex3");
  CHECK_THROWS_AS(build_map(MapSpec::make(build_povm(basis, 0.0), RotationSet::cycle(4, 3), 2)),
                  DegenerateScale);
  RotationSet bad = RotationSet::cycle(4, 3);
  bad.matrices[2] = -RMatrix::Identity(3, 3);
  CHECK_THROWS_AS(build_map(MapSpec::make(build_povm_x(basis, 0.5), bad, 2)), InvalidRotation);
}

TEST_CASE("positivity probe clears the reference map") {
  const SuperOp phi = build_map(reference_spec(3));
  const PositivityReport report = positivity_probe(phi, 1000, 0);
  CHECK(report.samples == 1000);
  CHECK_FALSE(report.purity_bound_exceeded);
  CHECK_FALSE(report.negative_output_found);
  CHECK(report.max_purity <= 0.5 + 1e-9);
  CHECK(report.min_output_eigenvalue >= -1e-8);
}

TEST_CASE("positivity probe is reproducible for a fixed seed") {
  const SuperOp phi = build_map(reference_spec(1));
  const PositivityReport a = positivity_probe(phi, 64, 5);
  const PositivityReport b = positivity_probe(phi, 64, 5);
  CHECK(a.max_purity == b.max_purity);
  CHECK(a.min_output_eigenvalue == b.min_output_eigenvalue);
}

TEST_CASE("transposition map passes the eigenvalue probe but not the purity bound") {
  // the swap operator is the Choi matrix of the transposition map
  SuperOp transpose;
  transpose.d = 3;
  transpose.choi = partial_transpose(3.0 * max_entangled_projector(3), 3, 3, Subsystem::B);
  const PositivityReport report = positivity_probe(transpose, 200, 0);
  CHECK_FALSE(report.negative_output_found);   // transposition is positive
  CHECK(report.purity_bound_exceeded);         // pure outputs, not from this family
}

TEST_CASE("over-subtracted map is caught by the probe") {
  const MapSpec spec = reference_spec(4);  // L = N
  const auto& p = spec.povm.params;
  const Eigen::Index dd = static_cast<Eigen::Index>(p.d) * p.d;
  CMatrix choi = ((spec.a - 3.0) / p.d) * CMatrix::Identity(dd, dd);
  for (int alpha = 0; alpha < p.N; ++alpha)
    choi -= k_operator(spec.povm, spec.rotations.matrices[alpha], alpha);
  const SuperOp bad{choi / spec.b, p.d};
  const PositivityReport report = positivity_probe(bad, 500, 0);
  CHECK(report.negative_output_found);
}
