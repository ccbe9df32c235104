#include <doctest.h>

#include <cmath>

#include "witkit/bases.hpp"
#include "witkit/errors.hpp"
#include "witkit/matrix.hpp"
#include "witkit/presets.hpp"

using namespace witkit;

TEST_CASE("gell_mann_basis d=2 reproduces the Pauli triple over sqrt(2)") {
  const auto basis = gell_mann_basis(2);
  REQUIRE(basis.size() == 3);
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(basis[0](0, 1) - Complex(inv, 0)) < 1e-15);
  CHECK(std::abs(basis[1](0, 1) - Complex(0, -inv)) < 1e-15);
  CHECK(std::abs(basis[2](0, 0) - Complex(inv, 0)) < 1e-15);
  CHECK(std::abs(basis[2](1, 1) + Complex(inv, 0)) < 1e-15);
}

TEST_CASE("gell_mann_basis d=3 ordering and the diagonal elements") {
  const auto basis = gell_mann_basis(3);
  REQUIRE(basis.size() == 8);
  // g22 = diag(1,1,-2)/sqrt(6), last in the fixed ordering
  const double s6 = std::sqrt(6.0);
  CHECK(std::abs(basis[7](0, 0) - Complex(1 / s6, 0)) < 1e-15);
  CHECK(std::abs(basis[7](1, 1) - Complex(1 / s6, 0)) < 1e-15);
  CHECK(std::abs(basis[7](2, 2) + Complex(2 / s6, 0)) < 1e-15);
  // g01 has spectrum {-1/sqrt(2), 0, 1/sqrt(2)}
  const Spectrum s = hermitian_eigen(basis[0]);
  CHECK(s.eigenvalues(0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(s.eigenvalues(1) == doctest::Approx(0));
  CHECK(s.eigenvalues(2) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("gell_mann_basis is orthonormal for d up to 5") {
  for (int d : {2, 3, 4, 5}) {
    const auto basis = gell_mann_basis(d);
    REQUIRE(basis.size() == static_cast<std::size_t>(d * d - 1));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(basis[i].trace()) < 1e-14);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double expect = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(frob_inner(basis[i], basis[j]) - Complex(expect, 0)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(gell_mann_basis(1), Error);
}

TEST_CASE("mub projectors: idempotent, resolutions, unbiased overlaps") {
  const MubFamily fam = mub_projectors_d3();
  REQUIRE(fam.projectors.size() == 4);
  for (const auto& group : fam.projectors) {
    CMatrix sum = CMatrix::Zero(3, 3);
    for (const auto& p : group) {
      CHECK(std::abs(p.trace() - Complex(1, 0)) < 1e-12);
      CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(is_psd(p, 1e-9));
      sum += p;
    }
    CHECK((sum - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(std::abs(fam.projectors[0][0](0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs((fam.projectors[1][0] * fam.projectors[2][1]).trace() - Complex(1.0 / 3, 0)) <
        1e-12);
  // within a group, orthogonal; across groups, overlap 1/3
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double overlap =
              (fam.projectors[a][k] * fam.projectors[b][l]).trace().real();
          if (a == b)
            CHECK(overlap == doctest::Approx(k == l ? 1.0 : 0.0).epsilon(1e-10));
          else
            CHECK(overlap == doctest::Approx(1.0 / 3).epsilon(1e-10));
        }
}

TEST_CASE("mub_basis_d3 matches the published entries and is orthonormal") {
  const GroupedBasis basis = mub_basis_d3();
  CHECK(basis.d == 3);
  CHECK(basis.N == 4);
  CHECK(basis.M == 3);
  const double s3 = std::sqrt(3.0);
  CHECK(basis.element(0, 0)(0, 0).real() ==
        doctest::Approx((-2 - s3) / (s3 * (1 + s3))).epsilon(1e-14));
  CHECK(std::abs(frob_inner(basis.element(1, 0), basis.element(2, 1))) < 1e-12);
  CHECK(std::abs(basis.element(3, 1).trace()) < 1e-14);
  CHECK(basis.validate().ok());
}

TEST_CASE("mub_basis_d3 agrees with the basis derived from the projectors") {
  // independent route: invert E = I/M + tH at the projective parameter and
  // unwind the H definition
  const MubFamily fam = mub_projectors_d3();
  const GroupedBasis basis = mub_basis_d3();
  const int m = 3;
  const double sm = std::sqrt(3.0);
  const double t = std::sqrt((9.0 / 9.0 - 3.0 / 9.0) / ((m - 1) * (sm + 1) * (sm + 1)));
  for (int alpha = 0; alpha < 4; ++alpha) {
    std::vector<CMatrix> h;
    for (int k = 0; k < 3; ++k)
      h.push_back((fam.projectors[alpha][k] - CMatrix::Identity(3, 3) / 3.0) / t);
    const CMatrix group_sum = h[2] / (sm + 1);
    for (int k = 0; k < 2; ++k) {
      const CMatrix derived = (group_sum - h[k]) / (sm * (sm + 1));
      CHECK((derived - basis.element(alpha, k)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("published prefactor for G_{2,2} fails the unit-norm check") {
  // the as-printed 1/(sqrt(3)(1+sqrt(3))) prefactor doubles these three
  // elements; reported rather than silently corrected
  const GroupedBasis basis = mub_basis_d3();
  const CMatrix printed = 2.0 * basis.element(1, 1);
  CHECK(std::sqrt(frob_inner(printed, printed).real()) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(!mub_basis_prefactor_note().empty());
}

TEST_CASE("mub and gell-mann bases span the same traceless space") {
  const auto gm = gell_mann_basis(3);
  const auto mub = mub_basis_d3().flat();
  for (const auto& g : mub) {
    CMatrix residual = g;
    for (const auto& h : gm) residual -= frob_inner(h, g) * h;
    CHECK(residual.cwiseAbs().maxCoeff() < 1e-9);
  }
  for (const auto& h : gm) {
    CMatrix residual = h;
    for (const auto& g : mub) residual -= frob_inner(g, h) * g;
    CHECK(residual.cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("group_basis layouts and error paths") {
  const auto gm = gell_mann_basis(3);
  const GroupedBasis ex3 = basis_from_preset("gellmann:3", "ex3");
  CHECK(ex3.N == 4);
  CHECK(ex3.M == 3);
  CHECK((ex3.element(0, 0) - gm[0]).cwiseAbs().maxCoeff() == 0.0);  // g01
  CHECK((ex3.element(0, 1) - gm[1]).cwiseAbs().maxCoeff() == 0.0);  // g10

  const GroupedBasis ex5 = basis_from_preset("gellmann:3", "ex5");
  CHECK(ex5.N == 2);
  CHECK(ex5.M == 5);
  CHECK((ex5.element(0, 1) - gm[2]).cwiseAbs().maxCoeff() == 0.0);  // g02 second
  CHECK((ex5.element(1, 0) - gm[4]).cwiseAbs().maxCoeff() == 0.0);  // g12 leads group 2
  CHECK((ex5.element(1, 3) - gm[7]).cwiseAbs().maxCoeff() == 0.0);  // g22 last

  // duplicate label
  CHECK_THROWS_AS(group_basis({gm[0], gm[1]}, {{1, 1}, {1, 1}}), GroupingError);
  // incomplete grid
  CHECK_THROWS_AS(group_basis({gm[0], gm[1], gm[2]}, {{1, 1}, {1, 2}, {3, 1}}), GroupingError);
  // non-orthonormal input
  CHECK_THROWS_AS(group_basis({gm[0], 2.0 * gm[1]}, {{1, 1}, {1, 2}}), GroupingError);
}

TEST_CASE("ex4 grouping drops G_{1,1} when truncated to seven groups") {
  const GroupedBasis ex4 = basis_from_preset("mub3", "ex4");
  const GroupedBasis native = mub_basis_d3();
  CHECK(ex4.N == 8);
  CHECK(ex4.M == 2);
  CHECK((ex4.element(0, 0) - native.element(0, 1)).cwiseAbs().maxCoeff() == 0.0);  // G_{1,2}
  CHECK((ex4.element(7, 0) - native.element(0, 0)).cwiseAbs().maxCoeff() == 0.0);  // G_{1,1}
  const GroupedBasis seven = ex4.take_first(7);
  CHECK(seven.N == 7);
  CHECK_FALSE(seven.complete());
  CHECK(ex4.complete());
}
