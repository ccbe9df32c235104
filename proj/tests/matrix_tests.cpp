#include <doctest.h>

#include <cmath>

#include "witkit/errors.hpp"
#include "witkit/matrix.hpp"
#include "witkit/rng.hpp"

using namespace witkit;

namespace {

CMatrix pauli_x() {
  CMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

}  // namespace

TEST_CASE("kron identity and diagonal cases") {
  const CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(((kron(i2, i2) - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff()) == doctest::Approx(0));

  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a.diagonal() << 1, 2;
  b.diagonal() << 3, 4;
  CMatrix expect = CMatrix::Zero(4, 4);
  expect.diagonal() << 3, 4, 6, 8;
  CHECK((kron(a, b) - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("kron of pauli factors acting on the Bell-like vector") {
  // hand expansion: sigma_x (x) sigma_x is the anti-diagonal permutation, so
  // (1,0,0,1)/sqrt(2) is a fixed point; flipping a single factor swaps it to
  // (0,1,1,0)/sqrt(2)
  CVector bell(4);
  bell << 1, 0, 0, 1;
  bell /= std::sqrt(2.0);
  CVector flipped(4);
  flipped << 0, 1, 1, 0;
  flipped /= std::sqrt(2.0);
  const CMatrix sxsx = kron(pauli_x(), pauli_x());
  CHECK((sxsx * bell - bell).cwiseAbs().maxCoeff() < 1e-15);
  const CMatrix sxi = kron(pauli_x(), CMatrix::Identity(2, 2));
  CHECK((sxi * bell - flipped).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("kron associativity and trace multiplicativity") {
  Rng rng(11);
  const CMatrix a = rng.hermitian(2), b = rng.hermitian(3), c = rng.hermitian(2);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
}

TEST_CASE("partial transpose basics") {
  CHECK((partial_transpose(CMatrix::Identity(9, 9), 3, 3, Subsystem::B) -
         CMatrix::Identity(9, 9)).cwiseAbs().maxCoeff() == doctest::Approx(0));

  // 3 P_+ partially transposed is the swap, spectrum {1 x6, -1 x3}
  const CMatrix swap = partial_transpose(3.0 * max_entangled_projector(3), 3, 3, Subsystem::B);
  const Spectrum s = hermitian_eigen(swap);
  int plus = 0, minus = 0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (std::abs(s.eigenvalues(i) - 1.0) < 1e-12) ++plus;
    if (std::abs(s.eigenvalues(i) + 1.0) < 1e-12) ++minus;
  }
  CHECK(plus == 6);
  CHECK(minus == 3);

  CHECK_THROWS_AS(partial_transpose(CMatrix::Identity(8, 8), 3, 3, Subsystem::B), ShapeError);
}

TEST_CASE("partial transpose is an involution on random Hermitian input") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix x = rng.hermitian(9);
    for (auto sub : {Subsystem::A, Subsystem::B}) {
      const CMatrix again = partial_transpose(partial_transpose(x, 3, 3, sub), 3, 3, sub);
      CHECK((again - x).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("hermitian_eigen sorts and reconstructs") {
  CMatrix d = CMatrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  const Spectrum s = hermitian_eigen(d);
  CHECK(s.eigenvalues(0) == doctest::Approx(1));
  CHECK(s.eigenvalues(1) == doctest::Approx(2));
  CHECK(s.eigenvalues(2) == doctest::Approx(3));

  CMatrix sx = pauli_x();
  const Spectrum sp = hermitian_eigen(sx);
  CHECK(sp.eigenvalues(0) == doctest::Approx(-1));
  CHECK(sp.eigenvalues(1) == doctest::Approx(1));

  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix x = rng.hermitian(6);
    const Spectrum spec = hermitian_eigen(x);
    const CMatrix rebuilt = spec.eigenvectors *
                            spec.eigenvalues.cast<Complex>().asDiagonal() *
                            spec.eigenvectors.adjoint();
    CHECK((rebuilt - x).norm() < 1e-8);
    // residual and orthonormality contracts
    for (Eigen::Index i = 0; i < 6; ++i) {
      const CVector v = spec.eigenvectors.col(i);
      CHECK((x * v - spec.eigenvalues(i) * v).norm() <= 1e-9 * x.norm());
    }
    CHECK((spec.eigenvectors.adjoint() * spec.eigenvectors - CMatrix::Identity(6, 6))
              .cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("hermitian_eigen canonical phase and ordering are deterministic") {
  Rng rng(9);
  const CMatrix x = rng.hermitian(5);
  const Spectrum a = hermitian_eigen(x);
  const Spectrum b = hermitian_eigen(x);
  CHECK((a.eigenvectors - b.eigenvectors).cwiseAbs().maxCoeff() == 0.0);
  for (Eigen::Index c = 0; c < 5; ++c) {
    Eigen::Index first = 0;
    while (std::abs(a.eigenvectors(first, c)) <= 1e-12) ++first;
    CHECK(a.eigenvectors(first, c).imag() == doctest::Approx(0).epsilon(1e-12));
    CHECK(a.eigenvectors(first, c).real() > 0);
  }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  CMatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eigen(bad), NotHermitianError);
}

TEST_CASE("frob_inner values") {
  CHECK(frob_inner(CMatrix::Identity(3, 3), CMatrix::Identity(3, 3)).real() ==
        doctest::Approx(3));
  CHECK_THROWS_AS(frob_inner(CMatrix::Identity(3, 3), CMatrix::Identity(2, 2)), ShapeError);
}

TEST_CASE("is_psd thresholding") {
  CHECK(is_psd(CMatrix::Identity(3, 3), 1e-9));
  CMatrix d = CMatrix::Zero(2, 2);
  d.diagonal() << 1.0, -0.1;
  CHECK_FALSE(is_psd(d, 1e-9));
}
