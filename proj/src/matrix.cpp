#include "witkit/matrix.hpp"

#include <cmath>

#include "witkit/errors.hpp"

namespace witkit {

double hermiticity_defect(const CMatrix& x) {
  if (x.rows() != x.cols()) return std::numeric_limits<double>::infinity();
  return (x - x.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& x, double tol) { return hermiticity_defect(x) <= tol; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

CMatrix partial_transpose(const CMatrix& x, int dim_a, int dim_b, Subsystem sub) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (x.rows() != n || x.cols() != n)
    throw ShapeError("partial_transpose: matrix is not (dim_a*dim_b)-square");
  CMatrix out(n, n);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j) {
      auto block = x.block(i * dim_b, j * dim_b, dim_b, dim_b);
      if (sub == Subsystem::B)
        out.block(i * dim_b, j * dim_b, dim_b, dim_b) = block.transpose();
      else
        out.block(j * dim_b, i * dim_b, dim_b, dim_b) = block;
    }
  return out;
}

CMatrix partial_trace(const CMatrix& x, int dim_a, int dim_b, Subsystem traced_out) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (x.rows() != n || x.cols() != n)
    throw ShapeError("partial_trace: matrix is not (dim_a*dim_b)-square");
  if (traced_out == Subsystem::B) {
    CMatrix out = CMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        out(i, j) = x.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    return out;
  }
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_a; ++i) out += x.block(i * dim_b, i * dim_b, dim_b, dim_b);
  return out;
}

Spectrum hermitian_eigen(const CMatrix& x, double herm_tol) {
  if (x.rows() != x.cols()) throw ShapeError("hermitian_eigen: matrix not square");
  if (!is_hermitian(x, herm_tol))
    throw NotHermitianError("hermitian_eigen: Hermiticity defect above tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((x + x.adjoint()) / 2.0);
  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  // canonical phase: first nonzero component rotated to the positive real axis
  for (Eigen::Index c = 0; c < s.eigenvectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < s.eigenvectors.rows(); ++r) {
      const Complex v = s.eigenvectors(r, c);
      if (std::abs(v) > 1e-12) {
        s.eigenvectors.col(c) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return s;
}

double min_eigenvalue(const CMatrix& x, double herm_tol) {
  return hermitian_eigen(x, herm_tol).eigenvalues.minCoeff();
}

Complex frob_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("frob_inner: shape mismatch");
  return (a.adjoint() * b).trace();
}

bool is_psd(const CMatrix& x, double tol) { return min_eigenvalue(x) >= -tol; }

CMatrix max_entangled_projector(int d) {
  CVector omega = CVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) omega(static_cast<Eigen::Index>(i) * d + i) = 1.0 / std::sqrt(d);
  return omega * omega.adjoint();
}

}  // namespace witkit
