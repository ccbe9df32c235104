#ifndef WITKIT_MATRIX_HPP
#define WITKIT_MATRIX_HPP

#include <complex>

#include <Eigen/Dense>

namespace witkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

/// Default absolute tolerance on max entrywise |X - X^dag|.
inline constexpr double kHermitianTol = 1e-10;

/// Max entrywise deviation from Hermiticity.
double hermiticity_defect(const CMatrix& x);

bool is_hermitian(const CMatrix& x, double tol = kHermitianTol);

/// Kronecker product, (i*rows_b+j, k*cols_b+l) = a(i,k)*b(j,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

enum class Subsystem { A, B };

/// Partial transpose of a (dim_a*dim_b)-square matrix on one tensor factor.
/// Applying it twice on the same subsystem is the identity.
CMatrix partial_transpose(const CMatrix& x, int dim_a, int dim_b, Subsystem sub);

/// Partial trace over one tensor factor of a (dim_a*dim_b)-square matrix.
CMatrix partial_trace(const CMatrix& x, int dim_a, int dim_b, Subsystem traced_out);

/// Full spectrum of a Hermitian matrix.
/// Eigenvalues ascending; eigenvectors orthonormal columns, each with its
/// first nonzero component rotated real-positive so the output is
/// deterministic up to degenerate subspaces.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

/// Throws NotHermitianError when the defect exceeds herm_tol.
Spectrum hermitian_eigen(const CMatrix& x, double herm_tol = kHermitianTol);

double min_eigenvalue(const CMatrix& x, double herm_tol = kHermitianTol);

/// Frobenius inner product Tr(a^dag b). Throws ShapeError on mismatch.
Complex frob_inner(const CMatrix& a, const CMatrix& b);

/// True iff the minimal eigenvalue is >= -tol.
bool is_psd(const CMatrix& x, double tol);

/// Maximally entangled projector P_+ = |Omega><Omega| on C^d x C^d.
CMatrix max_entangled_projector(int d);

}  // namespace witkit

#endif
