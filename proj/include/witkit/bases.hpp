#ifndef WITKIT_BASES_HPP
#define WITKIT_BASES_HPP

#include <string>
#include <utility>
#include <vector>

#include "witkit/matrix.hpp"

namespace witkit {

/// An orthonormal Hermitian operator basis {g0 = I/sqrt(d), G_{alpha,k}}
/// arranged into N groups of width M-1. N*(M-1) <= d^2-1, with equality
/// iff the basis is complete.
struct GroupedBasis {
  int d = 0;
  int N = 0;
  int M = 0;  // POVM size; groups hold M-1 elements each
  CMatrix g0;
  std::vector<std::vector<CMatrix>> groups;

  const CMatrix& element(int alpha, int k) const { return groups.at(alpha).at(k); }

  bool complete() const { return N * (M - 1) == d * d - 1; }

  /// All traceless elements in group-major order.
  std::vector<CMatrix> flat() const;

  /// Sub-basis keeping the first n groups.
  GroupedBasis take_first(int n) const;

  /// Max deviation of the Gram matrix of {g0} + flat() from the identity,
  /// together with the worst trace and Hermiticity defects.
  struct Validation {
    double gram_defect = 0.0;
    double trace_defect = 0.0;
    double herm_defect = 0.0;
    bool ok(double tol = 1e-10) const {
      return gram_defect <= tol && trace_defect <= 1e-12 && herm_defect <= 1e-12;
    }
  };
  Validation validate() const;
};

/// Generalized Gell-Mann matrices, d^2-1 of them, unit Frobenius norm.
/// Order: for each index pair (j,k), j<k, lexicographically, the symmetric
/// element then the antisymmetric one; then the d-1 diagonal elements.
/// For d=3 this is g01,g10,g02,g20,g12,g21,g11,g22.
std::vector<CMatrix> gell_mann_basis(int d);

/// Partition orthonormal traceless elements into groups via (alpha,k) labels
/// (1-based). Labels must tile the full N x (M-1) grid with no duplicates.
GroupedBasis group_basis(const std::vector<CMatrix>& elements,
                         const std::vector<std::pair<int, int>>& labels);

/// Sequential grouping into groups of width M-1.
GroupedBasis chunk_grouping(const std::vector<CMatrix>& elements, int M);

/// The d=3 Hermitian basis derived from the four mutually unbiased bases,
/// native grouping N=4, M=3. The three matrices whose published prefactor
/// fails the unit-norm check are stored with the corrected normalization
/// 1/(2*sqrt(3)*(1+sqrt(3))); see mub_basis_prefactor_note().
GroupedBasis mub_basis_d3();

/// Names the elements whose published prefactor is off by a factor 2.
std::string mub_basis_prefactor_note();

/// The twelve rank-1 MUB projectors in d=3, four groups of three.
struct MubFamily {
  int d = 3;
  std::vector<std::vector<CMatrix>> projectors;  // 4 x 3
  Complex omega;                                 // exp(2 pi i / 3)
  Complex u;                                     // (1-i)(1+sqrt(3))
  Complex v;                                     // 2+sqrt(3)+i
};
MubFamily mub_projectors_d3();

}  // namespace witkit

#endif
