#ifndef WITKIT_WITNESS_HPP
#define WITKIT_WITNESS_HPP

#include <string>
#include <vector>

#include "witkit/bases.hpp"
#include "witkit/maps.hpp"
#include "witkit/matrix.hpp"

namespace witkit {

/// Construction metadata carried next to the matrix so reports can replay it.
struct WitnessRecipe {
  std::string form;     // choi | rescaled | ccnr | m2 | weighted
  std::string basis;    // preset or description
  std::string grouping;
  std::string rotations;
  int L = -1;
  std::vector<double> weights;
  double scale = 1.0;    // canonical display scale (largest diagonal -> 1)
  double q_norm = 0.0;   // largest singular value of the effective Q, when known
};

/// A d^2 x d^2 Hermitian block-positive candidate. proper is set when at
/// least one eigenvalue is negative; otherwise the operator is positive and
/// detects nothing.
struct Witness {
  CMatrix matrix;
  WitnessRecipe recipe;
  double min_eigenvalue = 0.0;
  bool proper = false;
};

/// Wraps a Choi matrix as a witness (W equals the Choi matrix itself).
Witness choi_witness(const SuperOp& phi);

/// J_alpha = (M/d) sum_{k,l<=M} O_{kl} conj(H_{alpha,l}) (x) H_{alpha,k}.
/// Internally cross-checked against the equivalent basis-element form
/// (M/d) sum_{k,l<=M-1} Q_{kl} conj(G_{alpha,l}) (x) G_{alpha,k); the two
/// routes must agree to 1e-10.
CMatrix j_operator(const GroupedBasis& basis, const RMatrix& rotation, int alpha);

/// Q^(alpha)_{kl} = M(O_MM - 1) + M(sqrt(M)+1)^2 O_{kl}
///                  - M(sqrt(M)+1)(O_Ml + O_kM),  k,l = 1..M-1.
/// Satisfies Q^T Q = M^2 (sqrt(M)+1)^4 I for strict rotations.
RMatrix q_from_rotation(const RMatrix& rotation, int m);

/// x-independent witness
///   (d-1)/d^2 M^2 (sqrt(M)+1)^2 I + sum_{alpha>L} J_alpha - sum_{alpha<=L} J_alpha.
Witness rescaled_witness(const GroupedBasis& basis, const RotationSet& rotations, int L);

/// W' = I - sum Q_{mu,nu} G_mu^T (x) G_nu over a full orthonormal Hermitian
/// basis (mu = 0 is the identity element). Requires ||Q||_2 <= 1 + 1e-9.
struct CcnrSpec {
  std::vector<CMatrix> basis;  // d^2 elements, basis[0] = I/sqrt(d)
  RMatrix q;                   // d^2 x d^2 real
};
Witness ccnr_witness(const CcnrSpec& spec);

/// Block-diagonal Q embedding a rescaled-witness construction: scalar block 1
/// and blocks +-Q^(alpha)T / (M (sqrt(M)+1)^2), negative for alpha > L.
RMatrix block_q(const GroupedBasis& basis, const RotationSet& rotations, int L);

/// M=2 family: I + sum_{+} G_alpha^T (x) G_alpha - sum_{-} G_alpha^T (x) G_alpha
/// with signs per alpha = 0..N (the alpha = 0 term is I/d).
Witness m2_witness(const GroupedBasis& basis, const std::vector<int>& signs);

/// c I - sum_alpha w_alpha J_alpha with c = (d-1)/d^2 M^2 (sqrt(M)+1)^2.
/// Weights +-1 with w_alpha = +1 for alpha <= L recover rescaled_witness.
/// The recipe records the effective Q norm (sup of |w_alpha|) for auditing.
Witness weighted_witness(const GroupedBasis& basis, const RotationSet& rotations,
                         const std::vector<double>& weights);

/// Scalar making the largest diagonal entry 1; used for display normalization.
double canonical_scale(const CMatrix& w);

/// Least-squares proportionality factor and the max entrywise deviation
/// |a - ratio*b| between two matrices; used for display comparisons.
struct Proportionality {
  double ratio = 0.0;
  double max_deviation = 0.0;
};
Proportionality proportionality(const CMatrix& a, const CMatrix& b);

}  // namespace witkit

#endif
