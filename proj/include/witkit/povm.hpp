#ifndef WITKIT_POVM_HPP
#define WITKIT_POVM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "witkit/bases.hpp"
#include "witkit/matrix.hpp"

namespace witkit {

/// Parameters of an (N,M)-POVM family: purity parameter x in the open-closed
/// range (d/M^2, min{d^2/M^2, d/M}] and the construction parameter t with
/// x = d/M^2 + t^2 (M-1)(sqrt(M)+1)^2.
struct PovmParams {
  int d = 0;
  int N = 0;
  int M = 0;
  double x = 0.0;
  double t = 0.0;
};

double x_from_t(int d, int M, double t);
/// Inverse of x_from_t on t >= 0. Throws RangeError for x < d/M^2.
double t_from_x(int d, int M, double x);

/// Admissible x interval (low, high], low = d/M^2 excluded.
struct XRange {
  double low;
  double high;
};
XRange x_range(int d, int M);

/// Integer solutions of N = (d^2-1)/(M-1), tagged with the named classes
/// where applicable.
struct IcClass {
  int N;
  int M;
  enum class Tag { GeneralSic, Mum, TwoOutcome, DPlusTwo, Other } tag;
  std::string name;
};
std::vector<IcClass> ic_classes(int d);

/// Traceless operators H_{alpha,k}: the k<M branch is
/// G_alpha - sqrt(M)(sqrt(M)+1) G_{alpha,k}, the k=M branch (sqrt(M)+1) G_alpha,
/// with G_alpha the group sum. They satisfy
///   Tr(H^2) = (M-1)(sqrt(M)+1)^2,  Tr(H_k H_l) = -(sqrt(M)+1)^2 (l != k),
/// and vanish across groups.
struct HFamily {
  std::vector<std::vector<CMatrix>> operators;  // N x M
  std::vector<CMatrix> group_sums;              // G_alpha
};
HFamily build_h_family(const GroupedBasis& basis);

/// N POVMs of M elements E_{alpha,k} = I/M + t H_{alpha,k}.
struct SymmetricPovm {
  PovmParams params;
  std::vector<std::vector<CMatrix>> elements;  // N x M
  GroupedBasis source;
  bool degenerate = false;  // t = 0: x sits on the open boundary

  const CMatrix& element(int alpha, int k) const { return elements.at(alpha).at(k); }
};

/// Builds the POVM family at parameter t (t >= 0). Throws PositivityViolation,
/// carrying the offending (alpha,k), when some element dips below -psd_tol.
/// t = 0 is accepted but flagged degenerate.
SymmetricPovm build_povm(const GroupedBasis& basis, double t, double psd_tol = 1e-9);

/// Same, parametrized by x. Throws RangeError for x outside the admissible range.
SymmetricPovm build_povm_x(const GroupedBasis& basis, double x, double psd_tol = 1e-9);

/// Largest x for which every element stays PSD (within 1e-9), found by
/// bisection on t (60 iterations, tolerance 1e-10) and capped at the range
/// maximum.
double optimal_x(const GroupedBasis& basis);

/// Worst deviations from the four symmetry conditions plus resolution and
/// positivity checks.
struct PovmValidation {
  double trace_defect = 0.0;       // |Tr E - d/M|
  double purity_defect = 0.0;      // |Tr E^2 - x|
  double within_defect = 0.0;      // |Tr E_k E_l - (d-Mx)/(M(M-1))|
  double across_defect = 0.0;      // |Tr E_k E'_l - d/M^2|
  double resolution_defect = 0.0;  // max | sum_k E - I |
  double min_eigenvalue = 0.0;
  bool degenerate = false;
  bool ok(double sym_tol = 1e-9, double res_tol = 1e-10, double psd_tol = 1e-9) const;
};
PovmValidation validate_povm(const SymmetricPovm& povm);

/// Outcome probabilities p_{alpha,k} = Tr(E_{alpha,k} rho) for a valid state.
struct ProbabilityTable {
  RMatrix p;  // N x M, rows sum to 1
  double purity = 0.0;
};
ProbabilityTable probabilities(const SymmetricPovm& povm, const CMatrix& rho);

/// The index-of-coincidence bound: lhs = sum_{alpha<=L} sum_k p^2 against
/// rhs = L/M + (M^2 x - d)(d Tr(rho^2) - 1)/(d M (M-1)). For L = N the bound
/// is an identity and equality_gap records |lhs - rhs|.
struct CoincidenceBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double equality_gap = 0.0;  // meaningful for L = N
};
CoincidenceBound coincidence_bound_check(const SymmetricPovm& povm, const CMatrix& rho, int L);

}  // namespace witkit

#endif
