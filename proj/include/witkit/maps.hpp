#ifndef WITKIT_MAPS_HPP
#define WITKIT_MAPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "witkit/matrix.hpp"
#include "witkit/povm.hpp"
#include "witkit/rng.hpp"

namespace witkit {

enum class RotationMode { Strict, SignFlip, Zero };

/// Per-POVM M x M real rotations O^(alpha). Strict mode: orthogonal with all
/// row and column sums 1 (preserves the uniform vector n* = (1,..,1)/sqrt(M)).
/// SignFlip: orthogonal with O n* = -n*. Zero: the zero matrix, admitted only
/// on the CCNR route.
struct RotationSet {
  std::vector<RMatrix> matrices;
  std::vector<RotationMode> modes;

  int count() const { return static_cast<int>(matrices.size()); }

  static RotationSet identity(int n, int m);
  /// Single-step cyclic permutation O_{k,l} = 1 iff l = k+1 (mod m).
  static RotationSet cycle(int n, int m);
  /// The opposite orientation, l = k-1 (mod m).
  static RotationSet reverse_cycle(int n, int m);
  static RotationSet uniform(int n, const RMatrix& o, RotationMode mode = RotationMode::Strict);
};

bool validate_rotation(const RMatrix& o, RotationMode mode, double tol = 1e-10,
                       std::string* diagnostics = nullptr);

/// Haar-random strict rotation: identity on n*, Haar orthogonal on its
/// complement.
RMatrix random_strict_rotation(int m, Rng& rng);

/// Recipe for the map Phi = (1/b)[a Phi_0 + sum_{alpha>L} Phi_alpha
/// - sum_{alpha<=L} Phi_alpha], with y the within-POVM overlap
/// (d - Mx)/(M(M-1)), b = (d-1)M(x-y)/d and a = b - N + 2L.
struct MapSpec {
  SymmetricPovm povm;
  RotationSet rotations;
  int L = 0;
  double y = 0.0;
  double a = 0.0;
  double b = 0.0;

  static MapSpec make(SymmetricPovm povm, RotationSet rotations, int L);
};

/// A linear map represented by its Choi matrix sum |k><l| (x) Phi[|k><l|].
struct SuperOp {
  CMatrix choi;  // d^2 x d^2
  int d = 0;
};

/// Phi_alpha[X] = (M/d) sum_{k,l} O_{kl} E_{alpha,k} Tr(X E_{alpha,l}).
CMatrix apply_phi_alpha(const SymmetricPovm& povm, const RMatrix& rotation, int alpha,
                        const CMatrix& x);

/// Maximally depolarizing channel, Tr(X) I/d.
CMatrix apply_phi0(const CMatrix& x);

/// Choi matrix of Phi_alpha: K_alpha = (M/d) sum O_{kl} conj(E_{alpha,l}) (x) E_{alpha,k}.
CMatrix k_operator(const SymmetricPovm& povm, const RMatrix& rotation, int alpha);

/// Assembles the Choi matrix of Phi. Throws DegenerateScale when b <= 1e-12
/// and InvalidRotation when a rotation fails its mode.
SuperOp build_map(const MapSpec& spec);

/// Apply a map through its Choi matrix: Phi[X] = Tr_A[(X^T (x) I) C].
CMatrix apply_superop(const SuperOp& phi, const CMatrix& x);

/// Max |Tr_B(choi) - I| — zero for trace-preserving maps.
double trace_preservation_defect(const SuperOp& phi);

/// Samples Haar-random rank-1 projectors P and records the worst output
/// purity Tr((Phi[P])^2) against the bound 1/(d-1) and the worst output
/// eigenvalue. The purity bound is the sufficient positivity condition for
/// maps of this family; the eigenvalue probe is the generic positivity check.
struct PositivityReport {
  int samples = 0;
  double max_purity = 0.0;
  double purity_bound = 0.0;
  double min_output_eigenvalue = 0.0;
  bool purity_bound_exceeded = false;   // beyond +1e-9
  bool negative_output_found = false;   // below -1e-8
};
PositivityReport positivity_probe(const SuperOp& phi, int samples, std::uint64_t seed);

}  // namespace witkit

#endif
