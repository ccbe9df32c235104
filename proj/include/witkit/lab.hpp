#ifndef WITKIT_LAB_HPP
#define WITKIT_LAB_HPP

#include <cstdint>
#include <optional>

#include "witkit/matrix.hpp"
#include "witkit/witness.hpp"

namespace witkit {

/// A validated bipartite density matrix. Renormalization is never silent:
/// the original trace is kept when it was applied.
struct DensityState {
  CMatrix matrix;
  int dim_a = 0;
  int dim_b = 0;
  double original_trace = 1.0;
  bool renormalized = false;
};

/// Checks Hermiticity (1e-10), positivity (-1e-9) and unit trace (1e-9).
/// With renormalize set, divides by the trace first and records it.
/// Throws StateError on violation.
DensityState validate_state(const CMatrix& m, int dim_a, int dim_b, bool renormalize = false);

/// PPT verdict plus the minimal eigenvalue of the partial transpose.
struct PptResult {
  bool ppt = false;
  double min_eigenvalue = 0.0;
};
PptResult is_ppt(const DensityState& state, Subsystem sub = Subsystem::B);

/// Re(Tr(W rho)); the imaginary part must vanish to 1e-10.
double evaluate(const Witness& w, const DensityState& state);

/// A state with positive partial transpose and negative witness expectation
/// certifies the witness indecomposable.
struct CertificateReport {
  bool state_valid = false;
  bool ppt = false;
  bool detected = false;
  bool indecomposable_certified = false;
  double ppt_min_eigenvalue = 0.0;
  double expectation = 0.0;
  double detection_tol = 1e-9;
  double psd_tol = 1e-9;
};
CertificateReport certify_indecomposable(const Witness& w, const DensityState& state);

/// See-saw estimate of min over unit product vectors of <a(x)b|W|a(x)b>:
/// alternately fix one factor and take the bottom eigenvector of the
/// contracted matrix on the other, from Haar-random starts. The iteration is
/// monotone non-increasing; the best value over restarts is returned.
double block_positivity_min(const Witness& w, int dim_a, int dim_b, int restarts, int iters,
                            std::uint64_t seed);

/// Heuristic hunt for a PPT state with Tr(W rho) < -1e-7: gradient steps on
/// the expectation interleaved with alternating projections onto the PSD
/// trace-one set and the PPT set. Returns the first hit with both PSD
/// margins >= -1e-10, or nothing. Absence of a find proves nothing.
std::optional<DensityState> ppt_detection_search(const Witness& w, int dim_a, int dim_b,
                                                 int restarts, int iters, std::uint64_t seed);

}  // namespace witkit

#endif
