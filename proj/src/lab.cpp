#include "witkit/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "witkit/errors.hpp"
#include "witkit/rng.hpp"

namespace witkit {

namespace {

/// Contract one tensor factor of W with a unit vector, leaving the matrix
/// acting on the other factor.
CMatrix contract_factor(const CMatrix& w, const CVector& vec, int dim_a, int dim_b,
                        Subsystem fixed) {
  if (fixed == Subsystem::A) {
    CMatrix out = CMatrix::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_a; ++i)
      for (int k = 0; k < dim_a; ++k)
        out += std::conj(vec(i)) * vec(k) * w.block(i * dim_b, k * dim_b, dim_b, dim_b);
    return out;
  }
  CMatrix out = CMatrix::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i)
    for (int k = 0; k < dim_a; ++k) {
      Complex acc = 0.0;
      for (int j = 0; j < dim_b; ++j)
        for (int l = 0; l < dim_b; ++l)
          acc += std::conj(vec(j)) * vec(l) * w(i * dim_b + j, k * dim_b + l);
      out(i, k) = acc;
    }
  return out;
}

CVector bottom_eigenvector(const CMatrix& x, double* value) {
  const Spectrum s = hermitian_eigen((x + x.adjoint()) / 2.0, 1e-6);
  if (value) *value = s.eigenvalues(0);
  return s.eigenvectors.col(0);
}

/// Euclidean projection of eigenvalues onto the probability simplex.
RVector simplex_projection(const RVector& lam) {
  const Eigen::Index n = lam.size();
  std::vector<double> sorted(lam.data(), lam.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0, theta = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0) theta = candidate;
  }
  return (lam.array() - theta).cwiseMax(0.0);
}

CMatrix project_density(const CMatrix& x) {
  const Spectrum s = hermitian_eigen((x + x.adjoint()) / 2.0, 1e-6);
  const RVector lam = simplex_projection(s.eigenvalues);
  return s.eigenvectors * lam.asDiagonal() * s.eigenvectors.adjoint();
}

CMatrix project_psd(const CMatrix& x) {
  const Spectrum s = hermitian_eigen((x + x.adjoint()) / 2.0, 1e-6);
  const RVector lam = s.eigenvalues.cwiseMax(0.0);
  return s.eigenvectors * lam.asDiagonal() * s.eigenvectors.adjoint();
}

}  // namespace

DensityState validate_state(const CMatrix& m, int dim_a, int dim_b, bool renormalize) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (m.rows() != n || m.cols() != n)
    throw StateError("validate_state: matrix is not (dim_a*dim_b)-square");
  if (!is_hermitian(m, 1e-10)) throw StateError("validate_state: not Hermitian");
  DensityState state;
  state.dim_a = dim_a;
  state.dim_b = dim_b;
  state.original_trace = m.trace().real();
  if (renormalize) {
    if (std::abs(state.original_trace) < 1e-12) throw StateError("validate_state: zero trace");
    state.matrix = m / state.original_trace;
    state.renormalized = true;
  } else {
    if (std::abs(state.original_trace - 1.0) > 1e-9)
      throw StateError("validate_state: trace differs from 1; pass renormalize to accept");
    state.matrix = m;
  }
  if (min_eigenvalue(state.matrix) < -1e-9) throw StateError("validate_state: not PSD");
  return state;
}

PptResult is_ppt(const DensityState& state, Subsystem sub) {
  const CMatrix gamma = partial_transpose(state.matrix, state.dim_a, state.dim_b, sub);
  PptResult r;
  r.min_eigenvalue = min_eigenvalue(gamma);
  r.ppt = r.min_eigenvalue >= -1e-9;
  return r;
}

double evaluate(const Witness& w, const DensityState& state) {
  if (w.matrix.rows() != state.matrix.rows())
    throw ShapeError("evaluate: witness/state dimension mismatch");
  const Complex tr = (w.matrix * state.matrix).trace();
  if (std::abs(tr.imag()) > 1e-10)
    throw Error("evaluate: expectation has a non-real part " + std::to_string(tr.imag()));
  return tr.real();
}

CertificateReport certify_indecomposable(const Witness& w, const DensityState& state) {
  CertificateReport report;
  report.state_valid = true;  // DensityState is validated on construction
  const PptResult ppt = is_ppt(state);
  report.ppt = ppt.ppt;
  report.ppt_min_eigenvalue = ppt.min_eigenvalue;
  report.expectation = evaluate(w, state);
  report.detected = report.expectation < -report.detection_tol;
  report.indecomposable_certified = report.state_valid && report.ppt && report.detected;
  return report;
}

double block_positivity_min(const Witness& w, int dim_a, int dim_b, int restarts, int iters,
                            std::uint64_t seed) {
  if (w.matrix.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
    throw ShapeError("block_positivity_min: dimension mismatch");
  const Rng base(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng stream = base.fork(static_cast<std::uint64_t>(r));
    CVector a = stream.haar_vector(dim_a);
    double value = std::numeric_limits<double>::infinity();
    for (int it = 0; it < iters; ++it) {
      const CVector b = bottom_eigenvector(contract_factor(w.matrix, a, dim_a, dim_b,
                                                           Subsystem::A), nullptr);
      double current = 0.0;
      a = bottom_eigenvector(contract_factor(w.matrix, b, dim_a, dim_b, Subsystem::B), &current);
      if (std::abs(value - current) < 1e-12) {
        value = current;
        break;
      }
      value = current;
    }
    best = std::min(best, value);
  }
  return best;
}

std::optional<DensityState> ppt_detection_search(const Witness& w, int dim_a, int dim_b,
                                                 int restarts, int iters, std::uint64_t seed) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (w.matrix.rows() != n) throw ShapeError("ppt_detection_search: dimension mismatch");

  auto toward_ppt = [&](const CMatrix& x) {
    const CMatrix gamma = project_psd(partial_transpose(x, dim_a, dim_b, Subsystem::B));
    return partial_transpose(gamma, dim_a, dim_b, Subsystem::B);
  };
  // Dykstra's corrections make the pair of exact projectors converge to the
  // projection onto the intersection, which plain alternation does not.
  auto project_feasible = [&](CMatrix x) {
    CMatrix p = CMatrix::Zero(n, n), q = CMatrix::Zero(n, n);
    for (int sweep = 0; sweep < 12; ++sweep) {
      const CMatrix y = project_density(x + p);
      p = x + p - y;
      x = toward_ppt(y + q);
      q = y + q - x;
    }
    return x;
  };

  // steepest feasible descent direction: the traceless part of W
  const double dim = static_cast<double>(n);
  const CMatrix descent =
      w.matrix - (w.matrix.trace().real() / dim) * CMatrix::Identity(n, n);
  const double scale = descent.cwiseAbs().maxCoeff();
  if (scale < 1e-14) return std::nullopt;  // W is a multiple of the identity
  const double step0 = 0.5 / scale;
  const CMatrix uniform = CMatrix::Identity(n, n) / dim;

  const Rng base(seed);
  for (int r = 0; r < restarts; ++r) {
    Rng stream = base.fork(static_cast<std::uint64_t>(r));
    CMatrix rho = project_density(stream.hermitian(static_cast<int>(n)));
    for (int it = 0; it < iters; ++it) {
      const double eta = step0 / std::sqrt(1.0 + it);
      rho = project_feasible(rho - eta * descent);
      // residual infeasibility is repaired by mixing in the uniform state
      const double margin =
          std::min(min_eigenvalue(rho),
                   min_eigenvalue(partial_transpose(rho, dim_a, dim_b, Subsystem::B)));
      CMatrix candidate = rho;
      if (margin < 0) {
        const double eps =
            std::min(1.0, (dim + 0.1) * (-margin) / (1.0 + dim * (-margin)));
        candidate = (1.0 - eps) * rho + eps * uniform;
        candidate /= candidate.trace().real();
      }
      const double expectation = (w.matrix * candidate).trace().real();
      if (expectation < -1e-7 && min_eigenvalue(candidate) >= -1e-10 &&
          min_eigenvalue(partial_transpose(candidate, dim_a, dim_b, Subsystem::B)) >= -1e-10)
        return validate_state(candidate, dim_a, dim_b, true);
    }
  }
  return std::nullopt;
}

}  // namespace witkit
