#include "witkit/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "witkit/errors.hpp"

namespace witkit {

RotationSet RotationSet::identity(int n, int m) {
  return uniform(n, RMatrix::Identity(m, m));
}

RotationSet RotationSet::cycle(int n, int m) {
  RMatrix o = RMatrix::Zero(m, m);
  for (int k = 0; k < m; ++k) o(k, (k + 1) % m) = 1.0;
  return uniform(n, o);
}

RotationSet RotationSet::reverse_cycle(int n, int m) {
  RMatrix o = RMatrix::Zero(m, m);
  for (int k = 0; k < m; ++k) o(k, (k + m - 1) % m) = 1.0;
  return uniform(n, o);
}

RotationSet RotationSet::uniform(int n, const RMatrix& o, RotationMode mode) {
  RotationSet set;
  set.matrices.assign(n, o);
  set.modes.assign(n, mode);
  return set;
}

bool validate_rotation(const RMatrix& o, RotationMode mode, double tol, std::string* diagnostics) {
  std::ostringstream diag;
  bool ok = true;
  if (o.rows() != o.cols()) {
    diag << "not square; ";
    ok = false;
  } else if (mode == RotationMode::Zero) {
    if (o.cwiseAbs().maxCoeff() > tol) {
      diag << "zero mode requires the zero matrix; ";
      ok = false;
    }
  } else {
    const int m = static_cast<int>(o.rows());
    const double orth = (o.transpose() * o - RMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
    if (orth > tol) {
      diag << "orthogonality defect " << orth << "; ";
      ok = false;
    }
    const double target = (mode == RotationMode::Strict) ? 1.0 : -1.0;
    const double rows = (o.rowwise().sum().array() - target).abs().maxCoeff();
    const double cols = (o.colwise().sum().array() - target).abs().maxCoeff();
    if (rows > tol || cols > tol) {
      diag << "row/column sums deviate from " << target << " by " << std::max(rows, cols) << "; ";
      ok = false;
    }
  }
  if (diagnostics) *diagnostics = diag.str();
  return ok;
}

RMatrix random_strict_rotation(int m, Rng& rng) {
  const RVector star = RVector::Constant(m, 1.0 / std::sqrt(static_cast<double>(m)));
  // complement of the uniform vector
  RMatrix raw(m, m - 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m - 1; ++j) raw(i, j) = rng.normal();
  raw -= star * (star.transpose() * raw);
  Eigen::HouseholderQR<RMatrix> qr(raw);
  RMatrix basis = qr.householderQ() * RMatrix::Identity(m, m - 1);
  basis -= star * (star.transpose() * basis);  // kill round-off leakage
  for (int j = 0; j < m - 1; ++j) {
    for (int i = 0; i < j; ++i) basis.col(j) -= basis.col(i) * (basis.col(i).dot(basis.col(j)));
    basis.col(j).normalize();
  }
  RMatrix g(m - 1, m - 1);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<RMatrix> qr2(g);
  RMatrix r = qr2.householderQ() * RMatrix::Identity(m - 1, m - 1);
  RMatrix sign_fix = RMatrix::Identity(m - 1, m - 1);
  const RMatrix rr = qr2.matrixQR();
  for (int i = 0; i < m - 1; ++i)
    if (rr(i, i) < 0) sign_fix(i, i) = -1.0;
  r = r * sign_fix;
  return star * star.transpose() + basis * r * basis.transpose();
}

MapSpec MapSpec::make(SymmetricPovm povm, RotationSet rotations, int L) {
  const auto& p = povm.params;
  if (L < 0 || L > p.N) throw RangeError("MapSpec: L outside [0, N]");
  if (rotations.count() != p.N) throw InvalidRotation("MapSpec: one rotation per POVM required");
  MapSpec spec;
  spec.y = (p.d - p.M * p.x) / (p.M * (p.M - 1.0));
  spec.b = (p.d - 1.0) * p.M * (p.x - spec.y) / p.d;
  spec.a = spec.b - p.N + 2.0 * L;
  spec.L = L;
  spec.povm = std::move(povm);
  spec.rotations = std::move(rotations);
  return spec;
}

CMatrix apply_phi_alpha(const SymmetricPovm& povm, const RMatrix& rotation, int alpha,
                        const CMatrix& x) {
  const auto& p = povm.params;
  if (alpha < 0 || alpha >= p.N) throw RangeError("apply_phi_alpha: alpha out of range");
  if (x.rows() != p.d || x.cols() != p.d) throw ShapeError("apply_phi_alpha: input dimension");
  CMatrix out = CMatrix::Zero(p.d, p.d);
  for (int k = 0; k < p.M; ++k) {
    Complex weight = 0.0;
    for (int l = 0; l < p.M; ++l)
      if (rotation(k, l) != 0.0) weight += rotation(k, l) * (x * povm.element(alpha, l)).trace();
    out += weight * povm.element(alpha, k);
  }
  return (static_cast<double>(p.M) / p.d) * out;
}

CMatrix apply_phi0(const CMatrix& x) {
  if (x.rows() != x.cols()) throw ShapeError("apply_phi0: input not square");
  const auto d = x.rows();
  return (x.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
}

CMatrix k_operator(const SymmetricPovm& povm, const RMatrix& rotation, int alpha) {
  const auto& p = povm.params;
  if (alpha < 0 || alpha >= p.N) throw RangeError("k_operator: alpha out of range");
  CMatrix k_op = CMatrix::Zero(static_cast<Eigen::Index>(p.d) * p.d,
                               static_cast<Eigen::Index>(p.d) * p.d);
  for (int k = 0; k < p.M; ++k)
    for (int l = 0; l < p.M; ++l)
      if (rotation(k, l) != 0.0)
        k_op += rotation(k, l) * kron(povm.element(alpha, l).conjugate(), povm.element(alpha, k));
  return (static_cast<double>(p.M) / p.d) * k_op;
}

SuperOp build_map(const MapSpec& spec) {
  const auto& p = spec.povm.params;
  if (spec.b <= 1e-12) throw DegenerateScale("build_map: b <= 1e-12 (x at the open boundary)");
  for (int alpha = 0; alpha < p.N; ++alpha) {
    std::string diag;
    if (!validate_rotation(spec.rotations.matrices[alpha], spec.rotations.modes[alpha], 1e-10,
                           &diag))
      throw InvalidRotation("build_map: rotation " + std::to_string(alpha + 1) + ": " + diag);
  }
  const Eigen::Index dd = static_cast<Eigen::Index>(p.d) * p.d;
  CMatrix choi = (spec.a / p.d) * CMatrix::Identity(dd, dd);
  for (int alpha = 0; alpha < p.N; ++alpha) {
    const CMatrix k_alpha = k_operator(spec.povm, spec.rotations.matrices[alpha], alpha);
    choi += (alpha >= spec.L) ? k_alpha : -k_alpha;
  }
  return SuperOp{choi / spec.b, p.d};
}

CMatrix apply_superop(const SuperOp& phi, const CMatrix& x) {
  if (x.rows() != phi.d || x.cols() != phi.d) throw ShapeError("apply_superop: input dimension");
  const CMatrix lifted = kron(x.transpose(), CMatrix::Identity(phi.d, phi.d)) * phi.choi;
  return partial_trace(lifted, phi.d, phi.d, Subsystem::A);
}

double trace_preservation_defect(const SuperOp& phi) {
  const CMatrix reduced = partial_trace(phi.choi, phi.d, phi.d, Subsystem::B);
  return (reduced - CMatrix::Identity(phi.d, phi.d)).cwiseAbs().maxCoeff();
}

PositivityReport positivity_probe(const SuperOp& phi, int samples, std::uint64_t seed) {
  if (samples < 1) throw RangeError("positivity_probe: samples must be >= 1");
  PositivityReport report;
  report.samples = samples;
  report.purity_bound = 1.0 / (phi.d - 1.0);
  report.min_output_eigenvalue = std::numeric_limits<double>::infinity();
  const Rng base(seed);
  for (int i = 0; i < samples; ++i) {
    Rng stream = base.fork(static_cast<std::uint64_t>(i));
    const CMatrix projector = stream.haar_projector(phi.d);
    const CMatrix out = apply_superop(phi, projector);
    report.max_purity = std::max(report.max_purity, (out * out).trace().real());
    report.min_output_eigenvalue =
        std::min(report.min_output_eigenvalue, min_eigenvalue(out));
  }
  report.purity_bound_exceeded = report.max_purity > report.purity_bound + 1e-9;
  report.negative_output_found = report.min_output_eigenvalue < -1e-8;
  return report;
}

}  // namespace witkit
