#include "witkit/witness.hpp"

#include <algorithm>
#include <cmath>

#include "witkit/errors.hpp"
#include "witkit/povm.hpp"

namespace witkit {

namespace {

constexpr double kProperTol = 1e-9;

Witness finalize(CMatrix matrix, WitnessRecipe recipe) {
  Witness w;
  w.min_eigenvalue = min_eigenvalue(matrix);
  w.proper = w.min_eigenvalue < -kProperTol;
  recipe.scale = canonical_scale(matrix);
  w.matrix = std::move(matrix);
  w.recipe = std::move(recipe);
  return w;
}

double identity_coefficient(int d, int m) {
  const double sm = std::sqrt(static_cast<double>(m));
  return (d - 1.0) / (d * d) * m * m * (sm + 1.0) * (sm + 1.0);
}

}  // namespace

Witness choi_witness(const SuperOp& phi) {
  WitnessRecipe recipe;
  recipe.form = "choi";
  return finalize(phi.choi, std::move(recipe));
}

RMatrix q_from_rotation(const RMatrix& rotation, int m) {
  if (rotation.rows() != m || rotation.cols() != m)
    throw ShapeError("q_from_rotation: rotation must be M x M");
  const double sm = std::sqrt(static_cast<double>(m));
  RMatrix q(m - 1, m - 1);
  for (int k = 0; k < m - 1; ++k)
    for (int l = 0; l < m - 1; ++l)
      q(k, l) = m * (rotation(m - 1, m - 1) - 1.0) + m * (sm + 1) * (sm + 1) * rotation(k, l) -
                m * (sm + 1) * (rotation(m - 1, l) + rotation(k, m - 1));
  return q;
}

CMatrix j_operator(const GroupedBasis& basis, const RMatrix& rotation, int alpha) {
  if (alpha < 0 || alpha >= basis.N) throw RangeError("j_operator: alpha out of range");
  const int d = basis.d, m = basis.M;
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  const HFamily fam = build_h_family(basis);
  CMatrix j_h = CMatrix::Zero(dd, dd);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      if (rotation(k, l) != 0.0)
        j_h += rotation(k, l) *
               kron(fam.operators[alpha][l].conjugate(), fam.operators[alpha][k]);
  j_h *= static_cast<double>(m) / d;

  // independent route through the basis elements; both must agree
  const RMatrix q = q_from_rotation(rotation, m);
  CMatrix j_g = CMatrix::Zero(dd, dd);
  for (int k = 0; k < m - 1; ++k)
    for (int l = 0; l < m - 1; ++l)
      if (q(k, l) != 0.0)
        j_g += q(k, l) * kron(basis.element(alpha, l).conjugate(), basis.element(alpha, k));
  j_g *= static_cast<double>(m) / d;
  const double gap = (j_h - j_g).cwiseAbs().maxCoeff();
  if (gap > 1e-10 * std::max(1.0, j_h.cwiseAbs().maxCoeff()))
    throw Error("j_operator: H-form and basis-element form disagree by " + std::to_string(gap));
  return j_h;
}

Witness rescaled_witness(const GroupedBasis& basis, const RotationSet& rotations, int L) {
  if (L < 0 || L > basis.N) throw RangeError("rescaled_witness: L outside [0, N]");
  if (rotations.count() != basis.N)
    throw InvalidRotation("rescaled_witness: one rotation per group required");
  for (int alpha = 0; alpha < basis.N; ++alpha) {
    std::string diag;
    if (!validate_rotation(rotations.matrices[alpha], rotations.modes[alpha], 1e-10, &diag))
      throw InvalidRotation("rescaled_witness: rotation " + std::to_string(alpha + 1) + ": " +
                            diag);
  }
  const Eigen::Index dd = static_cast<Eigen::Index>(basis.d) * basis.d;
  CMatrix w = identity_coefficient(basis.d, basis.M) * CMatrix::Identity(dd, dd);
  for (int alpha = 0; alpha < basis.N; ++alpha) {
    const CMatrix j = j_operator(basis, rotations.matrices[alpha], alpha);
    w += (alpha >= L) ? j : -j;
  }
  WitnessRecipe recipe;
  recipe.form = "rescaled";
  recipe.L = L;
  return finalize(std::move(w), std::move(recipe));
}

Witness ccnr_witness(const CcnrSpec& spec) {
  const std::size_t count = spec.basis.size();
  if (count == 0) throw Error("ccnr_witness: empty basis");
  const int d = static_cast<int>(spec.basis.front().rows());
  if (count != static_cast<std::size_t>(d) * d)
    throw Error("ccnr_witness: basis must hold d^2 elements");
  if (spec.q.rows() != static_cast<Eigen::Index>(count) || spec.q.cols() != spec.q.rows())
    throw ShapeError("ccnr_witness: Q must be d^2 x d^2");
  const double top = spec.q.jacobiSvd().singularValues()(0);
  if (top > 1.0 + 1e-9)
    throw SingularValueViolation("ccnr_witness: ||Q||_2 = " + std::to_string(top) +
                                 " exceeds 1");
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  CMatrix w = CMatrix::Identity(dd, dd);
  for (std::size_t mu = 0; mu < count; ++mu)
    for (std::size_t nu = 0; nu < count; ++nu)
      if (spec.q(mu, nu) != 0.0)
        w -= spec.q(mu, nu) * kron(spec.basis[mu].transpose(), spec.basis[nu]);
  WitnessRecipe recipe;
  recipe.form = "ccnr";
  recipe.q_norm = top;
  return finalize(std::move(w), std::move(recipe));
}

RMatrix block_q(const GroupedBasis& basis, const RotationSet& rotations, int L) {
  const int d = basis.d, m = basis.M, width = m - 1;
  if (!basis.complete())
    throw GroupingError("block_q: basis must be complete to assemble a d^2 x d^2 Q");
  if (rotations.count() != basis.N) throw InvalidRotation("block_q: one rotation per group");
  const double sm = std::sqrt(static_cast<double>(m));
  const double unit = m * (sm + 1) * (sm + 1);
  RMatrix q = RMatrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  q(0, 0) = 1.0;
  for (int alpha = 0; alpha < basis.N; ++alpha) {
    const RMatrix blk = q_from_rotation(rotations.matrices[alpha], m).transpose() / unit;
    const int at = 1 + alpha * width;
    q.block(at, at, width, width) = (alpha < L) ? blk : -blk;
  }
  return q;
}

Witness m2_witness(const GroupedBasis& basis, const std::vector<int>& signs) {
  if (basis.M != 2) throw GroupingError("m2_witness: requires an M=2 grouping");
  if (basis.N > basis.d * basis.d - 1) throw GroupingError("m2_witness: N exceeds d^2-1");
  if (signs.size() != static_cast<std::size_t>(basis.N) + 1)
    throw GroupingError("m2_witness: need one sign per alpha = 0..N");
  for (int s : signs)
    if (s != 1 && s != -1) throw GroupingError("m2_witness: signs must be +-1");
  const Eigen::Index dd = static_cast<Eigen::Index>(basis.d) * basis.d;
  CMatrix w = CMatrix::Identity(dd, dd);
  w += static_cast<double>(signs[0]) * kron(basis.g0.transpose(), basis.g0);
  for (int alpha = 0; alpha < basis.N; ++alpha) {
    const CMatrix& g = basis.element(alpha, 0);
    w += static_cast<double>(signs[alpha + 1]) * kron(g.transpose(), g);
  }
  WitnessRecipe recipe;
  recipe.form = "m2";
  recipe.weights.assign(signs.begin(), signs.end());
  return finalize(std::move(w), std::move(recipe));
}

Witness weighted_witness(const GroupedBasis& basis, const RotationSet& rotations,
                         const std::vector<double>& weights) {
  if (weights.size() != static_cast<std::size_t>(basis.N))
    throw GroupingError("weighted_witness: one weight per group required");
  if (rotations.count() != basis.N)
    throw InvalidRotation("weighted_witness: one rotation per group required");
  const Eigen::Index dd = static_cast<Eigen::Index>(basis.d) * basis.d;
  CMatrix w = identity_coefficient(basis.d, basis.M) * CMatrix::Identity(dd, dd);
  double q_norm = 0.0;
  for (int alpha = 0; alpha < basis.N; ++alpha) {
    if (weights[alpha] == 0.0) continue;
    w -= weights[alpha] * j_operator(basis, rotations.matrices[alpha], alpha);
    q_norm = std::max(q_norm, std::abs(weights[alpha]));
  }
  WitnessRecipe recipe;
  recipe.form = "weighted";
  recipe.weights = weights;
  recipe.q_norm = q_norm;  // effective Q block norm: |w_alpha| * unit blocks
  return finalize(std::move(w), std::move(recipe));
}

double canonical_scale(const CMatrix& w) {
  const double top = w.diagonal().real().maxCoeff();
  return (std::abs(top) > 1e-300) ? 1.0 / top : 1.0;
}

Proportionality proportionality(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("proportionality: shape mismatch");
  Proportionality p;
  const double denom = frob_inner(b, b).real();
  if (denom <= 0) throw Error("proportionality: reference matrix vanishes");
  p.ratio = frob_inner(b, a).real() / denom;
  p.max_deviation = (a - p.ratio * b).cwiseAbs().maxCoeff();
  return p;
}

}  // namespace witkit
