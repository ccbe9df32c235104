#include "witkit/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "witkit/errors.hpp"

namespace witkit {

double x_from_t(int d, int m, double t) {
  const double sm = std::sqrt(static_cast<double>(m));
  return static_cast<double>(d) / (m * m) + t * t * (m - 1) * (sm + 1) * (sm + 1);
}

double t_from_x(int d, int m, double x) {
  const double low = static_cast<double>(d) / (m * m);
  if (x < low - 1e-14) throw RangeError("t_from_x: x below d/M^2");
  const double sm = std::sqrt(static_cast<double>(m));
  return std::sqrt(std::max(0.0, x - low) / ((m - 1) * (sm + 1) * (sm + 1)));
}

XRange x_range(int d, int m) {
  if (m < 2) throw RangeError("x_range: M must be at least 2");
  const double dd = d;
  return {dd / (m * m), std::min(dd * dd / (m * m), dd / m)};
}

std::vector<IcClass> ic_classes(int d) {
  if (d < 2) throw RangeError("ic_classes: d must be at least 2");
  std::vector<IcClass> out;
  const int total = d * d - 1;
  for (int m = 2; m <= total + 1; ++m) {
    if (total % (m - 1) != 0) continue;
    IcClass c{total / (m - 1), m, IcClass::Tag::Other, ""};
    if (m == d * d) {
      c.tag = IcClass::Tag::GeneralSic;
      c.name = "general SIC";
    } else if (m == d) {
      c.tag = IcClass::Tag::Mum;
      c.name = "MUM";
    } else if (m == 2) {
      c.tag = IcClass::Tag::TwoOutcome;
      c.name = "two-outcome";
    } else if (m == d + 2) {
      c.tag = IcClass::Tag::DPlusTwo;
      c.name = "M=d+2";
    }
    out.push_back(std::move(c));
  }
  return out;
}

HFamily build_h_family(const GroupedBasis& basis) {
  const int m = basis.M;
  const double sm = std::sqrt(static_cast<double>(m));
  HFamily fam;
  fam.operators.resize(basis.N);
  fam.group_sums.resize(basis.N);
  for (int alpha = 0; alpha < basis.N; ++alpha) {
    CMatrix sum = CMatrix::Zero(basis.d, basis.d);
    for (const auto& g : basis.groups[alpha]) sum += g;
    fam.group_sums[alpha] = sum;
    auto& ops = fam.operators[alpha];
    ops.reserve(m);
    for (int k = 0; k < m - 1; ++k) ops.push_back(sum - sm * (sm + 1) * basis.groups[alpha][k]);
    ops.push_back((sm + 1) * sum);
  }
  return fam;
}

SymmetricPovm build_povm(const GroupedBasis& basis, double t, double psd_tol) {
  if (t < 0) throw RangeError("build_povm: t is fixed non-negative");
  const HFamily fam = build_h_family(basis);
  SymmetricPovm povm;
  povm.params = {basis.d, basis.N, basis.M, x_from_t(basis.d, basis.M, t), t};
  povm.source = basis;
  povm.degenerate = (t == 0.0);
  const CMatrix uniform = CMatrix::Identity(basis.d, basis.d) / basis.M;
  povm.elements.resize(basis.N);
  for (int alpha = 0; alpha < basis.N; ++alpha) {
    povm.elements[alpha].reserve(basis.M);
    for (int k = 0; k < basis.M; ++k) {
      CMatrix e = uniform + t * fam.operators[alpha][k];
      const double lo = min_eigenvalue(e);
      if (lo < -psd_tol) throw PositivityViolation(alpha + 1, k + 1, lo);
      povm.elements[alpha].push_back(std::move(e));
    }
  }
  return povm;
}

SymmetricPovm build_povm_x(const GroupedBasis& basis, double x, double psd_tol) {
  const auto range = x_range(basis.d, basis.M);
  if (x < range.low - 1e-12 || x > range.high + 1e-12)
    throw RangeError("build_povm_x: x outside the admissible range");
  return build_povm(basis, t_from_x(basis.d, basis.M, x), psd_tol);
}

double optimal_x(const GroupedBasis& basis) {
  const int d = basis.d, m = basis.M;
  const auto range = x_range(d, m);
  const double t_upper = t_from_x(d, m, range.high);
  const HFamily fam = build_h_family(basis);
  const CMatrix uniform = CMatrix::Identity(d, d) / m;

  auto all_psd = [&](double t) {
    for (const auto& ops : fam.operators)
      for (const auto& h : ops)
        if (min_eigenvalue(uniform + t * h) < -1e-9) return false;
    return true;
  };

  if (all_psd(t_upper)) return range.high;
  double lo = 0.0, hi = t_upper;
  for (int iter = 0; iter < 60 && hi - lo > 1e-10; ++iter) {
    const double mid = (lo + hi) / 2.0;
    (all_psd(mid) ? lo : hi) = mid;
  }
  return x_from_t(d, m, lo);
}

bool PovmValidation::ok(double sym_tol, double res_tol, double psd_tol) const {
  return trace_defect <= sym_tol && purity_defect <= sym_tol && within_defect <= sym_tol &&
         across_defect <= sym_tol && resolution_defect <= res_tol && min_eigenvalue >= -psd_tol;
}

PovmValidation validate_povm(const SymmetricPovm& povm) {
  const auto& [d, n, m, x, t] = povm.params;
  PovmValidation v;
  v.degenerate = povm.degenerate;
  v.min_eigenvalue = std::numeric_limits<double>::infinity();
  const double within = (d - m * x) / (m * (m - 1.0));
  const double across = static_cast<double>(d) / (m * m);
  for (int a = 0; a < n; ++a) {
    CMatrix sum = CMatrix::Zero(d, d);
    for (int k = 0; k < m; ++k) {
      const CMatrix& e = povm.element(a, k);
      sum += e;
      v.trace_defect = std::max(v.trace_defect, std::abs(e.trace() - Complex(d / double(m))));
      v.min_eigenvalue = std::min(v.min_eigenvalue, min_eigenvalue(e));
      for (int l = 0; l < m; ++l) {
        const double overlap = frob_inner(povm.element(a, k), povm.element(a, l)).real();
        if (l == k)
          v.purity_defect = std::max(v.purity_defect, std::abs(overlap - x));
        else
          v.within_defect = std::max(v.within_defect, std::abs(overlap - within));
      }
      for (int b = a + 1; b < n; ++b)
        for (int l = 0; l < m; ++l) {
          const double overlap = frob_inner(povm.element(a, k), povm.element(b, l)).real();
          v.across_defect = std::max(v.across_defect, std::abs(overlap - across));
        }
    }
    v.resolution_defect = std::max(
        v.resolution_defect, (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
  }
  return v;
}

ProbabilityTable probabilities(const SymmetricPovm& povm, const CMatrix& rho) {
  const int d = povm.params.d;
  if (rho.rows() != d || rho.cols() != d) throw ShapeError("probabilities: state dimension");
  if (!is_hermitian(rho, 1e-10) || std::abs(rho.trace() - Complex(1.0)) > 1e-9 ||
      min_eigenvalue(rho) < -1e-9)
    throw StateError("probabilities: input is not a density matrix");
  ProbabilityTable table;
  table.p.resize(povm.params.N, povm.params.M);
  for (int a = 0; a < povm.params.N; ++a)
    for (int k = 0; k < povm.params.M; ++k)
      table.p(a, k) = frob_inner(povm.element(a, k), rho).real();
  table.purity = (rho * rho).trace().real();
  return table;
}

CoincidenceBound coincidence_bound_check(const SymmetricPovm& povm, const CMatrix& rho, int L) {
  const auto& [d, n, m, x, t] = povm.params;
  if (L < 1 || L > n) throw RangeError("coincidence_bound_check: L outside [1, N]");
  const ProbabilityTable table = probabilities(povm, rho);
  CoincidenceBound bound;
  for (int a = 0; a < L; ++a)
    for (int k = 0; k < m; ++k) bound.lhs += table.p(a, k) * table.p(a, k);
  bound.rhs = static_cast<double>(L) / m +
              (m * m * x - d) * (d * table.purity - 1.0) / (d * m * (m - 1.0));
  bound.holds = bound.lhs <= bound.rhs + 1e-10;
  if (L == n) bound.equality_gap = std::abs(bound.lhs - bound.rhs);
  return bound;
}

}  // namespace witkit
