#include "witkit/bases.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "witkit/errors.hpp"

namespace witkit {

namespace {
const Complex kI(0.0, 1.0);
}

std::vector<CMatrix> GroupedBasis::flat() const {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(N) * (M - 1));
  for (const auto& grp : groups)
    for (const auto& g : grp) out.push_back(g);
  return out;
}

GroupedBasis GroupedBasis::take_first(int n) const {
  if (n < 1 || n > N) throw GroupingError("take_first: group count out of range");
  GroupedBasis sub = *this;
  sub.N = n;
  sub.groups.assign(groups.begin(), groups.begin() + n);
  return sub;
}

GroupedBasis::Validation GroupedBasis::validate() const {
  Validation v;
  std::vector<CMatrix> all;
  all.push_back(g0);
  for (const auto& g : flat()) all.push_back(g);
  for (std::size_t i = 0; i < all.size(); ++i) {
    v.herm_defect = std::max(v.herm_defect, hermiticity_defect(all[i]));
    if (i > 0) v.trace_defect = std::max(v.trace_defect, std::abs(all[i].trace()));
    for (std::size_t j = 0; j < all.size(); ++j) {
      const Complex overlap = frob_inner(all[i], all[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      v.gram_defect = std::max(v.gram_defect, std::abs(overlap - target));
    }
  }
  return v;
}

std::vector<CMatrix> gell_mann_basis(int d) {
  if (d < 2) throw Error("gell_mann_basis: d must be at least 2");
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(d) * d - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix s = CMatrix::Zero(d, d);
      s(j, k) = s(k, j) = inv_sqrt2;
      mats.push_back(s);
      CMatrix a = CMatrix::Zero(d, d);
      a(j, k) = -kI * inv_sqrt2;
      a(k, j) = kI * inv_sqrt2;
      mats.push_back(a);
    }
  for (int l = 1; l < d; ++l) {
    CMatrix h = CMatrix::Zero(d, d);
    for (int j = 0; j < l; ++j) h(j, j) = 1.0;
    h(l, l) = -static_cast<double>(l);
    mats.push_back(h / std::sqrt(static_cast<double>(l) * (l + 1)));
  }
  return mats;
}

GroupedBasis group_basis(const std::vector<CMatrix>& elements,
                         const std::vector<std::pair<int, int>>& labels) {
  if (elements.empty() || elements.size() != labels.size())
    throw GroupingError("group_basis: element/label count mismatch");
  int n = 0, width = 0;
  std::set<std::pair<int, int>> seen;
  for (const auto& [alpha, k] : labels) {
    if (alpha < 1 || k < 1) throw GroupingError("group_basis: labels are 1-based");
    if (!seen.insert({alpha, k}).second) throw GroupingError("group_basis: duplicate label");
    n = std::max(n, alpha);
    width = std::max(width, k);
  }
  if (static_cast<std::size_t>(n) * width != labels.size())
    throw GroupingError("group_basis: labels do not tile an N x (M-1) grid");

  const int d = static_cast<int>(elements.front().rows());
  GroupedBasis basis;
  basis.d = d;
  basis.N = n;
  basis.M = width + 1;
  basis.g0 = CMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d));
  basis.groups.assign(n, std::vector<CMatrix>(width));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].rows() != d || elements[i].cols() != d)
      throw GroupingError("group_basis: inconsistent element dimension");
    basis.groups[labels[i].first - 1][labels[i].second - 1] = elements[i];
  }
  const auto v = basis.validate();
  if (!v.ok()) throw GroupingError("group_basis: elements are not an orthonormal traceless set");
  return basis;
}

GroupedBasis chunk_grouping(const std::vector<CMatrix>& elements, int m) {
  if (m < 2) throw GroupingError("chunk_grouping: M must be at least 2");
  const int width = m - 1;
  if (elements.size() % static_cast<std::size_t>(width) != 0)
    throw GroupingError("chunk_grouping: element count not divisible by M-1");
  std::vector<std::pair<int, int>> labels;
  labels.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    labels.emplace_back(static_cast<int>(i) / width + 1, static_cast<int>(i) % width + 1);
  return group_basis(elements, labels);
}

GroupedBasis mub_basis_d3() {
  const double s3 = std::sqrt(3.0);
  const Complex u = (1.0 - kI) * (1.0 + s3);
  const Complex v = 2.0 + s3 + kI;
  const double cd = 1.0 / (s3 * (1.0 + s3));        // diagonal pair, as published
  const double co = 1.0 / (2.0 * s3 * (1.0 + s3));  // off-diagonal six, unit-norm prefactor

  auto m3 = [](Complex a01, Complex a02, Complex a12) {
    CMatrix g = CMatrix::Zero(3, 3);
    g(0, 1) = a01; g(1, 0) = std::conj(a01);
    g(0, 2) = a02; g(2, 0) = std::conj(a02);
    g(1, 2) = a12; g(2, 1) = std::conj(a12);
    return g;
  };

  CMatrix g11 = CMatrix::Zero(3, 3);
  g11.diagonal() << cd * (-2.0 - s3), cd, cd * (1.0 + s3);
  CMatrix g12 = CMatrix::Zero(3, 3);
  g12.diagonal() << cd, cd * (-2.0 - s3), cd * (1.0 + s3);

  const Complex vc = std::conj(v), uc = std::conj(u);
  std::vector<CMatrix> elems = {
      g11,
      g12,
      co * m3(-vc, -v, -vc),
      co * m3(kI * vc, -kI * v, kI * vc),
      co * m3(uc, kI * vc, -vc),
      co * m3(u, -vc, kI * vc),
      co * m3(u, -kI * v, -v),
      co * m3(uc, -v, -kI * v),
  };
  return chunk_grouping(elems, 3);
}

std::string mub_basis_prefactor_note() {
  return "published prefactor 1/(sqrt(3)(1+sqrt(3))) gives Frobenius norm 2 for "
         "G_{2,2}, G_{3,2}, G_{4,2}; the orthonormal set uses 1/(2 sqrt(3)(1+sqrt(3)))";
}

MubFamily mub_projectors_d3() {
  MubFamily f;
  const double s3 = std::sqrt(3.0);
  f.omega = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
  f.u = (1.0 - kI) * (1.0 + s3);
  f.v = 2.0 + s3 + kI;
  const Complex w = f.omega, w2 = w * w;

  auto from_rows = [](std::initializer_list<Complex> vals) {
    CMatrix m(3, 3);
    int i = 0;
    for (const Complex& c : vals) {
      m(i / 3, i % 3) = c;
      ++i;
    }
    return m;
  };

  std::vector<CMatrix> computational = {
      from_rows({1, 0, 0, 0, 0, 0, 0, 0, 0}),
      from_rows({0, 0, 0, 0, 1, 0, 0, 0, 0}),
      from_rows({0, 0, 0, 0, 0, 0, 0, 0, 1}),
  };
  std::vector<CMatrix> fourier = {
      from_rows({1, 1, 1, 1, 1, 1, 1, 1, 1}) / 3.0,
      from_rows({1, w2, w, w, 1, w2, w2, w, 1}) / 3.0,
      from_rows({1, w, w2, w2, 1, w, w, w2, 1}) / 3.0,
  };
  std::vector<CMatrix> third = {
      from_rows({1, w2, w2, w, 1, 1, w, 1, 1}) / 3.0,
      from_rows({1, w, 1, w2, 1, w2, 1, w, 1}) / 3.0,
      from_rows({1, 1, w, 1, 1, w, w2, w2, 1}) / 3.0,
  };
  std::vector<CMatrix> fourth = {
      from_rows({1, w, w, w2, 1, 1, w2, 1, 1}) / 3.0,
      from_rows({1, w2, 1, w, 1, w, 1, w2, 1}) / 3.0,
      from_rows({1, 1, w2, 1, 1, w2, w, w, 1}) / 3.0,
  };
  f.projectors = {computational, fourier, third, fourth};
  return f;
}

}  // namespace witkit
