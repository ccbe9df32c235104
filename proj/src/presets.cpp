#include "witkit/presets.hpp"

#include <charconv>

#include "witkit/errors.hpp"

namespace witkit {

namespace {

int parse_suffix(const std::string& name, const std::string& prefix) {
  const std::string digits = name.substr(prefix.size());
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 2)
    throw Error("bad preset suffix in '" + name + "'");
  return value;
}

std::vector<std::pair<int, int>> ex3_labels() {
  // pairs (g01,g10), (g02,g20), (g12,g21), (g11,g22)
  return {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}};
}

std::vector<std::pair<int, int>> ex5_labels() {
  // group 1: g01,g02,g10,g20; group 2: g12,g21,g11,g22
  return {{1, 1}, {1, 3}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}};
}

std::vector<std::pair<int, int>> ex4_labels() {
  // M=2 singletons ordered G_{1,2}, G_{2,1}, G_{2,2}, G_{3,1}, G_{3,2},
  // G_{4,1}, G_{4,2}, G_{1,1}; dropping the last group leaves the seven used
  // by the reference construction.
  return {{8, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}};
}

}  // namespace

bool grouping_compatible(const std::string& basis, const std::string& grouping) {
  if (grouping == "ex3" || grouping == "ex5") return basis == "gellmann:3";
  if (grouping == "ex4" || grouping == "native" || grouping.empty()) return basis == "mub3";
  return grouping.rfind("chunk:", 0) == 0;
}

GroupedBasis basis_from_preset(const std::string& basis, const std::string& grouping) {
  if (!grouping_compatible(basis, grouping))
    throw Error("grouping '" + grouping + "' does not apply to basis '" + basis + "'");

  if (basis == "mub3") {
    const GroupedBasis native = mub_basis_d3();
    if (grouping == "native" || grouping.empty()) return native;
    if (grouping == "ex4") return group_basis(native.flat(), ex4_labels());
    return chunk_grouping(native.flat(), parse_suffix(grouping, "chunk:"));
  }
  if (basis.rfind("gellmann:", 0) == 0) {
    const int d = parse_suffix(basis, "gellmann:");
    const std::vector<CMatrix> elements = gell_mann_basis(d);
    if (grouping == "ex3") return group_basis(elements, ex3_labels());
    if (grouping == "ex5") return group_basis(elements, ex5_labels());
    return chunk_grouping(elements, parse_suffix(grouping, "chunk:"));
  }
  throw Error("unknown basis preset '" + basis + "'");
}

RotationSet rotations_from_preset(const std::string& name, int n) {
  if (name.rfind("identity:", 0) == 0)
    return RotationSet::identity(n, parse_suffix(name, "identity:"));
  if (name.rfind("cycle:", 0) == 0) return RotationSet::cycle(n, parse_suffix(name, "cycle:"));
  if (name.rfind("rcycle:", 0) == 0)
    return RotationSet::reverse_cycle(n, parse_suffix(name, "rcycle:"));
  throw Error("unknown rotation preset '" + name + "'");
}

}  // namespace witkit
