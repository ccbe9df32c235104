#ifndef WITKIT_PRESETS_HPP
#define WITKIT_PRESETS_HPP

#include <string>

#include "witkit/bases.hpp"
#include "witkit/maps.hpp"

namespace witkit {

/// Basis presets: "gellmann:<d>" (ungrouped; pair with a grouping preset)
/// or "mub3" (native N=4, M=3 grouping). Throws Error on unknown names.
GroupedBasis basis_from_preset(const std::string& basis, const std::string& grouping);

/// True when the named grouping applies to the named basis.
bool grouping_compatible(const std::string& basis, const std::string& grouping);

/// Rotation presets replicated across n groups: "identity:<M>", "cycle:<M>"
/// (l = k+1 orientation), "rcycle:<M>" (l = k-1).
RotationSet rotations_from_preset(const std::string& name, int n);

}  // namespace witkit

#endif
