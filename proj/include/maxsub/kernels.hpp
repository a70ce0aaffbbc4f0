#pragma once

#include <cstdint>
#include <vector>

#include "maxsub/universe.hpp"

namespace maxsub::kernels {

/// One (x, y) pair per simultaneous-conjugacy orbit: x runs over nonidentity
/// class representatives, y over orbit representatives of C(x) on G.
std::vector<std::pair<Elem, Elem>> seed_pairs(Universe const &u);

/// Distinct nontrivial perfect residuals of <x, y> over the given pairs, in
/// order of first occurrence. The serial and parallel variants return
/// identical results.
std::vector<SubgroupView> perfect_residuals_serial(Universe const &u,
                                                   std::vector<std::pair<Elem, Elem>> const &pairs);
std::vector<SubgroupView> perfect_residuals_parallel(Universe const &u,
                                                     std::vector<std::pair<Elem, Elem>> const &pairs);

/// contains[a] bitset over classes b: rep(b) lies in some member of a.
/// `class_members[a]` lists element sets of class a's members; the first is
/// the representative.
using ContainmentMatrix = std::vector<std::vector<std::uint64_t>>;
ContainmentMatrix containment_serial(std::vector<std::vector<ElementSet const *>> const &class_members);
ContainmentMatrix containment_parallel(std::vector<std::vector<ElementSet const *>> const &class_members);

} // namespace maxsub::kernels
