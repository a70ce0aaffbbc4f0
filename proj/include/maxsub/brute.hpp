#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxsub/group.hpp"
#include "maxsub/lattice.hpp"

namespace maxsub {

/// (subgroup order, conjugacy class size), sorted.
using ClassProfile = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/**
 * Every subgroup by closing {1} under H -> <H, x> over an explicit
 * multiplication table, then grouped into conjugacy classes. Independent of
 * the stabilizer chain and lattice code; meant for small groups.
 */
ClassProfile brute_force_profile(Group const &g);

ClassProfile lattice_profile(LatticeSnapshot const &s);

} // namespace maxsub
