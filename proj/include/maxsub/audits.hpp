#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxsub/brute.hpp"
#include "maxsub/lattice.hpp"

namespace maxsub {

/// Nontrivial normal subgroups containing no other nontrivial normal subgroup.
std::vector<SubId> minimal_normal_subgroups(GroupAnalysis const &a);

struct CoreSolvability {
  bool criterion = true;     // every H has M in Max(G,H) with H_G < M_G
  bool solvable = true;      // derived series
  std::size_t checked = 0;   // second maximal subgroups examined
  std::optional<SubId> failing;
  bool agree() const { return criterion == solvable; }
};

/// The core criterion over Max2, or over the strictly second maximal
/// subgroups when strict is set.
CoreSolvability core_solvability(GroupAnalysis const &a, bool strict);

struct XhnCounterexample {
  SubId h = 0, x = 0, n = 0;
};

struct XhnScan {
  std::size_t triples = 0;
  std::vector<XhnCounterexample> counterexamples;
};

/// Every (H, X, N) with H second maximal, X in Max(G,H), N normal, N <= X,
/// N not <= H; checks X = HN through |H||N| / |H cap N| = |X|.
XhnScan x_hn_scan(GroupAnalysis const &a);

struct LIndexInstance {
  SubId l = 0, m = 0, n = 0; // m, n are class representatives
  std::uint64_t index_m = 0, index_n = 0;
  std::uint64_t l_order = 0;
  bool l_abelian = false;
  bool l_psl27_power = false; // every factor of L is simple of order 168
  bool consistent() const { return l_abelian || l_psl27_power; }
};

/// Minimal normal L with maximal M, N not containing L whose indices are
/// powers of two different primes. One instance per pair of maximal classes.
std::vector<LIndexInstance> l_index_instances(GroupAnalysis const &a);

struct OracleComparison {
  ClassProfile lattice;
  ClassProfile brute;
  bool agree() const { return lattice == brute; }
};

OracleComparison oracle_compare(GroupAnalysis const &a);

struct JordanHolderCheck {
  std::size_t series = 0;
  bool stable = true;           // every randomized series gives the same multiset
  bool matches_lattice = true;  // and it equals the factors recorded in the lattice
};

JordanHolderCheck jordan_holder_check(GroupAnalysis const &a, int seeds);

} // namespace maxsub
