#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "maxsub/structure.hpp"
#include "maxsub/subgroup.hpp"
#include "maxsub/universe.hpp"

namespace maxsub {

using SubId = std::uint32_t;
using ClassIdx = std::uint32_t;

inline constexpr int kLatticeAlgorithmVersion = 1;
inline constexpr std::uint64_t kDefaultLatticeBound = 10000;

struct SubgroupClass {
  std::uint64_t order = 0;
  std::vector<SubId> members; // contiguous ids, sorted
  SubId core = 0;
  bool solvable = true;
  std::vector<SimpleTypeId> factors;

  std::size_t size() const { return members.size(); }
  SubId rep() const { return members.front(); }

  friend bool operator==(SubgroupClass const &, SubgroupClass const &) = default;
};

struct SubgroupRecord {
  ClassIdx cls = 0;
  std::vector<Elem> generators;
  Elem conjugator = 0; // rep^conjugator is this subgroup

  friend bool operator==(SubgroupRecord const &, SubgroupRecord const &) = default;
};

/// A maximal subgroup M containing a second maximal H, and whether H is
/// maximal in M.
struct Overgroup {
  SubId maximal = 0;
  bool covers = false;
  friend bool operator==(Overgroup const &, Overgroup const &) = default;
};

/**
 * All subgroups of a group up to conjugacy, every conjugate materialized,
 * with the Max and Max2 strata and their incidences.
 *
 * Ids are canonical: classes are ordered by decreasing order, then class
 * size, then the least member's element set; members within a class by
 * element set. Id 0 is the whole group, the last id the trivial group.
 */
struct LatticeSnapshot {
  std::string key;
  std::uint64_t group_order = 0;
  std::vector<SubgroupClass> classes;
  std::vector<SubgroupRecord> subgroups;

  /// contains[a] is a bitset over classes: some member of a contains some
  /// member of b (so every member of b lies in some member of a).
  std::vector<std::vector<std::uint64_t>> contains;

  std::vector<ClassIdx> maximal_classes;
  std::vector<SubId> max;                  // sorted
  std::vector<std::vector<SubId>> max_of;  // parallel to max: Max(M), sorted
  std::vector<SubId> max2;                 // sorted
  std::vector<std::vector<Overgroup>> max2_over; // parallel to max2, sorted by M
  SubId frattini = 0;

  SubId whole() const { return 0; }
  SubId trivial() const { return static_cast<SubId>(subgroups.size() - 1); }
  std::size_t subgroup_count() const { return subgroups.size(); }

  ClassIdx class_of(SubId h) const { return subgroups[h].cls; }
  SubgroupClass const &class_record(SubId h) const { return classes[subgroups[h].cls]; }
  std::uint64_t order(SubId h) const { return classes[subgroups[h].cls].order; }
  std::uint64_t index(SubId h) const { return group_order / order(h); }
  SubId core(SubId h) const { return classes[subgroups[h].cls].core; }
  bool is_normal(SubId h) const { return classes[subgroups[h].cls].size() == 1; }
  bool class_contains(ClassIdx a, ClassIdx b) const
  {
    return (contains[a][b >> 6] >> (b & 63)) & 1u;
  }

  bool is_maximal(SubId h) const;
  std::optional<std::size_t> max_position(SubId m) const;
  std::optional<std::size_t> max2_position(SubId h) const;

  /// Max(G, H) for H in Max2.
  std::vector<Overgroup> const &overgroups(SubId h) const;

  /// H in Max2 and maximal in every maximal subgroup containing it.
  bool is_strict_second_maximal(SubId h) const;
  std::vector<SubId> strict_second_maximal() const;

  /// Normal subgroups, largest first.
  std::vector<SubId> normal_subgroups() const;

  friend bool operator==(LatticeSnapshot const &, LatticeSnapshot const &) = default;
};

struct LatticeOptions {
  std::uint64_t bound = kDefaultLatticeBound;
  bool parallel = true;
};

struct LatticeBuild {
  LatticeSnapshot snapshot;
  std::vector<ElementSet> elements; // indexed by SubId
};

/// Enumerate every subgroup of the universe's group. Throws BoundExceeded
/// when the order exceeds options.bound.
LatticeBuild enumerate_subgroups(Universe const &u, LatticeOptions const &options = {});

/**
 * A group with its lattice snapshot. The element table and subgroup
 * element sets are built on demand, so an analysis restored from a cached
 * snapshot answers stratum queries without them.
 */
class GroupAnalysis {
 public:
  static std::shared_ptr<GroupAnalysis> compute(GroupPtr g, LatticeOptions const &options = {});
  static std::shared_ptr<GroupAnalysis> restore(GroupPtr g, LatticeSnapshot snapshot);

  GroupPtr const &group() const { return group_; }
  LatticeSnapshot const &lattice() const { return snapshot_; }

  Universe const &universe() const;
  ElementSet const &elements(SubId h) const;
  SubgroupView view(SubId h) const;
  SubgroupHandle handle(SubId h) const;

  /// Id of the subgroup with this element set; throws NotSubgroup.
  SubId id_of(ElementSet const &s) const;
  SubId id_of(SubgroupHandle const &h) const;

  /// a <= b as subgroups.
  bool is_subgroup(SubId a, SubId b) const;

  /// Max(H) for any subgroup H, sorted.
  std::vector<SubId> const &maximal_subgroups_of(SubId h) const;

  /// Max(G, H) for any subgroup H, sorted.
  std::vector<SubId> max_over(SubId h) const;

  /// Conjugate of subgroup h by element index x.
  SubId conjugate(SubId h, Elem x) const;

 private:
  GroupAnalysis(GroupPtr g, LatticeSnapshot snapshot);
  void ensure_elements() const;

  GroupPtr group_;
  LatticeSnapshot snapshot_;

  mutable std::recursive_mutex mutex_;
  mutable std::unique_ptr<Universe> universe_;
  mutable std::vector<ElementSet> elements_;
  mutable std::unordered_map<Fingerprint, SubId, FingerprintHash> by_fingerprint_;
  mutable std::unordered_map<SubId, std::vector<SubId>> maximal_cache_;
};

using AnalysisPtr = std::shared_ptr<GroupAnalysis>;

// Group-level conveniences; each builds a fresh analysis.
std::vector<SubgroupHandle> maximal_subgroups(GroupPtr const &g);
std::vector<SubgroupHandle> second_maximal_subgroups(GroupPtr const &g);
std::vector<SubgroupHandle> strictly_second_maximal(GroupPtr const &g);
std::vector<SubgroupHandle> max_over(GroupPtr const &g, SubgroupHandle const &h);
SubgroupHandle frattini_subgroup(GroupPtr const &g);
SubgroupHandle core(GroupPtr const &g, SubgroupHandle const &h);
std::uint64_t index(GroupPtr const &g, SubgroupHandle const &h);

} // namespace maxsub
