#pragma once

#include <cstdint>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxsub/subgroup.hpp"
#include "maxsub/universe.hpp"

namespace maxsub {

/// Isomorphism type of a simple group, as far as this library identifies it:
/// cyclic of prime order, or nonabelian identified by order (< 20160).
struct SimpleTypeId {
  bool abelian = true;
  std::uint64_t order = 1;
  std::string label;

  static SimpleTypeId cyclic(std::uint64_t p);
  static SimpleTypeId nonabelian(std::uint64_t order);

  friend bool operator==(SimpleTypeId const &a, SimpleTypeId const &b)
  {
    return a.abelian == b.abelian && a.order == b.order;
  }
  friend auto operator<=>(SimpleTypeId const &a, SimpleTypeId const &b)
  {
    if (a.abelian != b.abelian)
      return a.abelian ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.order <=> b.order;
  }
};

/// Orders at or above this bound do not determine a nonabelian simple group.
inline constexpr std::uint64_t kSimpleIdentificationCeiling = 20160;

/// Known nonabelian simple group of this order, if any below the ceiling.
/// Throws UnidentifiableFactor at or above the ceiling.
std::optional<SimpleTypeId> simple_group_of_order(std::uint64_t order);

std::string to_string(SimpleTypeId const &t);

struct ChiefFactor {
  std::uint64_t order = 1;
  bool abelian = true;
  SimpleTypeId type;
  unsigned multiplicity = 1; // factor is type^multiplicity
};

/// Chief series of a subgroup G of a universe, from G down to 1.
struct ChiefSeriesView {
  std::vector<SubgroupView> terms;
  std::vector<ChiefFactor> factors;
};

// Element-table versions. `g` is any subgroup of the universe and plays the
// role of the ambient group.

std::vector<SubgroupView> derived_series(Universe const &u, SubgroupView const &g);
bool is_solvable(Universe const &u, SubgroupView const &g);

/// All normal subgroups of g, largest first.
std::vector<SubgroupView> normal_subgroups(Universe const &u, SubgroupView const &g);
std::vector<SubgroupView> minimal_normal_subgroups(Universe const &u, SubgroupView const &g);

/// seed 0 picks deterministically; other seeds pick a random maximal chain.
ChiefSeriesView chief_series(Universe const &u, SubgroupView const &g, std::uint64_t seed = 0);

/// Sorted multiset of composition factor types.
std::vector<SimpleTypeId> composition_factors(Universe const &u, SubgroupView const &g,
                                              std::uint64_t seed = 0);

bool is_p_solvable(Universe const &u, SubgroupView const &g, std::uint64_t p);

/// p-solvability read off a composition factor multiset.
bool factors_p_solvable(std::vector<SimpleTypeId> const &factors, std::uint64_t p);
bool factors_solvable(std::vector<SimpleTypeId> const &factors);

/// Multiset difference a - b of sorted factor lists (factors of G/N from
/// those of G and N).
std::vector<SimpleTypeId> factor_difference(std::vector<SimpleTypeId> const &a,
                                            std::vector<SimpleTypeId> const &b);

/// Least normal subgroup N of g whose quotient satisfies `in_class`
/// (evaluated on N). Throws NonUniqueMinimal when the satisfying normal
/// subgroups have no least element.
SubgroupView residual(Universe const &u, SubgroupView const &g,
                      std::function<bool(SubgroupView const &)> const &in_class);

// Group versions.

struct ChiefSeries {
  GroupPtr ambient;
  std::vector<SubgroupHandle> terms;
  std::vector<ChiefFactor> factors;
};

/// Derived series by stabilizer chains; no order bound.
bool is_solvable(Group const &g);
bool is_p_solvable(GroupPtr const &g, std::uint64_t p);
std::vector<SubgroupHandle> minimal_normal_subgroups(GroupPtr const &g);
ChiefSeries chief_series(GroupPtr const &g, std::uint64_t seed = 0);
std::vector<SimpleTypeId> composition_factors(GroupPtr const &g, std::uint64_t seed = 0);

/// Residual with the class predicate evaluated on actual quotient groups.
SubgroupHandle residual(GroupPtr const &g, std::function<bool(Group const &quotient)> const &in_class);

} // namespace maxsub
