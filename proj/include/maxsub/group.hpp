#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "maxsub/permutation.hpp"

namespace maxsub {

/// One level of a stabilizer chain. `transversal[k]` maps `base` to `orbit[k]`
/// and lies in the pointwise stabilizer of all earlier base points.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position; // point -> index into orbit, -1 if absent
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;
};

/**
 * A permutation group given by generators, certified by a stabilizer chain.
 *
 * The chain is built deterministically by Schreier-Sims: base points are
 * taken from an optional prescribed prefix and otherwise chosen as the
 * lowest point moved by the element that requires a new level. A seeded
 * random-sifting pass (64 rounds) follows construction.
 */
class Group {
 public:
  explicit Group(std::vector<Permutation> generators, std::vector<Point> base_prefix = {});

  static Group trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<ChainLevel> const &chain() const { return chain_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  Permutation identity() const { return Permutation(degree_); }

  struct SiftResult {
    Permutation residue;
    std::size_t level; // chain().size() when every level was passed
  };
  SiftResult sift(Permutation const &x) const;

  bool contains(Permutation const &x) const;

  /// Element with the given mixed-radix transversal coordinates; level 0 is
  /// the most significant digit. Index 0 is the identity.
  Permutation element_at(std::uint64_t index) const;

  /// Inverse of element_at; the argument must be a member.
  std::uint64_t index_of(Permutation const &x) const;

  Permutation random_element(std::mt19937_64 &rng) const;

  /// Same group, chain rebuilt with the given base prefix.
  Group with_base_prefix(std::vector<Point> const &prefix) const;

  /// Content key: degree plus sorted generator image lists.
  std::string key() const;

 private:
  void schreier_sims(std::vector<Point> const &base_prefix);
  void verify_randomly();
  void rebuild_level(ChainLevel &level) const;
  SiftResult strip(Permutation x, std::size_t from_level) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
  std::uint64_t order_ = 1;
};

bool same_group(Group const &a, Group const &b);

} // namespace maxsub
