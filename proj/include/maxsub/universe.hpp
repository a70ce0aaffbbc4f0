#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "maxsub/subgroup.hpp"

namespace maxsub {

using Elem = std::uint32_t;

/// Fixed-size bitset over the elements of a Universe.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t universe_size() const { return size_; }
  bool test(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const;
  bool subset_of(ElementSet const &other) const;
  ElementSet operator&(ElementSet const &other) const;
  ElementSet &operator&=(ElementSet const &other);
  ElementSet &operator|=(ElementSet const &other);

  std::vector<Elem> members() const;

  template <typename F>
  void for_each(F &&f) const
  {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        Elem e = static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        f(e);
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<std::uint64_t> &mutable_words() { return words_; }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// 128-bit content hash of a set; equal sets have equal fingerprints.
struct Fingerprint {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend bool operator==(Fingerprint const &, Fingerprint const &) = default;
};

Fingerprint fingerprint(ElementSet const &s);

struct FingerprintHash {
  std::size_t operator()(Fingerprint const &f) const noexcept
  {
    return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9e3779b97f4a7c15ULL));
  }
};

/// A subgroup inside a Universe: its element set and a generating list.
struct SubgroupView {
  ElementSet elements;
  std::vector<Elem> generators;

  std::uint64_t order() const { return elements.count(); }
};

/**
 * Explicit element table of a group of moderate order.
 *
 * Elements are indexed by the mixed-radix transversal coordinates of the
 * group's stabilizer chain, so indexing is reproducible from the generators.
 * The full multiplication table is stored (16-bit entries), which bounds the
 * order by kMaxOrder.
 */
class Universe {
 public:
  static constexpr std::uint64_t kMaxOrder = 10000;

  explicit Universe(GroupPtr group);

  GroupPtr const &group_ptr() const { return group_; }
  Group const &group() const { return *group_; }
  std::uint32_t size() const { return n_; }

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g^-1 a g
  Elem conj(Elem a, Elem g) const { return mul(mul(inverse_[g], a), g); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  std::uint32_t element_order(Elem a) const { return orders_[a]; }
  Elem power(Elem a, std::uint64_t k) const;

  Permutation const &element(Elem e) const { return elements_[e]; }
  Elem index_of(Permutation const &x) const;

  /// Generators of the whole group as element indices.
  std::vector<Elem> const &generators() const { return generator_indices_; }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet full_set() const;

  ElementSet closure(std::span<const Elem> gens) const;

  /// <H, x> for a subgroup H given by its elements and generators.
  SubgroupView extend(SubgroupView const &h, Elem x) const;

  SubgroupView whole() const;
  SubgroupView trivial() const;
  SubgroupView make_view(std::vector<Elem> gens) const;

  ElementSet conjugate(ElementSet const &s, Elem g) const;
  SubgroupView conjugate(SubgroupView const &s, Elem g) const;

  /// Conjugacy classes of `within` (a subgroup) acting on its own elements.
  std::vector<std::vector<Elem>> conjugacy_classes(SubgroupView const &within) const;

  /// Smallest normal subgroup of `within` containing the seeds.
  SubgroupView normal_closure(SubgroupView const &within, std::span<const Elem> seeds) const;

  /// Join of two subgroups.
  SubgroupView join(SubgroupView const &a, SubgroupView const &b) const;

  SubgroupView derived_subgroup(SubgroupView const &s) const;

  /// Centralizer of x inside `within`.
  SubgroupView centralizer(SubgroupView const &within, Elem x) const;

  /// Normalizer of s inside `within`.
  ElementSet normalizer(SubgroupView const &within, SubgroupView const &s) const;

  /// Subgroup handle of the same subgroup over the ambient group.
  SubgroupHandle handle(SubgroupView const &s) const;
  SubgroupView view(SubgroupHandle const &h) const;

 private:
  GroupPtr group_;
  std::uint32_t n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generator_indices_;
};

/// Shrink a generating list greedily (keeps only elements that enlarge the
/// group generated so far).
std::vector<Elem> reduce_generators(Universe const &u, std::span<const Elem> gens);

} // namespace maxsub
