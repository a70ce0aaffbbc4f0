#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "maxsub/group.hpp"

namespace maxsub {

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr share(Group g) { return std::make_shared<const Group>(std::move(g)); }

/// A subgroup of a fixed ambient group.
class SubgroupHandle {
 public:
  /// Throws NotSubgroup if a generator of `sub` is not in `ambient`.
  SubgroupHandle(GroupPtr ambient, Group sub);
  SubgroupHandle(GroupPtr ambient, std::vector<Permutation> generators);

  static SubgroupHandle whole(GroupPtr ambient);
  static SubgroupHandle trivial(GroupPtr ambient);

  Group const &group() const { return sub_; }
  Group const &ambient() const { return *ambient_; }
  GroupPtr const &ambient_ptr() const { return ambient_; }
  std::vector<Permutation> const &generators() const { return sub_.generators(); }

  std::uint64_t order() const { return sub_.order(); }
  std::uint64_t index() const { return ambient_->order() / sub_.order(); }
  bool contains(Permutation const &x) const { return sub_.contains(x); }
  bool is_trivial() const { return sub_.order() == 1; }

  /// Element-set inclusion within the same ambient group.
  bool is_subgroup_of(SubgroupHandle const &other) const;

  /// Element-set equality: equal order plus mutual generator membership.
  friend bool operator==(SubgroupHandle const &a, SubgroupHandle const &b);

 private:
  GroupPtr ambient_;
  Group sub_;
};

bool same_ambient(SubgroupHandle const &a, SubgroupHandle const &b);

/**
 * A group homomorphism given by the images of the domain generators.
 *
 * Well-definedness is checked exactly: the graph {(x, x^phi)} is built as a
 * permutation group on domain+codomain points and must meet the codomain
 * factor trivially.
 */
class Homomorphism {
 public:
  Homomorphism(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> generator_images);

  Group const &domain() const { return *domain_; }
  Group const &codomain() const { return *codomain_; }
  GroupPtr const &domain_ptr() const { return domain_; }
  GroupPtr const &codomain_ptr() const { return codomain_; }
  std::vector<Permutation> const &generator_images() const { return images_; }

  Permutation image(Permutation const &x) const;

  /// Some preimage of y; y must lie in the image.
  Permutation preimage(Permutation const &y) const;

  SubgroupHandle const &kernel() const { return kernel_; }
  SubgroupHandle image_group() const;
  SubgroupHandle image(SubgroupHandle const &h) const;

  /// Full preimage of a subgroup of the codomain (contains the kernel).
  SubgroupHandle preimage(SubgroupHandle const &k) const;

 private:
  Permutation pair(Permutation const &x, Permutation const &y, bool codomain_first) const;

  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<Permutation> images_;
  std::shared_ptr<const Group> graph_domain_first_;
  std::shared_ptr<const Group> graph_codomain_first_;
  SubgroupHandle kernel_;
};

struct CosetAction {
  Homomorphism action;
  SubgroupHandle kernel;
  std::vector<Permutation> coset_representatives;
};

/// Action of g on the right cosets of h; its kernel is the core of h in g.
CosetAction coset_action(GroupPtr const &g, SubgroupHandle const &h);

struct Quotient {
  GroupPtr group;
  Homomorphism map;
};

/// Faithful permutation image of g/n acting on the cosets of n.
Quotient quotient_group(GroupPtr const &g, SubgroupHandle const &n);

SubgroupHandle normal_closure(GroupPtr const &g, std::vector<Permutation> const &seed);
SubgroupHandle derived_subgroup(GroupPtr const &g);
SubgroupHandle conjugate(SubgroupHandle const &h, Permutation const &x);
SubgroupHandle intersect(SubgroupHandle const &h, SubgroupHandle const &k);
SubgroupHandle join(SubgroupHandle const &h, SubgroupHandle const &k);
bool is_normal(GroupPtr const &g, SubgroupHandle const &h);

/// Backtrack search over the smaller group's chain with prefix pruning
/// against the larger group's chain. Exposed for cross-checking.
SubgroupHandle intersect_backtrack(SubgroupHandle const &h, SubgroupHandle const &k);

/// Element filtering of the smaller group. Exposed for cross-checking.
SubgroupHandle intersect_filter(SubgroupHandle const &h, SubgroupHandle const &k);

/// Lexicographically least element of the right coset h*x, computed from a
/// chain of h whose base is 0, 1, ..., degree-1.
Permutation canonical_right_coset_rep(Group const &h_full_base, Permutation const &x);

} // namespace maxsub
