#pragma once

#include <string>
#include <string_view>

#include "maxsub/subgroup.hpp"

namespace maxsub {

/**
 * Named constructors:
 *   sym(n), alt(n), cyclic(n)     n <= 12
 *   dihedral(m)                   order m = 2n
 *   psl2(q)                       prime power q <= 32, on the q+1 points of the projective line
 *   mathieu11
 *   product(a, b)                 direct product acting on disjoint points
 * Throws UnknownName for anything else.
 */
GroupPtr named_group(std::string_view spec);

/// Spec with whitespace removed and names lower-cased, e.g. "product(alt(5),cyclic(2))".
std::string canonical_spec(std::string_view spec);

GroupPtr symmetric_group(unsigned n);
GroupPtr alternating_group(unsigned n);
GroupPtr cyclic_group(unsigned n);
GroupPtr dihedral_group(unsigned order);
GroupPtr psl2(unsigned q);
GroupPtr mathieu11();
GroupPtr direct_product(Group const &a, Group const &b);

/// Arithmetic in GF(q) on the integers 0..q-1 (coefficient vectors in base p).
class GaloisField {
 public:
  explicit GaloisField(unsigned q);

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;
  /// A generator of the multiplicative group.
  unsigned primitive() const { return exp_[1 % (q_ - 1)]; }
  unsigned power_of_primitive(unsigned k) const { return exp_[k % (q_ - 1)]; }

 private:
  unsigned q_, p_, k_;
  std::vector<unsigned> exp_, log_;
};

} // namespace maxsub
