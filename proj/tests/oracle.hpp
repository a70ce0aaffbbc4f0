#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "maxsub/permutation.hpp"

namespace oracle {

using maxsub::Permutation;

inline std::set<Permutation> closure(std::vector<Permutation> const &gens, std::size_t degree)
{
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const &x : frontier)
      for (auto const &g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second)
          next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

} // namespace oracle

namespace oracle {

using Subgroup = std::set<Permutation>;

/// Every subgroup, by closing {1} under H -> <H, x>.
inline std::set<Subgroup> all_subgroups(std::vector<Permutation> const &gens, std::size_t degree)
{
  auto elems = closure(gens, degree);
  std::set<Subgroup> found{{Permutation(degree)}};
  std::vector<Subgroup> frontier{{Permutation(degree)}};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (auto const &h : frontier)
      for (auto const &x : elems) {
        if (h.count(x))
          continue;
        std::vector<Permutation> g(h.begin(), h.end());
        g.push_back(x);
        auto k = closure(g, degree);
        if (found.insert(k).second)
          next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return found;
}

/// Sorted (order, class size) pairs, one per conjugacy class of subgroups.
inline std::vector<std::pair<std::size_t, std::size_t>>
class_profile(std::set<Subgroup> const &subs, std::vector<Permutation> const &gens, std::size_t degree)
{
  auto elems = closure(gens, degree);
  std::set<Subgroup> done;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto const &h : subs) {
    if (done.count(h))
      continue;
    std::set<Subgroup> cls;
    for (auto const &x : elems) {
      Subgroup c;
      for (auto const &e : h)
        c.insert(x.inverse() * e * x);
      cls.insert(std::move(c));
    }
    done.insert(cls.begin(), cls.end());
    out.emplace_back(h.size(), cls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace oracle
