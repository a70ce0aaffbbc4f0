#include "maxsub/brute.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace maxsub {

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;
using Members = std::vector<std::uint32_t>; // sorted element indices

struct Elements {
  std::vector<Permutation> list;
  Table mul;
  std::vector<std::uint32_t> inv;
};

Elements enumerate(Group const &g)
{
  Elements e;
  std::map<Permutation, std::uint32_t> index;
  e.list.push_back(g.identity());
  index.emplace(g.identity(), 0);
  for (std::size_t i = 0; i < e.list.size(); ++i)
    for (auto const &s : g.generators()) {
      Permutation y = e.list[i] * s;
      if (index.emplace(y, static_cast<std::uint32_t>(e.list.size())).second)
        e.list.push_back(y);
    }
  std::size_t n = e.list.size();
  e.mul.assign(n, std::vector<std::uint32_t>(n));
  e.inv.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto k = index.at(e.list[i] * e.list[j]);
      e.mul[i][j] = k;
      if (k == 0)
        e.inv[i] = static_cast<std::uint32_t>(j);
    }
  return e;
}

Members close(Elements const &e, std::vector<std::uint32_t> const &gens)
{
  std::vector<char> in(e.list.size(), 0);
  std::vector<std::uint32_t> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      auto y = e.mul[out[i]][s];
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

ClassProfile brute_force_profile(Group const &g)
{
  Elements e = enumerate(g);
  std::set<Members> found{{0}};
  std::vector<std::pair<Members, std::vector<std::uint32_t>>> frontier{{{0}, {}}};
  while (!frontier.empty()) {
    std::vector<std::pair<Members, std::vector<std::uint32_t>>> next;
    for (auto const &[h, gens] : frontier)
      for (std::uint32_t x = 0; x < e.list.size(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x))
          continue;
        auto more = gens;
        more.push_back(x);
        auto k = close(e, more);
        if (found.insert(k).second)
          next.emplace_back(std::move(k), std::move(more));
      }
    frontier = std::move(next);
  }
  std::set<Members> done;
  ClassProfile out;
  for (auto const &h : found) {
    if (done.count(h))
      continue;
    std::set<Members> cls;
    for (std::uint32_t x = 0; x < e.list.size(); ++x) {
      Members c;
      for (auto y : h)
        c.push_back(e.mul[e.mul[e.inv[x]][y]][x]);
      std::sort(c.begin(), c.end());
      cls.insert(std::move(c));
    }
    done.insert(cls.begin(), cls.end());
    out.emplace_back(h.size(), cls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassProfile lattice_profile(LatticeSnapshot const &s)
{
  ClassProfile out;
  for (auto const &c : s.classes)
    out.emplace_back(c.order, c.size());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace maxsub
