#include "maxsub/group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "maxsub/errors.hpp"

namespace maxsub {

Group::Group(std::vector<Permutation> generators, std::vector<Point> base_prefix)
  : generators_(std::move(generators))
{
  if (generators_.empty())
    throw Error("a group needs at least one generator (use the identity for the trivial group)");
  degree_ = generators_.front().degree();
  for (auto const &g : generators_)
    if (g.degree() != degree_)
      throw DegreeMismatch(degree_, g.degree());
  for (Point b : base_prefix)
    if (b >= degree_)
      throw Error("base point outside the point set");

  schreier_sims(base_prefix);
  verify_randomly();
}

Group Group::trivial(std::size_t degree)
{
  return Group({Permutation(degree)});
}

void Group::rebuild_level(ChainLevel &level) const
{
  level.orbit.assign(1, level.base);
  level.position.assign(degree_, -1);
  level.position[level.base] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point delta = level.orbit[k];
    for (auto const &s : level.generators) {
      Point gamma = s[delta];
      if (level.position[gamma] >= 0)
        continue;
      level.position[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      level.transversal.push_back(level.transversal[k] * s);
    }
  }
  level.transversal_inverse.clear();
  level.transversal_inverse.reserve(level.transversal.size());
  for (auto const &u : level.transversal)
    level.transversal_inverse.push_back(u.inverse());
}

Group::SiftResult Group::strip(Permutation x, std::size_t from_level) const
{
  for (std::size_t l = from_level; l < chain_.size(); ++l) {
    auto const &level = chain_[l];
    std::int32_t pos = level.position[x[level.base]];
    if (pos < 0)
      return {std::move(x), l};
    x *= level.transversal_inverse[static_cast<std::size_t>(pos)];
  }
  return {std::move(x), chain_.size()};
}

void Group::schreier_sims(std::vector<Point> const &base_prefix)
{
  std::vector<Permutation> gens;
  for (auto const &g : generators_)
    if (!g.is_identity())
      gens.push_back(g);

  std::vector<Point> base = base_prefix;
  if (!gens.empty() && base.empty()) {
    Point lowest = static_cast<Point>(degree_);
    for (auto const &g : gens)
      lowest = std::min(lowest, g.lowest_moved_point());
    base.push_back(lowest);
  }
  for (auto const &g : gens) {
    bool fixes_all = std::all_of(base.begin(), base.end(), [&](Point b) { return g[b] == b; });
    if (fixes_all)
      base.push_back(g.lowest_moved_point());
  }

  chain_.clear();
  for (Point b : base) {
    ChainLevel level;
    level.base = b;
    chain_.push_back(std::move(level));
  }
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    for (auto const &g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g[chain_[j].base] != chain_[j].base) {
          fixes_prefix = false;
          break;
        }
      if (fixes_prefix)
        chain_[i].generators.push_back(g);
    }
    rebuild_level(chain_[i]);
  }

  std::size_t i = chain_.size();
  while (i >= 1) {
    auto &level = chain_[i - 1];
    bool extended = false;
    for (std::size_t k = 0; !extended && k < level.orbit.size(); ++k) {
      for (std::size_t s = 0; !extended && s < level.generators.size(); ++s) {
        Point image = level.generators[s][level.orbit[k]];
        auto pos = static_cast<std::size_t>(level.position[image]);
        Permutation schreier = level.transversal[k] * level.generators[s];
        if (schreier == level.transversal[pos])
          continue;
        schreier *= level.transversal_inverse[pos];
        auto [residue, drop] = strip(std::move(schreier), i);
        if (drop == chain_.size() && residue.is_identity())
          continue;
        if (drop == chain_.size()) {
          ChainLevel fresh;
          fresh.base = residue.lowest_moved_point();
          chain_.push_back(std::move(fresh));
        }
        for (std::size_t l = i; l <= drop; ++l) {
          chain_[l].generators.push_back(residue);
          rebuild_level(chain_[l]);
        }
        i = drop + 1;
        extended = true;
      }
    }
    if (!extended)
      --i;
  }

  unsigned __int128 order = 1;
  for (auto const &level : chain_) {
    order *= level.orbit.size();
    if (order > static_cast<unsigned __int128>(UINT64_MAX))
      throw BoundExceeded("group order does not fit in 64 bits");
  }
  order_ = static_cast<std::uint64_t>(order);
}

void Group::verify_randomly()
{
  std::vector<Permutation> gens;
  for (auto const &g : generators_)
    if (!g.is_identity())
      gens.push_back(g);
  if (gens.empty())
    return;

  std::mt19937_64 rng(std::hash<std::string>{}(key()));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> length(1, 24);

  for (int round = 0; round < 64; ++round) {
    Permutation x(degree_);
    int len = length(rng);
    for (int j = 0; j < len; ++j)
      x *= gens[pick(rng)];
    auto [residue, drop] = strip(std::move(x), 0);
    if (drop == chain_.size() && residue.is_identity())
      continue;
    // A deterministic chain that fails verification is a construction bug.
    throw Error("stabilizer chain failed random verification");
  }
}

std::vector<Point> Group::base() const
{
  std::vector<Point> result;
  for (auto const &level : chain_)
    result.push_back(level.base);
  return result;
}

std::vector<Permutation> Group::strong_generators() const
{
  std::vector<Permutation> result;
  for (auto const &level : chain_)
    for (auto const &g : level.generators)
      if (std::find(result.begin(), result.end(), g) == result.end())
        result.push_back(g);
  return result;
}

Group::SiftResult Group::sift(Permutation const &x) const
{
  if (x.degree() != degree_)
    throw DegreeMismatch(degree_, x.degree());
  return strip(x, 0);
}

bool Group::contains(Permutation const &x) const
{
  auto [residue, level] = sift(x);
  return level == chain_.size() && residue.is_identity();
}

Permutation Group::element_at(std::uint64_t index) const
{
  if (index >= order_)
    throw Error("element index out of range");
  std::vector<std::size_t> coords(chain_.size());
  for (std::size_t l = chain_.size(); l-- > 0;) {
    coords[l] = static_cast<std::size_t>(index % chain_[l].orbit.size());
    index /= chain_[l].orbit.size();
  }
  Permutation result(degree_);
  for (std::size_t l = chain_.size(); l-- > 0;)
    result *= chain_[l].transversal[coords[l]];
  return result;
}

std::uint64_t Group::index_of(Permutation const &x) const
{
  Permutation rest = x;
  std::uint64_t index = 0;
  for (auto const &level : chain_) {
    std::int32_t pos = level.position[rest[level.base]];
    if (pos < 0)
      throw NotSubgroup("element is not a member of the group");
    index = index * level.orbit.size() + static_cast<std::uint64_t>(pos);
    rest *= level.transversal_inverse[static_cast<std::size_t>(pos)];
  }
  if (!rest.is_identity())
    throw NotSubgroup("element is not a member of the group");
  return index;
}

Permutation Group::random_element(std::mt19937_64 &rng) const
{
  Permutation result(degree_);
  for (std::size_t l = chain_.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, chain_[l].orbit.size() - 1);
    result *= chain_[l].transversal[pick(rng)];
  }
  return result;
}

Group Group::with_base_prefix(std::vector<Point> const &prefix) const
{
  return Group(generators_, prefix);
}

std::string Group::key() const
{
  std::vector<std::vector<Point>> images;
  for (auto const &g : generators_)
    images.emplace_back(g.images().begin(), g.images().end());
  std::sort(images.begin(), images.end());
  std::ostringstream out;
  out << degree_ << ':';
  for (auto const &img : images) {
    for (Point p : img)
      out << p << ',';
    out << ';';
  }
  return out.str();
}

bool same_group(Group const &a, Group const &b)
{
  if (a.degree() != b.degree() || a.order() != b.order())
    return false;
  for (auto const &g : a.generators())
    if (!b.contains(g))
      return false;
  return true;
}

} // namespace maxsub
