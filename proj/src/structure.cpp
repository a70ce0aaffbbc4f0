#include "maxsub/structure.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <random>
#include <unordered_map>

#include "maxsub/arith.hpp"
#include "maxsub/errors.hpp"

namespace maxsub {

namespace {

struct SimpleEntry {
  std::uint64_t order;
  char const *label;
};

constexpr SimpleEntry kSimpleOrders[] = {
  {60, "A5"},        {168, "L2(7)"},    {360, "A6"},       {504, "L2(8)"},
  {660, "L2(11)"},   {1092, "L2(13)"},  {2448, "L2(17)"},  {2520, "A7"},
  {3420, "L2(19)"},  {4080, "L2(16)"},  {5616, "L3(3)"},   {6048, "U3(3)"},
  {6072, "L2(23)"},  {7800, "L2(25)"},  {7920, "M11"},     {9828, "L2(27)"},
  {12180, "L2(29)"}, {14880, "L2(31)"},
};

bool subset_less(ElementSet const &a, ElementSet const &b)
{
  auto wa = a.words();
  auto wb = b.words();
  return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
}

void sort_largest_first(std::vector<SubgroupView> &v)
{
  std::sort(v.begin(), v.end(), [](SubgroupView const &a, SubgroupView const &b) {
    auto oa = a.order(), ob = b.order();
    if (oa != ob)
      return oa > ob;
    return subset_less(a.elements, b.elements);
  });
}

bool proper_subset(ElementSet const &a, ElementSet const &b)
{
  return a.subset_of(b) && !(a == b);
}

ChiefFactor classify_factor(std::uint64_t order, bool abelian)
{
  ChiefFactor f;
  f.order = order;
  f.abelian = abelian;
  if (abelian) {
    auto p = prime_power_base(order);
    if (!p)
      throw Error("abelian chief factor of non-prime-power order " + std::to_string(order));
    f.type = SimpleTypeId::cyclic(*p);
    f.multiplicity = static_cast<unsigned>(prime_factors(order).size());
    return f;
  }
  for (unsigned k = 1; k < 64; ++k) {
    double root = std::pow(static_cast<double>(order), 1.0 / k);
    auto s = static_cast<std::uint64_t>(std::llround(root));
    if (s < 60)
      break;
    std::uint64_t pw = 1;
    for (unsigned i = 0; i < k; ++i)
      pw *= s;
    if (pw != order)
      continue;
    if (auto t = simple_group_of_order(s)) {
      f.type = *t;
      f.multiplicity = k;
      return f;
    }
  }
  if (order >= kSimpleIdentificationCeiling)
    throw UnidentifiableFactor("nonabelian chief factor of order " + std::to_string(order) +
                               " cannot be identified by order");
  throw Error("no nonabelian simple group power has order " + std::to_string(order));
}

bool commutes_into(Universe const &u, SubgroupView const &upper, ElementSet const &lower)
{
  auto const &gens = upper.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!lower.test(u.commutator(gens[i], gens[j])))
        return false;
  return true;
}

} // namespace

SimpleTypeId SimpleTypeId::cyclic(std::uint64_t p)
{
  if (!is_prime(p))
    throw NotPrime(p);
  return SimpleTypeId{true, p, "C" + std::to_string(p)};
}

SimpleTypeId SimpleTypeId::nonabelian(std::uint64_t order)
{
  auto t = simple_group_of_order(order);
  if (!t)
    throw Error("no nonabelian simple group of order " + std::to_string(order));
  return *t;
}

std::optional<SimpleTypeId> simple_group_of_order(std::uint64_t order)
{
  if (order >= kSimpleIdentificationCeiling)
    throw UnidentifiableFactor("simple group of order " + std::to_string(order) +
                               " is not determined by its order");
  for (auto const &e : kSimpleOrders)
    if (e.order == order)
      return SimpleTypeId{false, order, e.label};
  return std::nullopt;
}

std::string to_string(SimpleTypeId const &t) { return t.label; }

std::vector<SubgroupView> derived_series(Universe const &u, SubgroupView const &g)
{
  std::vector<SubgroupView> series{g};
  while (true) {
    SubgroupView d = u.derived_subgroup(series.back());
    if (d.order() == series.back().order())
      break;
    series.push_back(std::move(d));
  }
  return series;
}

bool is_solvable(Universe const &u, SubgroupView const &g)
{
  return derived_series(u, g).back().order() == 1;
}

std::vector<SubgroupView> normal_subgroups(Universe const &u, SubgroupView const &g)
{
  std::vector<SubgroupView> found;
  std::unordered_map<Fingerprint, std::size_t, FingerprintHash> index;
  auto add = [&](SubgroupView v) {
    auto fp = fingerprint(v.elements);
    if (index.count(fp))
      return false;
    index.emplace(fp, found.size());
    found.push_back(std::move(v));
    return true;
  };
  add(u.trivial());
  for (auto const &cls : u.conjugacy_classes(g)) {
    if (cls.front() == u.identity())
      continue;
    Elem rep = cls.front();
    add(u.normal_closure(g, std::span<const Elem>(&rep, 1)));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) {
      if (found[i].elements.subset_of(found[j].elements) ||
          found[j].elements.subset_of(found[i].elements))
        continue;
      add(u.join(found[i], found[j]));
    }
  sort_largest_first(found);
  return found;
}

std::vector<SubgroupView> minimal_normal_subgroups(Universe const &u, SubgroupView const &g)
{
  if (g.order() == 1)
    throw TrivialGroup();
  auto all = normal_subgroups(u, g);
  std::vector<SubgroupView> out;
  for (auto const &n : all) {
    if (n.order() == 1)
      continue;
    bool minimal = true;
    for (auto const &m : all)
      if (m.order() > 1 && m.order() < n.order() && m.elements.subset_of(n.elements)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(n);
  }
  return out;
}

ChiefSeriesView chief_series(Universe const &u, SubgroupView const &g, std::uint64_t seed)
{
  auto normals = normal_subgroups(u, g);
  std::mt19937_64 rng(seed);
  ChiefSeriesView out;
  out.terms.push_back(g);
  while (out.terms.back().order() > 1) {
    auto const &cur = out.terms.back();
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (proper_subset(normals[i].elements, cur.elements))
        below.push_back(i);
    std::vector<std::size_t> maximal;
    for (auto i : below) {
      bool is_max = true;
      for (auto j : below)
        if (j != i && proper_subset(normals[i].elements, normals[j].elements)) {
          is_max = false;
          break;
        }
      if (is_max)
        maximal.push_back(i);
    }
    std::size_t pick = maximal.front();
    if (seed != 0)
      pick = maximal[rng() % maximal.size()];
    SubgroupView const &next = normals[pick];
    std::uint64_t order = cur.order() / next.order();
    out.factors.push_back(classify_factor(order, commutes_into(u, cur, next.elements)));
    out.terms.push_back(next);
  }
  return out;
}

std::vector<SimpleTypeId> composition_factors(Universe const &u, SubgroupView const &g,
                                              std::uint64_t seed)
{
  std::vector<SimpleTypeId> out;
  if (seed == 0 && is_solvable(u, g)) {
    for (auto p : prime_factors(g.order()))
      out.push_back(SimpleTypeId::cyclic(p));
    return out;
  }
  for (auto const &f : chief_series(u, g, seed).factors)
    for (unsigned k = 0; k < f.multiplicity; ++k)
      out.push_back(f.type);
  std::sort(out.begin(), out.end());
  return out;
}

bool factors_p_solvable(std::vector<SimpleTypeId> const &factors, std::uint64_t p)
{
  for (auto const &t : factors)
    if (!t.abelian && t.order % p == 0)
      return false;
  return true;
}

bool factors_solvable(std::vector<SimpleTypeId> const &factors)
{
  return std::all_of(factors.begin(), factors.end(), [](auto const &t) { return t.abelian; });
}

std::vector<SimpleTypeId> factor_difference(std::vector<SimpleTypeId> const &a,
                                            std::vector<SimpleTypeId> const &b)
{
  std::vector<SimpleTypeId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_p_solvable(Universe const &u, SubgroupView const &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw NotPrime(p);
  return factors_p_solvable(composition_factors(u, g), p);
}

SubgroupView residual(Universe const &u, SubgroupView const &g,
                      std::function<bool(SubgroupView const &)> const &in_class)
{
  auto normals = normal_subgroups(u, g);
  std::vector<SubgroupView const *> good;
  for (auto const &n : normals)
    if (in_class(n))
      good.push_back(&n);
  if (good.empty())
    throw NonUniqueMinimal("no normal subgroup has quotient in the class");
  SubgroupView const *least = good.back();
  for (auto const *n : good)
    if (!least->elements.subset_of(n->elements))
      throw NonUniqueMinimal("normal subgroups with quotient in the class have no least element");
  return *least;
}

// ---------------------------------------------------------------------------

bool is_solvable(Group const &g)
{
  auto gp = std::make_shared<const Group>(g);
  SubgroupHandle cur = SubgroupHandle::whole(gp);
  while (!cur.is_trivial()) {
    auto sub = std::make_shared<const Group>(cur.group());
    auto d = derived_subgroup(sub);
    if (d.order() == cur.order())
      return false;
    cur = SubgroupHandle(gp, d.group());
  }
  return true;
}

namespace {

std::pair<std::shared_ptr<Universe>, SubgroupView> whole_view(GroupPtr const &g)
{
  auto u = std::make_shared<Universe>(g);
  return {u, u->whole()};
}

} // namespace

bool is_p_solvable(GroupPtr const &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw NotPrime(p);
  if (g->order() % p != 0 || is_solvable(*g))
    return true;
  auto [u, w] = whole_view(g);
  return is_p_solvable(*u, w, p);
}

std::vector<SubgroupHandle> minimal_normal_subgroups(GroupPtr const &g)
{
  auto [u, w] = whole_view(g);
  std::vector<SubgroupHandle> out;
  for (auto const &n : minimal_normal_subgroups(*u, w))
    out.push_back(u->handle(n));
  return out;
}

ChiefSeries chief_series(GroupPtr const &g, std::uint64_t seed)
{
  auto [u, w] = whole_view(g);
  auto cs = chief_series(*u, w, seed);
  ChiefSeries out{g, {}, cs.factors};
  for (auto const &t : cs.terms)
    out.terms.push_back(u->handle(t));
  return out;
}

std::vector<SimpleTypeId> composition_factors(GroupPtr const &g, std::uint64_t seed)
{
  auto [u, w] = whole_view(g);
  return composition_factors(*u, w, seed);
}

SubgroupHandle residual(GroupPtr const &g, std::function<bool(Group const &quotient)> const &in_class)
{
  auto [u, w] = whole_view(g);
  auto r = residual(*u, w, [&](SubgroupView const &n) {
    return in_class(*quotient_group(g, u->handle(n)).group);
  });
  return u->handle(r);
}

} // namespace maxsub
