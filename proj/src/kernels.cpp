#include "maxsub/kernels.hpp"

#include <unordered_set>

#include <omp.h>

namespace maxsub::kernels {

namespace {

SubgroupView perfect_residual(Universe const &u, SubgroupView k)
{
  while (k.order() > 1) {
    SubgroupView d = u.derived_subgroup(k);
    if (d.order() == k.order())
      break;
    k = std::move(d);
  }
  return k;
}

template <typename Map>
std::vector<SubgroupView> merge_unique(std::vector<SubgroupView> &candidates, Map &&keep)
{
  std::vector<SubgroupView> out;
  std::unordered_set<Fingerprint, FingerprintHash> seen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!keep(i) || candidates[i].order() <= 1)
      continue;
    if (seen.insert(fingerprint(candidates[i].elements)).second)
      out.push_back(std::move(candidates[i]));
  }
  return out;
}

std::vector<std::size_t> first_occurrences(std::vector<Fingerprint> const &fps)
{
  std::vector<std::size_t> out;
  std::unordered_set<Fingerprint, FingerprintHash> seen;
  for (std::size_t i = 0; i < fps.size(); ++i)
    if (seen.insert(fps[i]).second)
      out.push_back(i);
  return out;
}

} // namespace

std::vector<std::pair<Elem, Elem>> seed_pairs(Universe const &u)
{
  std::vector<std::pair<Elem, Elem>> pairs;
  SubgroupView whole = u.whole();
  for (auto const &cls : u.conjugacy_classes(whole)) {
    Elem x = cls.front();
    if (x == u.identity())
      continue;
    SubgroupView c = u.centralizer(whole, x);
    Elem one[] = {x};
    ElementSet cyclic = u.closure(one);
    ElementSet done = u.empty_set();
    for (Elem e = 0; e < u.size(); ++e) {
      if (done.test(e))
        continue;
      std::vector<Elem> orbit{e};
      done.set(e);
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (Elem g : c.generators) {
          Elem f = u.conj(orbit[q], g);
          if (!done.test(f)) {
            done.set(f);
            orbit.push_back(f);
          }
        }
      if (!cyclic.test(e))
        pairs.emplace_back(x, e);
    }
  }
  return pairs;
}

std::vector<SubgroupView> perfect_residuals_serial(Universe const &u,
                                                   std::vector<std::pair<Elem, Elem>> const &pairs)
{
  std::vector<Fingerprint> fps(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Elem gens[] = {pairs[i].first, pairs[i].second};
    fps[i] = fingerprint(u.closure(gens));
  }
  auto firsts = first_occurrences(fps);
  std::vector<SubgroupView> residuals(firsts.size());
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    auto [x, y] = pairs[firsts[i]];
    residuals[i] = perfect_residual(u, u.make_view({x, y}));
  }
  return merge_unique(residuals, [](std::size_t) { return true; });
}

std::vector<SubgroupView> perfect_residuals_parallel(Universe const &u,
                                                     std::vector<std::pair<Elem, Elem>> const &pairs)
{
  std::vector<Fingerprint> fps(pairs.size());
  auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    Elem gens[] = {pairs[i].first, pairs[i].second};
    fps[i] = fingerprint(u.closure(gens));
  }
  auto firsts = first_occurrences(fps);
  std::vector<SubgroupView> residuals(firsts.size());
  auto m = static_cast<std::int64_t>(firsts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < m; ++i) {
    auto [x, y] = pairs[firsts[i]];
    residuals[i] = perfect_residual(u, u.make_view({x, y}));
  }
  return merge_unique(residuals, [](std::size_t) { return true; });
}

namespace {

void containment_row(std::vector<std::vector<ElementSet const *>> const &cm,
                     std::vector<std::size_t> const &orders, std::size_t a,
                     std::vector<std::uint64_t> &row)
{
  for (std::size_t b = 0; b < cm.size(); ++b) {
    if (orders[a] % orders[b] != 0)
      continue;
    ElementSet const &rep = *cm[b].front();
    for (ElementSet const *m : cm[a])
      if (rep.subset_of(*m)) {
        row[b >> 6] |= std::uint64_t{1} << (b & 63);
        break;
      }
  }
}

std::vector<std::size_t> class_orders(std::vector<std::vector<ElementSet const *>> const &cm)
{
  std::vector<std::size_t> orders;
  for (auto const &c : cm)
    orders.push_back(c.front()->count());
  return orders;
}

} // namespace

ContainmentMatrix containment_serial(std::vector<std::vector<ElementSet const *>> const &cm)
{
  auto orders = class_orders(cm);
  ContainmentMatrix out(cm.size(), std::vector<std::uint64_t>((cm.size() + 63) / 64, 0));
  for (std::size_t a = 0; a < cm.size(); ++a)
    containment_row(cm, orders, a, out[a]);
  return out;
}

ContainmentMatrix containment_parallel(std::vector<std::vector<ElementSet const *>> const &cm)
{
  auto orders = class_orders(cm);
  ContainmentMatrix out(cm.size(), std::vector<std::uint64_t>((cm.size() + 63) / 64, 0));
  auto n = static_cast<std::int64_t>(cm.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t a = 0; a < n; ++a)
    containment_row(cm, orders, static_cast<std::size_t>(a), out[a]);
  return out;
}

} // namespace maxsub::kernels
