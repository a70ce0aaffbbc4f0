#include "maxsub/audits.hpp"

#include <algorithm>

#include "maxsub/arith.hpp"
#include "maxsub/structure.hpp"

namespace maxsub {

std::vector<SubId> minimal_normal_subgroups(GroupAnalysis const &a)
{
  auto const &l = a.lattice();
  std::vector<SubId> normal;
  for (SubId n : l.normal_subgroups())
    if (n != l.trivial())
      normal.push_back(n);
  std::vector<SubId> out;
  for (SubId n : normal) {
    bool minimal = true;
    for (SubId k : normal)
      if (k != n && l.order(k) < l.order(n) && a.is_subgroup(k, n)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoreSolvability core_solvability(GroupAnalysis const &a, bool strict)
{
  auto const &l = a.lattice();
  CoreSolvability r;
  r.solvable = is_solvable(*a.group());
  for (SubId h : l.max2) {
    if (strict && !l.is_strict_second_maximal(h))
      continue;
    ++r.checked;
    SubId ch = l.core(h);
    bool found = false;
    for (auto const &o : l.overgroups(h))
      if (l.order(l.core(o.maximal)) > l.order(ch)) {
        found = true;
        break;
      }
    if (!found) {
      r.criterion = false;
      r.failing = h;
      break;
    }
  }
  return r;
}

XhnScan x_hn_scan(GroupAnalysis const &a)
{
  auto const &l = a.lattice();
  XhnScan r;
  std::vector<SubId> normal;
  for (SubId n : l.normal_subgroups())
    normal.push_back(n);
  for (SubId h : l.max2) {
    auto const &eh = a.elements(h);
    for (auto const &o : l.overgroups(h)) {
      SubId x = o.maximal;
      for (SubId n : normal) {
        if (l.order(n) > l.order(x) || !a.is_subgroup(n, x) || a.is_subgroup(n, h))
          continue;
        ++r.triples;
        std::uint64_t meet = (eh & a.elements(n)).count();
        if (l.order(h) * l.order(n) / meet != l.order(x))
          r.counterexamples.push_back({h, x, n});
      }
    }
  }
  return r;
}

std::vector<LIndexInstance> l_index_instances(GroupAnalysis const &a)
{
  auto const &l = a.lattice();
  std::vector<LIndexInstance> out;
  for (SubId ln : minimal_normal_subgroups(a)) {
    auto const &factors = l.class_record(ln).factors;
    bool abelian = std::all_of(factors.begin(), factors.end(), [](SimpleTypeId const &t) { return t.abelian; });
    bool psl27 = std::all_of(factors.begin(), factors.end(),
                             [](SimpleTypeId const &t) { return !t.abelian && t.order == 168; });
    std::vector<std::pair<SubId, std::uint64_t>> outside; // representative, prime of its index
    for (ClassIdx c : l.maximal_classes) {
      SubId m = l.classes[c].rep();
      if (a.is_subgroup(ln, m))
        continue;
      if (auto q = prime_power_base(l.index(m)))
        outside.emplace_back(m, *q);
    }
    for (std::size_t i = 0; i < outside.size(); ++i)
      for (std::size_t j = i + 1; j < outside.size(); ++j)
        if (outside[i].second != outside[j].second)
          out.push_back({ln, outside[i].first, outside[j].first, l.index(outside[i].first),
                         l.index(outside[j].first), l.order(ln), abelian, psl27});
  }
  return out;
}

OracleComparison oracle_compare(GroupAnalysis const &a)
{
  return {lattice_profile(a.lattice()), brute_force_profile(*a.group())};
}

JordanHolderCheck jordan_holder_check(GroupAnalysis const &a, int seeds)
{
  JordanHolderCheck r;
  auto sorted = [](std::vector<SimpleTypeId> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto reference = sorted(a.lattice().classes[a.lattice().class_of(0)].factors);
  std::optional<std::vector<SimpleTypeId>> first;
  for (int s = 0; s < seeds; ++s) {
    auto f = sorted(composition_factors(a.group(), static_cast<std::uint64_t>(s) + 1));
    ++r.series;
    if (!first)
      first = f;
    else if (f != *first)
      r.stable = false;
    if (f != reference)
      r.matches_lattice = false;
  }
  return r;
}

} // namespace maxsub
