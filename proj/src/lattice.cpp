#include "maxsub/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "maxsub/errors.hpp"
#include "maxsub/kernels.hpp"

namespace maxsub {

bool LatticeSnapshot::is_maximal(SubId h) const
{
  return std::binary_search(max.begin(), max.end(), h);
}

std::optional<std::size_t> LatticeSnapshot::max_position(SubId m) const
{
  auto it = std::lower_bound(max.begin(), max.end(), m);
  if (it == max.end() || *it != m)
    return std::nullopt;
  return static_cast<std::size_t>(it - max.begin());
}

std::optional<std::size_t> LatticeSnapshot::max2_position(SubId h) const
{
  auto it = std::lower_bound(max2.begin(), max2.end(), h);
  if (it == max2.end() || *it != h)
    return std::nullopt;
  return static_cast<std::size_t>(it - max2.begin());
}

std::vector<Overgroup> const &LatticeSnapshot::overgroups(SubId h) const
{
  auto pos = max2_position(h);
  if (!pos)
    throw NotSubgroup("subgroup " + std::to_string(h) + " is not second maximal");
  return max2_over[*pos];
}

bool LatticeSnapshot::is_strict_second_maximal(SubId h) const
{
  auto pos = max2_position(h);
  if (!pos)
    return false;
  auto const &over = max2_over[*pos];
  return std::all_of(over.begin(), over.end(), [](Overgroup const &o) { return o.covers; });
}

std::vector<SubId> LatticeSnapshot::strict_second_maximal() const
{
  std::vector<SubId> out;
  for (SubId h : max2)
    if (is_strict_second_maximal(h))
      out.push_back(h);
  return out;
}

std::vector<SubId> LatticeSnapshot::normal_subgroups() const
{
  std::vector<SubId> out;
  for (auto const &c : classes)
    if (c.size() == 1)
      out.push_back(c.rep());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool words_less(ElementSet const &a, ElementSet const &b)
{
  auto wa = a.words();
  auto wb = b.words();
  return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
}

struct Builder {
  Universe const &u;
  std::vector<ElementSet> sets;
  std::vector<std::vector<Elem>> gens;
  std::vector<Elem> conjugators;
  std::vector<ClassIdx> cls;
  std::vector<std::vector<SubId>> class_members;
  std::unordered_map<Fingerprint, SubId, FingerprintHash> index;

  explicit Builder(Universe const &u_) : u(u_) {}

  std::optional<SubId> find(ElementSet const &s) const
  {
    auto it = index.find(fingerprint(s));
    if (it == index.end())
      return std::nullopt;
    if (!(sets[it->second] == s))
      throw Error("subgroup fingerprint collision");
    return it->second;
  }

  SubId insert(ElementSet s, std::vector<Elem> g, Elem conj, ClassIdx c)
  {
    auto id = static_cast<SubId>(sets.size());
    index.emplace(fingerprint(s), id);
    sets.push_back(std::move(s));
    gens.push_back(std::move(g));
    conjugators.push_back(conj);
    cls.push_back(c);
    class_members[c].push_back(id);
    return id;
  }

  /// Adds the conjugacy class of v unless v is already known.
  bool add_class(SubgroupView const &v)
  {
    if (find(v.elements))
      return false;
    auto c = static_cast<ClassIdx>(class_members.size());
    class_members.emplace_back();
    std::vector<Elem> rep_gens = reduce_generators(u, v.generators);
    insert(v.elements, rep_gens, u.identity(), c);
    for (std::size_t q = 0; q < class_members[c].size(); ++q) {
      SubId cur = class_members[c][q];
      for (Elem g : u.generators()) {
        ElementSet s = u.conjugate(sets[cur], g);
        if (find(s))
          continue;
        Elem conj = u.mul(conjugators[cur], g);
        std::vector<Elem> cg;
        for (Elem x : rep_gens)
          cg.push_back(u.conj(x, conj));
        insert(std::move(s), std::move(cg), conj, c);
      }
    }
    return true;
  }

  void cyclic_extensions(ClassIdx c)
  {
    SubId rep = class_members[c].front();
    SubgroupView h{sets[rep], gens[rep]};
    ElementSet norm = u.normalizer(u.whole(), h);
    ElementSet covered = h.elements;
    norm.for_each([&](Elem x) {
      if (covered.test(x))
        return;
      // order of xH
      Elem y = x;
      std::uint32_t k = 1;
      while (!h.elements.test(y)) {
        y = u.mul(y, x);
        ++k;
      }
      for (std::uint32_t d = 2; d * d <= k; ++d)
        if (k % d == 0)
          return;
      SubgroupView ext = u.extend(h, x);
      covered |= ext.elements;
      add_class(ext);
    });
  }
};

} // namespace

LatticeBuild enumerate_subgroups(Universe const &u, LatticeOptions const &options)
{
  if (u.size() > options.bound)
    throw BoundExceeded("group order " + std::to_string(u.size()) + " exceeds the lattice bound " +
                        std::to_string(options.bound));
  Builder b(u);
  SubgroupView whole = u.whole();

  b.add_class(u.trivial());
  for (auto const &cls : u.conjugacy_classes(whole))
    if (cls.front() != u.identity())
      b.add_class(u.make_view({cls.front()}));

  auto pairs = kernels::seed_pairs(u);
  auto perfect = options.parallel ? kernels::perfect_residuals_parallel(u, pairs)
                                  : kernels::perfect_residuals_serial(u, pairs);
  for (auto const &p : perfect)
    b.add_class(p);

  for (ClassIdx c = 0; c < b.class_members.size(); ++c)
    b.cyclic_extensions(c);

  // Canonical order.
  std::size_t nclasses = b.class_members.size();
  for (auto &members : b.class_members)
    std::sort(members.begin(), members.end(),
              [&](SubId x, SubId y) { return words_less(b.sets[x], b.sets[y]); });
  std::vector<ClassIdx> corder(nclasses);
  std::iota(corder.begin(), corder.end(), ClassIdx{0});
  std::sort(corder.begin(), corder.end(), [&](ClassIdx x, ClassIdx y) {
    auto const &mx = b.class_members[x];
    auto const &my = b.class_members[y];
    auto ox = b.sets[mx.front()].count(), oy = b.sets[my.front()].count();
    if (ox != oy)
      return ox > oy;
    if (mx.size() != my.size())
      return mx.size() < my.size();
    return words_less(b.sets[mx.front()], b.sets[my.front()]);
  });

  LatticeBuild out;
  LatticeSnapshot &snap = out.snapshot;
  snap.key = u.group().key();
  snap.group_order = u.size();
  std::vector<SubId> new_id(b.sets.size());
  for (ClassIdx nc = 0; nc < nclasses; ++nc) {
    auto const &members = b.class_members[corder[nc]];
    SubgroupClass rec;
    rec.order = b.sets[members.front()].count();
    Elem rep_conj_inv = u.inv(b.conjugators[members.front()]);
    for (SubId m : members) {
      auto id = static_cast<SubId>(snap.subgroups.size());
      new_id[m] = id;
      rec.members.push_back(id);
      SubgroupRecord sr;
      sr.cls = nc;
      sr.conjugator = u.mul(rep_conj_inv, b.conjugators[m]);
      sr.generators = b.gens[m];
      snap.subgroups.push_back(std::move(sr));
      out.elements.push_back(b.sets[m]);
    }
    snap.classes.push_back(std::move(rec));
  }
  std::unordered_map<Fingerprint, SubId, FingerprintHash> final_index;
  for (SubId id = 0; id < out.elements.size(); ++id)
    final_index.emplace(fingerprint(out.elements[id]), id);
  auto lookup = [&](ElementSet const &s) {
    auto it = final_index.find(fingerprint(s));
    if (it == final_index.end() || !(out.elements[it->second] == s))
      throw Error("subgroup missing from lattice");
    return it->second;
  };

  // Class properties.
  for (auto &c : snap.classes) {
    SubgroupView rep{out.elements[c.rep()], snap.subgroups[c.rep()].generators};
    c.factors = composition_factors(u, rep);
    c.solvable = factors_solvable(c.factors);
    ElementSet core = out.elements[c.members.front()];
    for (SubId m : c.members)
      core &= out.elements[m];
    c.core = lookup(core);
  }

  // Containment among classes.
  std::vector<std::vector<ElementSet const *>> cm(nclasses);
  for (ClassIdx c = 0; c < nclasses; ++c)
    for (SubId m : snap.classes[c].members)
      cm[c].push_back(&out.elements[m]);
  snap.contains = options.parallel ? kernels::containment_parallel(cm) : kernels::containment_serial(cm);

  // Max(G).
  for (ClassIdx a = 1; a < nclasses; ++a) {
    bool maximal = true;
    for (ClassIdx c = 1; c < nclasses && snap.classes[c].order > snap.classes[a].order; ++c)
      if (snap.class_contains(c, a)) {
        maximal = false;
        break;
      }
    if (maximal) {
      snap.maximal_classes.push_back(a);
      for (SubId m : snap.classes[a].members)
        snap.max.push_back(m);
    }
  }
  std::sort(snap.max.begin(), snap.max.end());

  // Max(M) for each maximal M, computed on class representatives and
  // transported by conjugation.
  snap.max_of.resize(snap.max.size());
  for (ClassIdx a : snap.maximal_classes) {
    SubId rep = snap.classes[a].rep();
    ElementSet const &mset = out.elements[rep];
    std::vector<SubId> candidates;
    for (ClassIdx bcls = 0; bcls < nclasses; ++bcls) {
      if (bcls == a || snap.classes[bcls].order >= snap.classes[a].order ||
          !snap.class_contains(a, bcls))
        continue;
      for (SubId k : snap.classes[bcls].members)
        if (out.elements[k].subset_of(mset))
          candidates.push_back(k);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](SubId x, SubId y) { return snap.order(x) > snap.order(y); });
    std::vector<SubId> maxes;
    for (SubId k : candidates) {
      bool inside = false;
      for (SubId m : maxes)
        if (out.elements[k].subset_of(out.elements[m])) {
          inside = true;
          break;
        }
      if (!inside)
        maxes.push_back(k);
    }
    for (SubId member : snap.classes[a].members) {
      Elem g = snap.subgroups[member].conjugator;
      std::vector<SubId> mapped;
      for (SubId k : maxes)
        mapped.push_back(member == rep ? k : lookup(u.conjugate(out.elements[k], g)));
      std::sort(mapped.begin(), mapped.end());
      snap.max_of[*snap.max_position(member)] = std::move(mapped);
    }
  }

  // Max2 and overgroups.
  for (auto const &list : snap.max_of)
    snap.max2.insert(snap.max2.end(), list.begin(), list.end());
  std::sort(snap.max2.begin(), snap.max2.end());
  snap.max2.erase(std::unique(snap.max2.begin(), snap.max2.end()), snap.max2.end());
  snap.max2_over.resize(snap.max2.size());
  for (std::size_t i = 0; i < snap.max2.size(); ++i) {
    SubId h = snap.max2[i];
    for (std::size_t j = 0; j < snap.max.size(); ++j) {
      SubId m = snap.max[j];
      if (!snap.class_contains(snap.class_of(m), snap.class_of(h)) || snap.order(m) <= snap.order(h))
        continue;
      if (!out.elements[h].subset_of(out.elements[m]))
        continue;
      bool covers = std::binary_search(snap.max_of[j].begin(), snap.max_of[j].end(), h);
      snap.max2_over[i].push_back(Overgroup{m, covers});
    }
  }

  ElementSet phi = u.full_set();
  for (SubId m : snap.max)
    phi &= out.elements[m];
  snap.frattini = lookup(phi);
  return out;
}

// ---------------------------------------------------------------------------

GroupAnalysis::GroupAnalysis(GroupPtr g, LatticeSnapshot snapshot)
  : group_(std::move(g)), snapshot_(std::move(snapshot))
{
}

std::shared_ptr<GroupAnalysis> GroupAnalysis::compute(GroupPtr g, LatticeOptions const &options)
{
  if (g->order() > options.bound)
    throw BoundExceeded("group order " + std::to_string(g->order()) + " exceeds the lattice bound " +
                        std::to_string(options.bound));
  auto u = std::make_unique<Universe>(g);
  auto build = enumerate_subgroups(*u, options);
  std::shared_ptr<GroupAnalysis> a(new GroupAnalysis(g, std::move(build.snapshot)));
  a->universe_ = std::move(u);
  a->elements_ = std::move(build.elements);
  for (SubId id = 0; id < a->elements_.size(); ++id)
    a->by_fingerprint_.emplace(fingerprint(a->elements_[id]), id);
  return a;
}

std::shared_ptr<GroupAnalysis> GroupAnalysis::restore(GroupPtr g, LatticeSnapshot snapshot)
{
  if (snapshot.key != g->key())
    throw Error("lattice snapshot belongs to a different group");
  return std::shared_ptr<GroupAnalysis>(new GroupAnalysis(std::move(g), std::move(snapshot)));
}

Universe const &GroupAnalysis::universe() const
{
  std::lock_guard lock(mutex_);
  if (!universe_)
    universe_ = std::make_unique<Universe>(group_);
  return *universe_;
}

void GroupAnalysis::ensure_elements() const
{
  std::lock_guard lock(mutex_);
  if (!elements_.empty())
    return;
  Universe const &u = universe();
  std::vector<ElementSet> sets;
  sets.reserve(snapshot_.subgroups.size());
  for (auto const &s : snapshot_.subgroups)
    sets.push_back(u.closure(s.generators));
  for (SubId id = 0; id < sets.size(); ++id)
    by_fingerprint_.emplace(fingerprint(sets[id]), id);
  elements_ = std::move(sets);
}

ElementSet const &GroupAnalysis::elements(SubId h) const
{
  ensure_elements();
  return elements_[h];
}

SubgroupView GroupAnalysis::view(SubId h) const
{
  return SubgroupView{elements(h), snapshot_.subgroups[h].generators};
}

SubgroupHandle GroupAnalysis::handle(SubId h) const
{
  Universe const &u = universe();
  std::vector<Permutation> gens;
  for (Elem e : snapshot_.subgroups[h].generators)
    gens.push_back(u.element(e));
  return SubgroupHandle(group_, std::move(gens));
}

SubId GroupAnalysis::id_of(ElementSet const &s) const
{
  ensure_elements();
  auto it = by_fingerprint_.find(fingerprint(s));
  if (it == by_fingerprint_.end() || !(elements_[it->second] == s))
    throw NotSubgroup("element set is not a subgroup of the lattice");
  return it->second;
}

SubId GroupAnalysis::id_of(SubgroupHandle const &h) const
{
  return id_of(universe().view(h).elements);
}

bool GroupAnalysis::is_subgroup(SubId a, SubId b) const
{
  if (a == b || a == snapshot_.trivial() || b == snapshot_.whole())
    return true;
  if (snapshot_.order(b) % snapshot_.order(a) != 0 || snapshot_.order(a) == snapshot_.order(b))
    return false;
  ClassIdx ca = snapshot_.class_of(a), cb = snapshot_.class_of(b);
  if (!snapshot_.class_contains(cb, ca))
    return false;
  if (snapshot_.is_normal(b))
    return true;
  if (auto pos = snapshot_.max2_position(a); pos && snapshot_.is_maximal(b)) {
    auto const &over = snapshot_.max2_over[*pos];
    return std::any_of(over.begin(), over.end(), [&](Overgroup const &o) { return o.maximal == b; });
  }
  return elements(a).subset_of(elements(b));
}

std::vector<SubId> const &GroupAnalysis::maximal_subgroups_of(SubId h) const
{
  if (h == snapshot_.whole())
    return snapshot_.max;
  if (auto pos = snapshot_.max_position(h))
    return snapshot_.max_of[*pos];
  std::lock_guard lock(mutex_);
  if (auto it = maximal_cache_.find(h); it != maximal_cache_.end())
    return it->second;
  ensure_elements();
  ElementSet const &hs = elements_[h];
  std::vector<SubId> candidates;
  for (ClassIdx c = 0; c < snapshot_.classes.size(); ++c) {
    auto const &rec = snapshot_.classes[c];
    if (rec.order >= snapshot_.order(h) || snapshot_.order(h) % rec.order != 0 ||
        !snapshot_.class_contains(snapshot_.class_of(h), c))
      continue;
    for (SubId k : rec.members)
      if (elements_[k].subset_of(hs))
        candidates.push_back(k);
  }
  std::vector<SubId> maxes;
  for (SubId k : candidates) { // classes are ordered by decreasing order
    bool inside = false;
    for (SubId m : maxes)
      if (elements_[k].subset_of(elements_[m])) {
        inside = true;
        break;
      }
    if (!inside)
      maxes.push_back(k);
  }
  std::sort(maxes.begin(), maxes.end());
  return maximal_cache_.emplace(h, std::move(maxes)).first->second;
}

std::vector<SubId> GroupAnalysis::max_over(SubId h) const
{
  if (auto pos = snapshot_.max2_position(h)) {
    std::vector<SubId> out;
    for (auto const &o : snapshot_.max2_over[*pos])
      out.push_back(o.maximal);
    return out;
  }
  std::vector<SubId> out;
  for (SubId m : snapshot_.max)
    if (m != h && is_subgroup(h, m))
      out.push_back(m);
  return out;
}

SubId GroupAnalysis::conjugate(SubId h, Elem x) const
{
  return id_of(universe().conjugate(elements(h), x));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<SubgroupHandle> handles(GroupAnalysis const &a, std::vector<SubId> const &ids)
{
  std::vector<SubgroupHandle> out;
  for (SubId id : ids)
    out.push_back(a.handle(id));
  return out;
}

} // namespace

std::vector<SubgroupHandle> maximal_subgroups(GroupPtr const &g)
{
  auto a = GroupAnalysis::compute(g);
  return handles(*a, a->lattice().max);
}

std::vector<SubgroupHandle> second_maximal_subgroups(GroupPtr const &g)
{
  auto a = GroupAnalysis::compute(g);
  return handles(*a, a->lattice().max2);
}

std::vector<SubgroupHandle> strictly_second_maximal(GroupPtr const &g)
{
  auto a = GroupAnalysis::compute(g);
  return handles(*a, a->lattice().strict_second_maximal());
}

std::vector<SubgroupHandle> max_over(GroupPtr const &g, SubgroupHandle const &h)
{
  auto a = GroupAnalysis::compute(g);
  return handles(*a, a->max_over(a->id_of(h)));
}

SubgroupHandle frattini_subgroup(GroupPtr const &g)
{
  auto a = GroupAnalysis::compute(g);
  return a->handle(a->lattice().frattini);
}

SubgroupHandle core(GroupPtr const &g, SubgroupHandle const &h)
{
  return coset_action(g, h).kernel;
}

std::uint64_t index(GroupPtr const &g, SubgroupHandle const &h)
{
  if (!h.is_subgroup_of(SubgroupHandle::whole(g)))
    throw NotSubgroup("not a subgroup");
  return g->order() / h.order();
}

} // namespace maxsub
