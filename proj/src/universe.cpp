#include "maxsub/universe.hpp"

#include <algorithm>

#include "maxsub/errors.hpp"

namespace maxsub {

std::size_t ElementSet::count() const
{
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::subset_of(ElementSet const &other) const
{
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w])
      return false;
  return true;
}

ElementSet ElementSet::operator&(ElementSet const &other) const
{
  ElementSet r = *this;
  r &= other;
  return r;
}

ElementSet &ElementSet::operator&=(ElementSet const &other)
{
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= other.words_[w];
  return *this;
}

ElementSet &ElementSet::operator|=(ElementSet const &other)
{
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] |= other.words_[w];
  return *this;
}

std::vector<Elem> ElementSet::members() const
{
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace

Fingerprint fingerprint(ElementSet const &s)
{
  Fingerprint f{0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL ^ s.universe_size()};
  auto words = s.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    f.lo = mix(f.lo ^ words[w] ^ (w * 0x85ebca6bULL));
    f.hi = mix(f.hi + words[w] + mix(w + 0xc2b2ae35ULL));
  }
  return f;
}

// ---------------------------------------------------------------------------

Universe::Universe(GroupPtr group) : group_(std::move(group))
{
  std::uint64_t order = group_->order();
  if (order > kMaxOrder)
    throw BoundExceeded("group order " + std::to_string(order) +
                        " exceeds the element-table bound " + std::to_string(kMaxOrder));
  n_ = static_cast<std::uint32_t>(order);

  elements_.reserve(n_);
  for (std::uint32_t i = 0; i < n_; ++i)
    elements_.push_back(group_->element_at(i));

  std::vector<Permutation> gens;
  for (auto const &g : group_->generators())
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  for (auto const &g : gens)
    generator_indices_.push_back(index_of(g));

  std::size_t k = gens.size();
  std::vector<Elem> right(static_cast<std::size_t>(n_) * k);
  for (Elem i = 0; i < n_; ++i)
    for (std::size_t s = 0; s < k; ++s)
      right[i * k + s] = static_cast<Elem>(group_->index_of(elements_[i] * gens[s]));

  // Spanning tree of the Cayley graph: element j = parent[j] * gens[via[j]].
  std::vector<Elem> order_bfs{0};
  std::vector<Elem> parent(n_, 0);
  std::vector<std::uint32_t> via(n_, 0);
  std::vector<bool> seen(n_, false);
  seen[0] = true;
  for (std::size_t q = 0; q < order_bfs.size(); ++q) {
    Elem e = order_bfs[q];
    for (std::size_t s = 0; s < k; ++s) {
      Elem f = right[e * k + s];
      if (!seen[f]) {
        seen[f] = true;
        parent[f] = e;
        via[f] = static_cast<std::uint32_t>(s);
        order_bfs.push_back(f);
      }
    }
  }
  if (order_bfs.size() != n_)
    throw Error("element table construction did not reach every element");

  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (Elem i = 0; i < n_; ++i) {
    std::uint16_t *row = &table_[static_cast<std::size_t>(i) * n_];
    row[0] = static_cast<std::uint16_t>(i);
    for (std::size_t q = 1; q < order_bfs.size(); ++q) {
      Elem j = order_bfs[q];
      row[j] = static_cast<std::uint16_t>(right[row[parent[j]] * k + via[j]]);
    }
  }

  inverse_.resize(n_);
  orders_.resize(n_);
  for (Elem i = 0; i < n_; ++i) {
    inverse_[i] = static_cast<Elem>(group_->index_of(elements_[i].inverse()));
    orders_[i] = static_cast<std::uint32_t>(elements_[i].order());
  }
}

Elem Universe::index_of(Permutation const &x) const
{
  return static_cast<Elem>(group_->index_of(x));
}

Elem Universe::power(Elem a, std::uint64_t k) const
{
  Elem result = 0;
  Elem base = a;
  while (k) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ElementSet Universe::full_set() const
{
  ElementSet s(n_);
  for (Elem e = 0; e < n_; ++e)
    s.set(e);
  return s;
}

ElementSet Universe::closure(std::span<const Elem> gens) const
{
  ElementSet s(n_);
  s.set(0);
  std::vector<Elem> list{0};
  for (std::size_t q = 0; q < list.size(); ++q) {
    Elem e = list[q];
    for (Elem g : gens) {
      Elem f = mul(e, g);
      if (!s.test(f)) {
        s.set(f);
        list.push_back(f);
      }
    }
  }
  return s;
}

SubgroupView Universe::extend(SubgroupView const &h, Elem x) const
{
  if (h.elements.test(x))
    return h;
  SubgroupView result = h;
  result.generators.push_back(x);
  std::vector<Elem> members = h.elements.members();
  std::vector<Elem> reps{0};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Elem s : result.generators) {
      Elem t = mul(reps[r], s);
      if (result.elements.test(t))
        continue;
      for (Elem m : members)
        result.elements.set(mul(m, t));
      reps.push_back(t);
    }
  }
  return result;
}

SubgroupView Universe::whole() const
{
  return SubgroupView{full_set(), generator_indices_};
}

SubgroupView Universe::trivial() const
{
  ElementSet s(n_);
  s.set(0);
  return SubgroupView{std::move(s), {}};
}

SubgroupView Universe::make_view(std::vector<Elem> gens) const
{
  std::erase(gens, Elem{0});
  SubgroupView v{closure(gens), std::move(gens)};
  return v;
}

ElementSet Universe::conjugate(ElementSet const &s, Elem g) const
{
  ElementSet out(n_);
  Elem gi = inverse_[g];
  s.for_each([&](Elem e) { out.set(mul(mul(gi, e), g)); });
  return out;
}

SubgroupView Universe::conjugate(SubgroupView const &s, Elem g) const
{
  SubgroupView out{conjugate(s.elements, g), {}};
  out.generators.reserve(s.generators.size());
  for (Elem x : s.generators)
    out.generators.push_back(conj(x, g));
  return out;
}

std::vector<std::vector<Elem>> Universe::conjugacy_classes(SubgroupView const &within) const
{
  std::vector<std::vector<Elem>> classes;
  ElementSet done(n_);
  within.elements.for_each([&](Elem e) {
    if (done.test(e))
      return;
    std::vector<Elem> cls{e};
    done.set(e);
    for (std::size_t q = 0; q < cls.size(); ++q)
      for (Elem g : within.generators) {
        Elem f = conj(cls[q], g);
        if (!done.test(f)) {
          done.set(f);
          cls.push_back(f);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  });
  return classes;
}

SubgroupView Universe::normal_closure(SubgroupView const &within, std::span<const Elem> seeds) const
{
  SubgroupView n = trivial();
  for (Elem x : seeds)
    n = extend(n, x);
  for (std::size_t i = 0; i < n.generators.size(); ++i)
    for (Elem w : within.generators) {
      Elem c = conj(n.generators[i], w);
      if (!n.elements.test(c))
        n = extend(n, c);
    }
  return n;
}

SubgroupView Universe::join(SubgroupView const &a, SubgroupView const &b) const
{
  SubgroupView result = a;
  for (Elem x : b.generators)
    result = extend(result, x);
  return result;
}

SubgroupView Universe::derived_subgroup(SubgroupView const &s) const
{
  std::vector<Elem> seeds;
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = i + 1; j < s.generators.size(); ++j) {
      Elem c = commutator(s.generators[i], s.generators[j]);
      if (c != 0)
        seeds.push_back(c);
    }
  return normal_closure(s, seeds);
}

SubgroupView Universe::centralizer(SubgroupView const &within, Elem x) const
{
  SubgroupView c = trivial();
  within.elements.for_each([&](Elem g) {
    if (mul(x, g) == mul(g, x) && !c.elements.test(g))
      c = extend(c, g);
  });
  return c;
}

ElementSet Universe::normalizer(SubgroupView const &within, SubgroupView const &s) const
{
  ElementSet out(n_);
  within.elements.for_each([&](Elem g) {
    for (Elem x : s.generators)
      if (!s.elements.test(conj(x, g)))
        return;
    out.set(g);
  });
  return out;
}

SubgroupHandle Universe::handle(SubgroupView const &s) const
{
  std::vector<Permutation> gens;
  for (Elem e : s.generators)
    gens.push_back(elements_[e]);
  return SubgroupHandle(group_, std::move(gens));
}

SubgroupView Universe::view(SubgroupHandle const &h) const
{
  std::vector<Elem> gens;
  for (auto const &g : h.generators())
    gens.push_back(index_of(g));
  return make_view(std::move(gens));
}

std::vector<Elem> reduce_generators(Universe const &u, std::span<const Elem> gens)
{
  SubgroupView v = u.trivial();
  for (Elem g : gens)
    if (!v.elements.test(g))
      v = u.extend(v, g);
  return v.generators;
}

} // namespace maxsub
