#include "maxsub/subgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "maxsub/errors.hpp"

namespace maxsub {

namespace {

constexpr std::uint64_t kFilterLimit = 10000;

void require_members(Group const &ambient, std::vector<Permutation> const &gens)
{
  for (auto const &g : gens) {
    if (g.degree() != ambient.degree())
      throw DegreeMismatch(ambient.degree(), g.degree());
    if (!ambient.contains(g))
      throw NotSubgroup("generator " + g.to_cycles() + " is not in the ambient group");
  }
}

Group group_or_trivial(std::vector<Permutation> gens, std::size_t degree)
{
  if (gens.empty())
    return Group::trivial(degree);
  return Group(std::move(gens));
}

std::vector<Point> full_base(std::size_t degree)
{
  std::vector<Point> base(degree);
  std::iota(base.begin(), base.end(), Point{0});
  return base;
}

} // namespace

SubgroupHandle::SubgroupHandle(GroupPtr ambient, Group sub)
  : ambient_(std::move(ambient)), sub_(std::move(sub))
{
  if (!ambient_)
    throw Error("null ambient group");
  require_members(*ambient_, sub_.generators());
}

SubgroupHandle::SubgroupHandle(GroupPtr ambient, std::vector<Permutation> generators)
  : SubgroupHandle(ambient, group_or_trivial(std::move(generators), ambient->degree()))
{
}

SubgroupHandle SubgroupHandle::whole(GroupPtr ambient)
{
  Group copy = *ambient;
  return SubgroupHandle(std::move(ambient), std::move(copy));
}

SubgroupHandle SubgroupHandle::trivial(GroupPtr ambient)
{
  std::size_t degree = ambient->degree();
  return SubgroupHandle(std::move(ambient), Group::trivial(degree));
}

bool same_ambient(SubgroupHandle const &a, SubgroupHandle const &b)
{
  return a.ambient_ptr() == b.ambient_ptr() || same_group(a.ambient(), b.ambient());
}

bool SubgroupHandle::is_subgroup_of(SubgroupHandle const &other) const
{
  if (!same_ambient(*this, other))
    throw AmbientMismatch();
  if (other.order() % order() != 0)
    return false;
  return std::all_of(generators().begin(), generators().end(),
                     [&](Permutation const &g) { return other.contains(g); });
}

bool operator==(SubgroupHandle const &a, SubgroupHandle const &b)
{
  if (!same_ambient(a, b))
    throw AmbientMismatch();
  return a.order() == b.order() && a.is_subgroup_of(b);
}

// ---------------------------------------------------------------------------

Permutation Homomorphism::pair(Permutation const &x, Permutation const &y,
                               bool codomain_first) const
{
  std::size_t n = domain_->degree();
  std::size_t m = codomain_->degree();
  std::vector<Point> images(n + m);
  if (codomain_first) {
    for (std::size_t i = 0; i < m; ++i)
      images[i] = y[static_cast<Point>(i)];
    for (std::size_t i = 0; i < n; ++i)
      images[m + i] = static_cast<Point>(m) + x[static_cast<Point>(i)];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      images[i] = x[static_cast<Point>(i)];
    for (std::size_t i = 0; i < m; ++i)
      images[n + i] = static_cast<Point>(n) + y[static_cast<Point>(i)];
  }
  return Permutation::from_images(std::move(images));
}

namespace {

Permutation slice(Permutation const &p, std::size_t offset, std::size_t count)
{
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i)
    images[i] = p[static_cast<Point>(offset + i)] - static_cast<Point>(offset);
  return Permutation::from_images(std::move(images));
}

} // namespace

Homomorphism::Homomorphism(GroupPtr domain, GroupPtr codomain,
                           std::vector<Permutation> generator_images)
  : domain_(std::move(domain)), codomain_(std::move(codomain)),
    images_(std::move(generator_images)),
    kernel_(SubgroupHandle::trivial(domain_))
{
  auto const &gens = domain_->generators();
  if (gens.size() != images_.size())
    throw Error("one image per domain generator is required");
  require_members(*codomain_, images_);

  std::vector<Permutation> domain_first, codomain_first;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    domain_first.push_back(pair(gens[i], images_[i], false));
    codomain_first.push_back(pair(gens[i], images_[i], true));
  }
  graph_domain_first_ = std::make_shared<const Group>(std::move(domain_first));
  if (graph_domain_first_->order() != domain_->order())
    throw Error("generator images do not define a homomorphism");

  std::size_t m = codomain_->degree();
  graph_codomain_first_ =
    std::make_shared<const Group>(std::move(codomain_first), full_base(m));

  std::vector<Permutation> kernel_gens;
  auto const &chain = graph_codomain_first_->chain();
  if (chain.size() > m)
    for (auto const &k : chain[m].generators)
      kernel_gens.push_back(slice(k, m, domain_->degree()));
  kernel_ = SubgroupHandle(domain_, std::move(kernel_gens));

  if (kernel_.order() * image_group().order() != domain_->order())
    throw Error("homomorphism order identity violated");
}

Permutation Homomorphism::image(Permutation const &x) const
{
  auto [residue, level] = graph_domain_first_->sift(pair(x, codomain_->identity(), false));
  Permutation domain_part = slice(residue, 0, domain_->degree());
  if (!domain_part.is_identity())
    throw NotSubgroup("element is not in the domain");
  return slice(residue, domain_->degree(), codomain_->degree()).inverse();
}

Permutation Homomorphism::preimage(Permutation const &y) const
{
  auto [residue, level] = graph_codomain_first_->sift(pair(domain_->identity(), y, true));
  Permutation codomain_part = slice(residue, 0, codomain_->degree());
  if (!codomain_part.is_identity())
    throw NotSubgroup("element is not in the image");
  return slice(residue, codomain_->degree(), domain_->degree()).inverse();
}

SubgroupHandle Homomorphism::image_group() const
{
  return SubgroupHandle(codomain_, images_);
}

SubgroupHandle Homomorphism::image(SubgroupHandle const &h) const
{
  std::vector<Permutation> gens;
  for (auto const &g : h.generators())
    gens.push_back(image(g));
  return SubgroupHandle(codomain_, std::move(gens));
}

SubgroupHandle Homomorphism::preimage(SubgroupHandle const &k) const
{
  std::vector<Permutation> gens = kernel_.generators();
  for (auto const &g : k.generators())
    gens.push_back(preimage(g));
  return SubgroupHandle(domain_, std::move(gens));
}

// ---------------------------------------------------------------------------

Permutation canonical_right_coset_rep(Group const &h_full_base, Permutation const &x)
{
  Permutation t = x;
  for (auto const &level : h_full_base.chain()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < level.orbit.size(); ++k)
      if (t[level.orbit[k]] < t[level.orbit[best]])
        best = k;
    if (best != 0)
      t = level.transversal[best] * t;
  }
  return t;
}

CosetAction coset_action(GroupPtr const &g, SubgroupHandle const &h)
{
  require_members(*g, h.generators());
  Group h_full = h.group().with_base_prefix(full_base(g->degree()));

  std::vector<Permutation> reps{g->identity()};
  std::unordered_map<Permutation, std::size_t> index{{g->identity(), 0}};
  auto const &gens = g->generators();
  std::vector<std::vector<Point>> images(gens.size());

  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation t = canonical_right_coset_rep(h_full, reps[i] * gens[s]);
      auto [it, inserted] = index.emplace(t, reps.size());
      if (inserted)
        reps.push_back(t);
      images[s].push_back(static_cast<Point>(it->second));
    }
  }
  if (reps.size() * h.order() != g->order())
    throw Error("coset enumeration inconsistent with subgroup order");

  std::vector<Permutation> image_perms;
  for (auto &img : images)
    image_perms.push_back(Permutation::from_images(std::move(img)));
  auto codomain = share(Group(image_perms));
  Homomorphism action(g, codomain, image_perms);
  SubgroupHandle kernel = action.kernel();
  return CosetAction{std::move(action), std::move(kernel), std::move(reps)};
}

Quotient quotient_group(GroupPtr const &g, SubgroupHandle const &n)
{
  if (!is_normal(g, n))
    throw NotNormal("subgroup is not normal");
  if (n.is_trivial()) {
    Homomorphism id(g, g, g->generators());
    return Quotient{g, std::move(id)};
  }

  // Combine actions on cosets of N*G_a over orbit representatives a while
  // that shrinks the kernel; fall back to the cosets of N itself.
  auto const &gens = g->generators();
  std::vector<std::vector<Point>> images(gens.size());
  SubgroupHandle kernel = SubgroupHandle::whole(g);
  auto add_action = [&](SubgroupHandle const &k) {
    auto ca = coset_action(g, k);
    SubgroupHandle next = intersect(kernel, ca.kernel);
    if (next.order() == kernel.order())
      return;
    kernel = next;
    auto offset = static_cast<Point>(images[0].size());
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (Point x : ca.action.generator_images()[s].images())
        images[s].push_back(offset + x);
  };
  std::vector<bool> seen(g->degree(), false);
  for (Point a = 0; a < g->degree() && kernel.order() != n.order(); ++a) {
    if (seen[a])
      continue;
    std::vector<Point> orbit{a};
    seen[a] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto const &x : gens)
        if (!seen[x[orbit[i]]]) {
          seen[x[orbit[i]]] = true;
          orbit.push_back(x[orbit[i]]);
        }
    if (orbit.size() == 1)
      continue;
    Group stab_chain = g->with_base_prefix({a});
    std::vector<Permutation> stab;
    if (stab_chain.chain().size() > 1)
      stab = stab_chain.chain()[1].generators;
    SubgroupHandle k = join(n, SubgroupHandle(g, stab));
    if (k.order() != g->order())
      add_action(k);
  }
  if (kernel.order() != n.order())
    add_action(n);

  std::vector<Permutation> image_perms;
  for (auto &img : images)
    image_perms.push_back(Permutation::from_images(std::move(img)));
  auto image = share(Group(image_perms));
  Homomorphism map(g, image, image_perms);
  return Quotient{image, std::move(map)};
}

SubgroupHandle normal_closure(GroupPtr const &g, std::vector<Permutation> const &seed)
{
  require_members(*g, seed);
  std::vector<Permutation> gens;
  for (auto const &x : seed)
    if (!x.is_identity())
      gens.push_back(x);
  if (gens.empty())
    return SubgroupHandle::trivial(g);

  Group n(gens);
  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < gens.size() && !grown; ++i) {
      for (auto const &s : g->generators()) {
        Permutation c = gens[i].conjugate(s);
        if (!n.contains(c)) {
          gens.push_back(c);
          n = Group(gens);
          grown = true;
          break;
        }
      }
    }
  }
  return SubgroupHandle(g, std::move(n));
}

SubgroupHandle derived_subgroup(GroupPtr const &g)
{
  std::vector<Permutation> seed;
  auto const &gens = g->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seed.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, seed);
}

SubgroupHandle conjugate(SubgroupHandle const &h, Permutation const &x)
{
  if (!h.ambient().contains(x))
    throw NotSubgroup("conjugating element is not in the ambient group");
  std::vector<Permutation> gens;
  for (auto const &g : h.generators())
    gens.push_back(g.conjugate(x));
  return SubgroupHandle(h.ambient_ptr(), std::move(gens));
}

SubgroupHandle join(SubgroupHandle const &h, SubgroupHandle const &k)
{
  if (!same_ambient(h, k))
    throw AmbientMismatch();
  std::vector<Permutation> gens = h.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return SubgroupHandle(h.ambient_ptr(), std::move(gens));
}

bool is_normal(GroupPtr const &g, SubgroupHandle const &h)
{
  require_members(*g, h.generators());
  for (auto const &x : h.generators())
    for (auto const &s : g->generators())
      if (!h.contains(x.conjugate(s)))
        return false;
  return true;
}

SubgroupHandle intersect_filter(SubgroupHandle const &h, SubgroupHandle const &k)
{
  if (!same_ambient(h, k))
    throw AmbientMismatch();
  auto const &small = h.order() <= k.order() ? h : k;
  auto const &large = h.order() <= k.order() ? k : h;

  std::vector<Permutation> gens;
  Group current = Group::trivial(h.ambient().degree());
  for (std::uint64_t i = 1; i < small.order(); ++i) {
    Permutation x = small.group().element_at(i);
    if (large.contains(x) && !current.contains(x)) {
      gens.push_back(std::move(x));
      current = Group(gens);
    }
  }
  return SubgroupHandle(h.ambient_ptr(), std::move(current));
}

SubgroupHandle intersect_backtrack(SubgroupHandle const &h, SubgroupHandle const &k)
{
  if (!same_ambient(h, k))
    throw AmbientMismatch();
  auto const &small = h.order() <= k.order() ? h : k;
  auto const &large = h.order() <= k.order() ? k : h;

  Group const &sg = small.group();
  Group lg = large.group().with_base_prefix(sg.base());
  auto const &schain = sg.chain();
  auto const &lchain = lg.chain();
  std::size_t depth = schain.size();

  std::vector<Permutation> gens;
  Group current = Group::trivial(h.ambient().degree());

  // product = u_l * ... * u_1 over the small chain; residue is product sifted
  // through the first l levels of the large chain.
  std::function<void(std::size_t, Permutation const &, Permutation const &)> search =
    [&](std::size_t l, Permutation const &product, Permutation const &residue) {
      if (l == depth) {
        if (!product.is_identity() && lg.contains(product) && !current.contains(product)) {
          gens.push_back(product);
          current = Group(gens);
        }
        return;
      }
      auto const &level = schain[l];
      for (std::size_t c = 0; c < level.orbit.size(); ++c) {
        Permutation next_residue = level.transversal[c] * residue;
        std::int32_t pos = lchain[l].position[next_residue[lchain[l].base]];
        if (pos < 0)
          continue;
        next_residue *= lchain[l].transversal_inverse[static_cast<std::size_t>(pos)];
        search(l + 1, level.transversal[c] * product, next_residue);
      }
    };

  Permutation id = h.ambient().identity();
  search(0, id, id);
  return SubgroupHandle(h.ambient_ptr(), std::move(current));
}

SubgroupHandle intersect(SubgroupHandle const &h, SubgroupHandle const &k)
{
  if (std::min(h.order(), k.order()) <= kFilterLimit)
    return intersect_filter(h, k);
  return intersect_backtrack(h, k);
}

} // namespace maxsub
