#include <gtest/gtest.h>

#include <random>

#include "maxsub/errors.hpp"
#include "maxsub/group.hpp"
#include "maxsub/subgroup.hpp"
#include "maxsub/universe.hpp"
#include "oracle.hpp"

using namespace maxsub;

namespace {

Permutation P(char const *s, std::size_t n) { return Permutation::parse(s, n); }

GroupPtr sym(std::size_t n)
{
  std::string cyc = "(";
  for (std::size_t i = 1; i <= n; ++i)
    cyc += std::to_string(i) + (i < n ? " " : ")");
  return share(Group({P("(1 2)", n), P(cyc.c_str(), n)}));
}

GroupPtr m11()
{
  return share(Group({P("(1 2 3 4 5 6 7 8 9 10 11)", 11), P("(3 7 11 8)(4 10 5 6)", 11)}));
}

} // namespace

TEST(Group, Orders)
{
  EXPECT_EQ(sym(5)->order(), 120u);
  EXPECT_EQ(m11()->order(), 7920u);
  Group a5({P("(1 2 3)", 5), P("(3 4 5)", 5)});
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_EQ(oracle::closure(a5.generators(), 5).size(), 60u);
}

TEST(Group, OrderIsProductOfOrbitLengths)
{
  auto g = m11();
  std::uint64_t prod = 1;
  for (auto const &lvl : g->chain())
    prod *= lvl.orbit.size();
  EXPECT_EQ(prod, g->order());
}

TEST(Group, Membership)
{
  Group a5({P("(1 2 3)", 5), P("(3 4 5)", 5)});
  EXPECT_FALSE(a5.contains(P("(1 2)", 5)));
  EXPECT_TRUE(a5.contains(P("(1 2 3)", 5)));
  auto g = m11();
  std::mt19937_64 rng(7);
  Permutation x(11);
  for (int i = 0; i < 50; ++i)
    x *= g->generators()[rng() % 2];
  EXPECT_TRUE(g->contains(x));
  EXPECT_THROW((void)a5.contains(Permutation(6)), DegreeMismatch);
}

TEST(Group, MembershipAgreesWithClosure)
{
  Group g({P("(1 2 3 4)", 6), P("(1 2)(5 6)", 6)});
  auto all = oracle::closure(g.generators(), 6);
  auto s6 = sym(6);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto x = s6->random_element(rng);
    EXPECT_EQ(g.contains(x), all.count(x) == 1);
  }
}

TEST(Group, ElementIndexRoundTrip)
{
  auto g = sym(5);
  for (std::uint64_t i = 0; i < g->order(); ++i)
    EXPECT_EQ(g->index_of(g->element_at(i)), i);
  EXPECT_TRUE(g->element_at(0).is_identity());
}

TEST(Subgroup, CosetActionS5A5)
{
  auto s5 = sym(5);
  SubgroupHandle a5(s5, {P("(1 2 3)", 5), P("(3 4 5)", 5)});
  auto ca = coset_action(s5, a5);
  EXPECT_EQ(ca.action.codomain().degree(), 2u);
  EXPECT_EQ(ca.kernel, a5);
}

TEST(Subgroup, CosetActionM11M10IsFaithful)
{
  auto g = m11();
  // M10 is the stabilizer of a point.
  SubgroupHandle m10(g, g->with_base_prefix({0}).chain()[1].generators);
  EXPECT_EQ(m10.order(), 720u);
  auto ca = coset_action(g, m10);
  EXPECT_EQ(ca.action.codomain().degree(), 11u);
  EXPECT_TRUE(ca.kernel.is_trivial());
}

TEST(Subgroup, CoreOfD8InS4)
{
  auto s4 = sym(4);
  SubgroupHandle d8(s4, {P("(1 2 3 4)", 4), P("(1 3)", 4)});
  auto ca = coset_action(s4, d8);
  EXPECT_EQ(ca.action.codomain().degree(), 3u);
  EXPECT_EQ(ca.kernel.order(), 4u);
  // Oracle: intersection of the conjugates.
  auto elems = oracle::closure(d8.generators(), 4);
  std::set<Permutation> core = elems;
  for (auto const &x : oracle::closure(s4->generators(), 4)) {
    std::set<Permutation> next;
    for (auto const &e : core)
      if (elems.count(x.inverse() * e * x))
        next.insert(e);
    core = next;
  }
  EXPECT_EQ(core.size(), 4u);
  for (auto const &e : core)
    EXPECT_TRUE(ca.kernel.contains(e));
}

TEST(Subgroup, Quotients)
{
  auto s5 = sym(5);
  SubgroupHandle a5(s5, {P("(1 2 3)", 5), P("(3 4 5)", 5)});
  EXPECT_EQ(quotient_group(s5, a5).group->order(), 2u);
  auto a4 = share(Group({P("(1 2 3)", 4), P("(2 3 4)", 4)}));
  SubgroupHandle v4(a4, {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)});
  auto q = quotient_group(a4, v4);
  EXPECT_EQ(q.group->order(), 3u);
  EXPECT_EQ(q.map.kernel(), v4);
  EXPECT_EQ(quotient_group(s5, SubgroupHandle::trivial(s5)).group->order(), 120u);
  SubgroupHandle c3(a4, {P("(1 2 3)", 4)});
  EXPECT_THROW(quotient_group(a4, c3), NotNormal);
}

TEST(Subgroup, Operations)
{
  auto s5 = sym(5);
  auto d = derived_subgroup(s5);
  EXPECT_EQ(d.order(), 60u);
  auto s4 = sym(4);
  EXPECT_EQ(normal_closure(s4, {P("(1 2)(3 4)", 4)}).order(), 4u);
  SubgroupHandle a5(s5, {P("(1 2 3)", 5), P("(3 4 5)", 5)});
  SubgroupHandle s4in5(s5, {P("(1 2)", 5), P("(1 2 3 4)", 5)});
  auto i = intersect(a5, s4in5);
  EXPECT_EQ(i.order(), 12u);
  EXPECT_EQ(intersect_backtrack(a5, s4in5), intersect_filter(a5, s4in5));
  EXPECT_TRUE(is_normal(s5, a5));
  EXPECT_FALSE(is_normal(s5, s4in5));
  EXPECT_EQ(join(a5, s4in5).order(), 120u);
}

TEST(Subgroup, IntersectBacktrackAgreesOnM11)
{
  auto g = m11();
  SubgroupHandle m10(g, g->with_base_prefix({0}).chain()[1].generators);
  SubgroupHandle other = conjugate(m10, g->generators()[0]);
  auto a = intersect_backtrack(m10, other);
  auto b = intersect_filter(m10, other);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.order(), 72u);
}

TEST(Universe, TableMatchesPermutations)
{
  auto g = sym(5);
  Universe u(g);
  ASSERT_EQ(u.size(), 120u);
  for (Elem a = 0; a < u.size(); a += 7)
    for (Elem b = 0; b < u.size(); ++b)
      ASSERT_EQ(u.element(u.mul(a, b)), u.element(a) * u.element(b));
  for (Elem a = 0; a < u.size(); ++a)
    EXPECT_EQ(u.mul(a, u.inv(a)), u.identity());
  auto dv = u.derived_subgroup(u.whole());
  EXPECT_EQ(dv.order(), 60u);
  EXPECT_EQ(u.conjugacy_classes(u.whole()).size(), 7u);
  EXPECT_EQ(u.handle(dv).order(), 60u);
}

TEST(Universe, RejectsLargeGroups)
{
  EXPECT_THROW(Universe(sym(8)), BoundExceeded);
}
