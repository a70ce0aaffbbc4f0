#include <gtest/gtest.h>

#include <set>

#include "maxsub/errors.hpp"
#include "maxsub/named.hpp"
#include "maxsub/structure.hpp"
#include "oracle.hpp"

using namespace maxsub;

namespace {

std::vector<std::string> labels(std::vector<SimpleTypeId> const &f)
{
  std::vector<std::string> out;
  for (auto const &t : f)
    out.push_back(t.label);
  return out;
}

// All normal subgroups by brute force: subgroups generated by unions of
// conjugacy classes, closed under conjugation.
std::set<std::set<Permutation>> brute_normals(Group const &g)
{
  auto elems = oracle::closure(g.generators(), g.degree());
  std::vector<std::set<Permutation>> classes;
  std::set<Permutation> done;
  for (auto const &x : elems) {
    if (done.count(x))
      continue;
    std::set<Permutation> c;
    for (auto const &y : elems)
      c.insert(y.inverse() * x * y);
    done.insert(c.begin(), c.end());
    classes.push_back(c);
  }
  std::set<std::set<Permutation>> normals{{Permutation(g.degree())}};
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = normals;
    for (auto const &n : snapshot)
      for (auto const &c : classes) {
        std::vector<Permutation> gens(n.begin(), n.end());
        gens.insert(gens.end(), c.begin(), c.end());
        auto m = oracle::closure(gens, g.degree());
        if (normals.insert(m).second)
          grew = true;
      }
  }
  return normals;
}

} // namespace

TEST(Structure, GroupOrders)
{
  EXPECT_EQ(named_group("alt(7)")->order(), 2520u);
  EXPECT_EQ(named_group("psl2(16)")->order(), 4080u);
  EXPECT_EQ(named_group("psl2(11)")->order(), 660u);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 13u, 25u, 27u, 32u}) {
    std::uint64_t expect = static_cast<std::uint64_t>(q) * (q * q - 1) / (q % 2 ? 2 : 1);
    EXPECT_EQ(named_group("psl2(" + std::to_string(q) + ")")->order(), expect) << q;
  }
  EXPECT_EQ(named_group("product(alt(5), cyclic(2))")->order(), 120u);
  EXPECT_EQ(named_group("dihedral(10)")->order(), 10u);
  EXPECT_EQ(named_group("dihedral(4)")->order(), 4u);
  EXPECT_THROW(named_group("foo(3)"), UnknownName);
  EXPECT_THROW(named_group("psl2(6)"), UnknownName);
}

TEST(Structure, Solvability)
{
  EXPECT_TRUE(is_solvable(*named_group("sym(4)")));
  EXPECT_FALSE(is_solvable(*named_group("alt(5)")));
  EXPECT_TRUE(is_solvable(*named_group("dihedral(10)")));
  EXPECT_FALSE(is_solvable(*named_group("mathieu11")));
}

TEST(Structure, PSolvability)
{
  EXPECT_TRUE(is_p_solvable(named_group("alt(5)"), 7));
  EXPECT_FALSE(is_p_solvable(named_group("psl2(11)"), 11));
  EXPECT_TRUE(is_p_solvable(named_group("alt(5)"), 17));
  EXPECT_FALSE(is_p_solvable(named_group("alt(5)"), 5));
  EXPECT_TRUE(is_p_solvable(named_group("product(alt(5),cyclic(7))"), 7));
  EXPECT_THROW(is_p_solvable(named_group("alt(5)"), 6), NotPrime);
}

TEST(Structure, MinimalNormalSubgroups)
{
  auto a5 = minimal_normal_subgroups(named_group("alt(5)"));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].order(), 60u);
  auto c6 = minimal_normal_subgroups(named_group("cyclic(6)"));
  std::multiset<std::uint64_t> orders;
  for (auto const &h : c6)
    orders.insert(h.order());
  EXPECT_EQ(orders, (std::multiset<std::uint64_t>{2, 3}));
  auto s5 = minimal_normal_subgroups(named_group("sym(5)"));
  ASSERT_EQ(s5.size(), 1u);
  EXPECT_EQ(s5[0].order(), 60u);
  EXPECT_THROW(minimal_normal_subgroups(named_group("cyclic(1)")), TrivialGroup);
}

TEST(Structure, NormalSubgroupsMatchBruteForce)
{
  for (auto spec : {"sym(4)", "dihedral(8)", "product(sym(3),cyclic(2))", "product(cyclic(2),cyclic(2))",
                    "product(alt(4),cyclic(3))", "sym(5)", "dihedral(12)"}) {
    auto g = named_group(spec);
    Universe u(g);
    auto ours = normal_subgroups(u, u.whole());
    auto brute = brute_normals(*g);
    ASSERT_EQ(ours.size(), brute.size()) << spec;
    for (auto const &n : ours) {
      std::set<Permutation> s;
      n.elements.for_each([&](Elem e) { s.insert(u.element(e)); });
      EXPECT_TRUE(brute.count(s)) << spec;
    }
    // minimal normal subgroups agree with the brute-force minimal elements
    std::size_t brute_min = 0;
    for (auto const &n : brute) {
      if (n.size() == 1)
        continue;
      bool minimal = true;
      for (auto const &m : brute)
        if (m.size() > 1 && m.size() < n.size() &&
            std::includes(n.begin(), n.end(), m.begin(), m.end()))
          minimal = false;
      brute_min += minimal;
    }
    EXPECT_EQ(minimal_normal_subgroups(u, u.whole()).size(), brute_min) << spec;
  }
}

TEST(Structure, CompositionFactors)
{
  EXPECT_EQ(labels(composition_factors(named_group("sym(5)"))), (std::vector<std::string>{"C2", "A5"}));
  EXPECT_EQ(labels(composition_factors(named_group("alt(7)"))), (std::vector<std::string>{"A7"}));
  EXPECT_EQ(labels(composition_factors(named_group("sym(4)"))),
            (std::vector<std::string>{"C2", "C2", "C2", "C3"}));
  auto cs = chief_series(named_group("sym(4)"));
  ASSERT_EQ(cs.terms.size(), 4u);
  EXPECT_EQ(cs.terms[1].order(), 12u);
  EXPECT_EQ(cs.terms[2].order(), 4u);
  EXPECT_EQ(cs.factors[2].multiplicity, 2u);
  auto a5sq = chief_series(named_group("product(alt(5),alt(5))"));
  std::uint64_t prod = 1;
  for (auto const &f : a5sq.factors)
    prod *= f.order;
  EXPECT_EQ(prod, 3600u);
}

TEST(Structure, JordanHolderStability)
{
  for (auto spec : {"product(sym(4),sym(3))", "product(alt(5),sym(3))", "product(dihedral(8),cyclic(2))",
                    "product(psl2(7),cyclic(2))"}) {
    auto g = named_group(spec);
    Universe u(g);
    auto base = composition_factors(u, u.whole(), 0);
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      EXPECT_EQ(composition_factors(u, u.whole(), seed), base) << spec;
  }
}

TEST(Structure, ChiefSeriesTermsAreNormal)
{
  auto g = named_group("product(alt(5),sym(3))");
  auto cs = chief_series(g, 3);
  for (auto const &t : cs.terms)
    EXPECT_TRUE(is_normal(g, t));
}

TEST(Structure, Residuals)
{
  auto solvable_quotient = [](Group const &q) { return is_solvable(q); };
  EXPECT_EQ(residual(named_group("sym(5)"), solvable_quotient).order(), 60u);
  EXPECT_EQ(residual(named_group("sym(4)"), solvable_quotient).order(), 1u);
  auto m11 = named_group("mathieu11");
  auto r = residual(m11, [](Group const &q) { return is_p_solvable(share(q), 11); });
  EXPECT_EQ(r.order(), 7920u);
}

TEST(Structure, SimpleIdentificationCeiling)
{
  EXPECT_THROW(simple_group_of_order(20160), UnidentifiableFactor);
  EXPECT_EQ(simple_group_of_order(168)->label, "L2(7)");
  EXPECT_FALSE(simple_group_of_order(120).has_value());
}
