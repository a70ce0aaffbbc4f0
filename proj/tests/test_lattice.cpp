#include <gtest/gtest.h>

#include "maxsub/arith.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/kernels.hpp"
#include "maxsub/lattice.hpp"
#include "maxsub/named.hpp"
#include "oracle.hpp"

using namespace maxsub;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> profile(LatticeSnapshot const &s)
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto const &c : s.classes)
    out.emplace_back(c.order, c.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::multiset<std::pair<std::uint64_t, std::size_t>> maximal_profile(LatticeSnapshot const &s)
{
  std::multiset<std::pair<std::uint64_t, std::size_t>> out;
  for (auto c : s.maximal_classes)
    out.emplace(s.classes[c].order, s.classes[c].size());
  return out;
}

GroupPtr q8()
{
  return share(Group({Permutation::parse("(1 2 3 4)(5 6 7 8)", 8),
                      Permutation::parse("(1 5 3 7)(2 8 4 6)", 8)}));
}

SubId find_order(GroupAnalysis const &a, std::uint64_t order, std::function<bool(SubId)> pred = {})
{
  auto const &s = a.lattice();
  for (SubId h = 0; h < s.subgroup_count(); ++h)
    if (s.order(h) == order && (!pred || pred(h)))
      return h;
  throw std::runtime_error("not found");
}

} // namespace

TEST(Lattice, SmallCounts)
{
  auto s4 = GroupAnalysis::compute(named_group("sym(4)"));
  EXPECT_EQ(s4->lattice().subgroup_count(), 30u);
  EXPECT_EQ(s4->lattice().classes.size(), 11u);
  EXPECT_EQ(GroupAnalysis::compute(named_group("alt(5)"))->lattice().subgroup_count(), 59u);
  EXPECT_EQ(GroupAnalysis::compute(named_group("cyclic(6)"))->lattice().subgroup_count(), 4u);
  EXPECT_EQ(GroupAnalysis::compute(named_group("cyclic(1)"))->lattice().subgroup_count(), 1u);
}

TEST(Lattice, MatchesOracle)
{
  for (auto spec : {"sym(4)", "alt(5)", "dihedral(12)", "product(sym(3),sym(3))", "product(alt(4),cyclic(2))",
                    "psl2(7)", "product(dihedral(8),cyclic(2))", "product(cyclic(3),cyclic(3))", "sym(5)"}) {
    auto g = named_group(spec);
    auto a = GroupAnalysis::compute(g);
    auto subs = oracle::all_subgroups(g->generators(), g->degree());
    EXPECT_EQ(a->lattice().subgroup_count(), subs.size()) << spec;
    EXPECT_EQ(profile(a->lattice()), oracle::class_profile(subs, g->generators(), g->degree())) << spec;
  }
}

TEST(Lattice, SnapshotInvariants)
{
  auto a = GroupAnalysis::compute(named_group("product(sym(4),sym(3))"));
  auto const &s = a->lattice();
  std::size_t total = 0;
  for (auto const &c : s.classes) {
    total += c.size();
    EXPECT_EQ(s.group_order % c.order, 0u);
  }
  EXPECT_EQ(total, s.subgroup_count());
  EXPECT_EQ(s.order(s.whole()), s.group_order);
  EXPECT_EQ(s.order(s.trivial()), 1u);
  // Nothing strictly between a maximal subgroup and G.
  for (SubId m : s.max)
    for (SubId h = 1; h < s.subgroup_count(); ++h)
      if (h != m && s.order(h) > s.order(m))
        EXPECT_FALSE(a->elements(m).subset_of(a->elements(h)));
  // Max(M) matches a direct scan.
  for (std::size_t i = 0; i < s.max.size(); ++i) {
    std::vector<SubId> direct;
    SubId m = s.max[i];
    for (SubId h = 0; h < s.subgroup_count(); ++h) {
      if (h == m || !a->elements(h).subset_of(a->elements(m)))
        continue;
      bool maximal = true;
      for (SubId k = 0; k < s.subgroup_count(); ++k)
        if (k != h && k != m && s.order(k) > s.order(h) && a->elements(h).subset_of(a->elements(k)) &&
            a->elements(k).subset_of(a->elements(m)))
          maximal = false;
      if (maximal)
        direct.push_back(h);
    }
    EXPECT_EQ(s.max_of[i], direct);
  }
  // Core monotonicity on second maximal / maximal pairs.
  for (std::size_t i = 0; i < s.max2.size(); ++i)
    for (auto const &o : s.max2_over[i])
      EXPECT_TRUE(a->is_subgroup(s.core(s.max2[i]), s.core(o.maximal)));
}

TEST(Lattice, ParallelMatchesSerial)
{
  auto g = named_group("product(alt(5),sym(3))");
  Universe u(g);
  auto serial = enumerate_subgroups(u, LatticeOptions{kDefaultLatticeBound, false});
  auto parallel = enumerate_subgroups(u, LatticeOptions{kDefaultLatticeBound, true});
  EXPECT_TRUE(serial.snapshot == parallel.snapshot);
  auto pairs = kernels::seed_pairs(u);
  auto a = kernels::perfect_residuals_serial(u, pairs);
  auto b = kernels::perfect_residuals_parallel(u, pairs);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    EXPECT_TRUE(a[i].elements == b[i].elements);
}

TEST(Lattice, MaximalSubgroupsOfA5)
{
  auto a = GroupAnalysis::compute(named_group("alt(5)"));
  EXPECT_EQ(a->lattice().max.size(), 21u);
  EXPECT_EQ(maximal_profile(a->lattice()),
            (std::multiset<std::pair<std::uint64_t, std::size_t>>{{12, 5}, {10, 6}, {6, 10}}));
}

TEST(Lattice, MaximalSubgroupsOfA7)
{
  auto a = GroupAnalysis::compute(named_group("alt(7)"));
  std::multiset<std::uint64_t> orders, indices;
  for (auto c : a->lattice().maximal_classes) {
    orders.insert(a->lattice().classes[c].order);
    indices.insert(2520 / a->lattice().classes[c].order);
  }
  // PSL(2,7) occurs in two classes in A7.
  EXPECT_EQ(orders, (std::multiset<std::uint64_t>{72, 120, 168, 168, 360}));
  EXPECT_EQ(indices, (std::multiset<std::uint64_t>{7, 15, 15, 21, 35}));
}

TEST(Lattice, MaxOver)
{
  auto a5 = GroupAnalysis::compute(named_group("alt(5)"));
  SubId v4 = find_order(*a5, 4);
  EXPECT_EQ(a5->max_over(v4).size(), 1u);
  EXPECT_EQ(a5->lattice().order(a5->max_over(v4)[0]), 12u);

  auto s5 = GroupAnalysis::compute(named_group("sym(5)"));
  auto const &s = s5->lattice();
  SubId alt5 = find_order(*s5, 60);
  SubId a4 = find_order(*s5, 12, [&](SubId h) { return s5->is_subgroup(h, alt5); });
  auto over = s5->max_over(a4);
  ASSERT_EQ(over.size(), 2u);
  std::multiset<std::uint64_t> o{s.order(over[0]), s.order(over[1])};
  EXPECT_EQ(o, (std::multiset<std::uint64_t>{24, 60}));
  EXPECT_TRUE(s.is_strict_second_maximal(a4));

  auto c8 = GroupAnalysis::compute(named_group("cyclic(8)"));
  ASSERT_EQ(c8->lattice().max2.size(), 1u);
  EXPECT_EQ(c8->lattice().order(c8->lattice().max2[0]), 2u);
  EXPECT_TRUE(c8->lattice().is_strict_second_maximal(c8->lattice().max2[0]));
}

TEST(Lattice, StrictSecondMaximalInA5MatchesScan)
{
  auto a = GroupAnalysis::compute(named_group("alt(5)"));
  auto const &s = a->lattice();
  for (SubId h : s.max2) {
    bool strict = true;
    for (SubId m : s.max) {
      if (!a->elements(h).subset_of(a->elements(m)))
        continue;
      auto const &mm = a->maximal_subgroups_of(m);
      if (!std::binary_search(mm.begin(), mm.end(), h))
        strict = false;
    }
    EXPECT_EQ(s.is_strict_second_maximal(h), strict);
  }
  // C2 lies in S3, D10 and A4 in A5, and is not maximal in A4.
  SubId c2 = find_order(*a, 2);
  EXPECT_FALSE(s.is_strict_second_maximal(c2));
}

TEST(Lattice, Frattini)
{
  EXPECT_EQ(frattini_subgroup(named_group("cyclic(4)")).order(), 2u);
  EXPECT_EQ(frattini_subgroup(named_group("sym(4)")).order(), 1u);
  auto q = q8();
  ASSERT_EQ(q->order(), 8u);
  EXPECT_EQ(frattini_subgroup(q).order(), 2u);
}

TEST(Lattice, CoresAndIndices)
{
  auto s4 = named_group("sym(4)");
  SubgroupHandle d8(s4, {Permutation::parse("(1 2 3 4)", 4), Permutation::parse("(1 3)", 4)});
  EXPECT_EQ(core(s4, d8).order(), 4u);
  auto a = GroupAnalysis::compute(s4);
  EXPECT_EQ(a->lattice().order(a->lattice().core(a->id_of(d8))), 4u);
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_FALSE(is_prime_power(15));
  EXPECT_EQ(prime_power_base(11), std::optional<std::uint64_t>(11));
  auto a7 = named_group("alt(7)");
  SubgroupHandle l27(a7, {Permutation::parse("(1 2 3 4 5 6 7)", 7), Permutation::parse("(2 3 5)(4 7 6)", 7),
                          Permutation::parse("(1 2)(3 6)", 7)});
  EXPECT_EQ(l27.order(), 168u);
  EXPECT_EQ(index(a7, l27), 15u);
}

TEST(Lattice, BoundEnforced)
{
  EXPECT_THROW(GroupAnalysis::compute(named_group("sym(4)"), LatticeOptions{10, false}), BoundExceeded);
}

TEST(Lattice, ConjugationEquivariance)
{
  auto a = GroupAnalysis::compute(named_group("product(sym(3),cyclic(4))"));
  auto const &s = a->lattice();
  for (Elem g : a->universe().generators()) {
    std::vector<SubId> img;
    for (SubId m : s.max2)
      img.push_back(a->conjugate(m, g));
    std::sort(img.begin(), img.end());
    EXPECT_EQ(img, s.max2);
  }
}
