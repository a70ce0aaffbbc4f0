#include <gtest/gtest.h>

#include "maxsub/arith.hpp"
#include "maxsub/classes.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/named.hpp"
#include "class_oracle.hpp"

using namespace maxsub;

namespace {

AnalysisPtr analyse(GroupPtr g) { return GroupAnalysis::compute(std::move(g)); }

Allowlist allow(std::initializer_list<std::uint64_t> orders)
{
  Allowlist s;
  for (auto o : orders)
    s.types.insert(SimpleTypeId::nonabelian(o));
  return s;
}

constexpr ClassKind kRawKinds[] = {ClassKind::F1, ClassKind::F2, ClassKind::Jpr,
                                   ClassKind::J, ClassKind::Fprime, ClassKind::Fdoubleprime};

oracle::Lattice::Kind oracle_kind(ClassKind k)
{
  switch (k) {
  case ClassKind::F1: return oracle::Lattice::Kind::F1;
  case ClassKind::F2: return oracle::Lattice::Kind::F2;
  case ClassKind::Jpr: return oracle::Lattice::Kind::Jpr;
  case ClassKind::J: return oracle::Lattice::Kind::J;
  case ClassKind::Fprime: return oracle::Lattice::Kind::Fprime;
  default: return oracle::Lattice::Kind::Fdoubleprime;
  }
}

ClassId raw(ClassKind k, std::uint64_t p) { return ClassId::raw(k, kind_takes_prime(k) ? p : 0); }

} // namespace

TEST(Classes, MinimalNonSolvable)
{
  for (auto g : {alternating_group(5), psl2(7)}) {
    auto a = analyse(g);
    ClassEvaluator e(*a);
    EXPECT_TRUE(e.minimal_non_solvable(e.whole()));
  }
  for (auto g : {symmetric_group(5), alternating_group(6), symmetric_group(4)}) {
    auto a = analyse(g);
    ClassEvaluator e(*a);
    EXPECT_FALSE(e.minimal_non_solvable(e.whole()));
  }
}

TEST(Classes, Psl2_11MinimalNonElevenSolvable)
{
  auto a = analyse(psl2(11));
  ClassEvaluator e(*a);
  EXPECT_TRUE(e.minimal_non_p_solvable(e.whole(), 11));
  EXPECT_FALSE(e.minimal_non_solvable(e.whole()));
}

TEST(Classes, Psl2_16InJButNotJpr)
{
  auto a = analyse(psl2(16));
  ClassEvaluator e(*a);
  EXPECT_TRUE(e.member(ClassId::raw(ClassKind::J, 17)));
  EXPECT_FALSE(e.member(ClassId::raw(ClassKind::Jpr, 0)));
  auto m = e.membership(e.whole(), ClassId::raw(ClassKind::Jpr, 0));
  bool witness = false;
  for (auto const &ev : m.evidence)
    if (!ev.satisfied) {
      EXPECT_FALSE(ev.solvable);
      EXPECT_FALSE(ev.index_prime.has_value());
      witness = true;
    }
  EXPECT_TRUE(witness);
}

TEST(Classes, A7InFprimeButNotJ)
{
  auto a = analyse(alternating_group(7));
  ClassEvaluator e(*a);
  EXPECT_TRUE(e.member(ClassId::raw(ClassKind::Fprime, 7)));
  EXPECT_FALSE(e.member(ClassId::raw(ClassKind::J, 7)));
}

TEST(Classes, M11InFdoubleprimeButNotFprime)
{
  auto a = analyse(mathieu11());
  ClassEvaluator e(*a);
  EXPECT_TRUE(e.member(ClassId::raw(ClassKind::Fdoubleprime, 11)));
  EXPECT_FALSE(e.member(ClassId::raw(ClassKind::Fprime, 11)));
}

TEST(Classes, ExtensionFormationMembership)
{
  auto s4 = analyse(symmetric_group(4));
  auto s5 = analyse(symmetric_group(5));
  ClassEvaluator e4(*s4), e5(*s5);
  EXPECT_TRUE(e4.member(ClassId::f1_set({})));
  EXPECT_TRUE(e5.member(ClassId::f1_set(allow({60}))));
  EXPECT_FALSE(e5.member(ClassId::f1_set(allow({168}))));
  EXPECT_FALSE(e5.member(ClassId::f1_set({})));
}

TEST(Classes, RejectsCompositePrime)
{
  EXPECT_THROW(ClassId::raw(ClassKind::F1, 6), NotPrime);
  EXPECT_NO_THROW(ClassId::raw(ClassKind::Jpr, 0));
  EXPECT_EQ(parse_class_kind("fdoubleprime"), ClassKind::Fdoubleprime);
  EXPECT_THROW(parse_class_kind("F3"), UnknownName);
  EXPECT_EQ(ClassId::hat(ClassKind::F2, 5, allow({60})).name(), "Hat(F2(5))");
}

TEST(Classes, SubgroupMembershipMatchesBruteForce)
{
  for (auto g : {symmetric_group(4), alternating_group(5), psl2(7), symmetric_group(5)}) {
    auto a = analyse(g);
    ClassEvaluator e(*a);
    oracle::Lattice o(g->generators(), g->degree());
    auto const &u = a->universe();
    for (SubId h = 0; h < a->lattice().subgroup_count(); ++h) {
      oracle::Subgroup set;
      a->elements(h).for_each([&](Elem x) { set.insert(u.element(x)); });
      EXPECT_EQ(e.solvable(e.subgroup(h)), o.solvable(set));
      EXPECT_EQ(e.minimal_non_solvable(e.subgroup(h)), o.minimal_non_solvable(set));
      for (auto p : prime_divisors(g->order())) {
        EXPECT_EQ(e.p_solvable(e.subgroup(h), p), o.p_solvable(set, p));
        EXPECT_EQ(e.minimal_non_p_solvable(e.subgroup(h), p), o.minimal_non_p_solvable(set, p));
        for (auto k : kRawKinds)
          EXPECT_EQ(e.member(e.subgroup(h), raw(k, p)), o.member(set, oracle_kind(k), p))
            << g->order() << " " << h << " " << kind_name(k) << " " << p;
      }
    }
  }
}

TEST(Classes, QuotientSectionsMatchQuotientGroups)
{
  std::vector<GroupPtr> groups{symmetric_group(4), symmetric_group(5),
                               direct_product(*alternating_group(5), *cyclic_group(2)),
                               direct_product(*symmetric_group(3), *alternating_group(4))};
  for (auto const &g : groups) {
    auto a = analyse(g);
    ClassEvaluator e(*a);
    for (SubId n : a->lattice().normal_subgroups()) {
      auto q = quotient_group(g, a->handle(n));
      auto qa = analyse(q.group);
      ClassEvaluator qe(*qa);
      ASSERT_EQ(e.order(e.quotient(n)), q.group->order());
      EXPECT_EQ(e.factors(e.quotient(n)), qe.factors(qe.whole()));
      EXPECT_EQ(e.minimal_non_solvable(e.quotient(n)), qe.minimal_non_solvable(qe.whole()));
      for (auto p : prime_divisors(g->order()))
        for (auto k : kRawKinds)
          EXPECT_EQ(e.member(e.quotient(n), raw(k, p)), qe.member(raw(k, p)))
            << g->order() << " N=" << a->lattice().order(n) << " " << kind_name(k) << " " << p;
    }
  }
}

TEST(Classes, SolvableResidualMatchesGroupResidual)
{
  for (auto g : {symmetric_group(5), direct_product(*alternating_group(5), *cyclic_group(2)),
                 symmetric_group(4)}) {
    auto a = analyse(g);
    ClassEvaluator e(*a);
    SubId r = e.residual(ClassId::solvable());
    auto expected = residual(g, [](Group const &q) { return is_solvable(q); });
    EXPECT_EQ(r, a->id_of(expected));
  }
}

TEST(Classes, FormationAxiomsHoldForSolvableAndExtensionClasses)
{
  std::vector<std::pair<std::string, AnalysisPtr>> corpus{
    {"sym(4)", analyse(symmetric_group(4))},
    {"sym(5)", analyse(symmetric_group(5))},
    {"product(alt(5),cyclic(2))", analyse(direct_product(*alternating_group(5), *cyclic_group(2)))},
  };
  for (auto const &c : {ClassId::solvable(), ClassId::f1_set({}), ClassId::f1_set(allow({60}))}) {
    auto r = formation_axiom_check(c, corpus);
    EXPECT_EQ(r.groups, 3u);
    EXPECT_GT(r.checks, 0u);
    EXPECT_TRUE(r.violations.empty()) << c.name();
  }
}

TEST(Classes, AllowlistScanCollectsNonabelianFactors)
{
  std::vector<AnalysisPtr> corpus{analyse(alternating_group(6)), analyse(psl2(7)), analyse(symmetric_group(4))};
  auto s = allowlist_scan(corpus, ClassId::raw(ClassKind::F2, 5), "small");
  EXPECT_TRUE(s.allows(SimpleTypeId::nonabelian(360)));
  EXPECT_TRUE(s.allows(SimpleTypeId::nonabelian(168)));
  auto t = allowlist_scan(corpus, ClassId::raw(ClassKind::F1, 5), "small");
  EXPECT_FALSE(t.allows(SimpleTypeId::nonabelian(360)));
  EXPECT_TRUE(t.allows(SimpleTypeId::nonabelian(168)));
  EXPECT_EQ(t.provenance, "corpus-scan:small:F1(5)");
}

TEST(Classes, MeetAndJoin)
{
  auto a = analyse(symmetric_group(5));
  ClassEvaluator e(*a);
  EXPECT_TRUE(class_join_membership(e, ClassId::f1_set(allow({60})), ClassId::solvable()));
  EXPECT_FALSE(class_join_membership(e, ClassId::f1_set({}), ClassId::solvable()));
  EXPECT_FALSE(class_meet_membership(e, e.whole(), ClassId::solvable(), ClassId::f1_set(allow({60}))));
  EXPECT_TRUE(class_meet_membership(e, e.whole(), ClassId::raw(ClassKind::F2, 5),
                                    ClassId::f1_set(allow({60}))));
}
