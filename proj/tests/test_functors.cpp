#include <gtest/gtest.h>

#include "maxsub/arith.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/functors.hpp"
#include "maxsub/named.hpp"
#include "class_oracle.hpp"

using namespace maxsub;

namespace {

AnalysisPtr analyse(GroupPtr g) { return GroupAnalysis::compute(std::move(g)); }

SubId find(GroupAnalysis const &a, std::uint64_t order, std::function<bool(SubId)> pred = {})
{
  auto const &l = a.lattice();
  for (SubId h = 0; h < l.subgroup_count(); ++h)
    if (l.order(h) == order && (!pred || pred(h)))
      return h;
  throw std::runtime_error("no such subgroup");
}

std::multiset<std::uint64_t> orders(SubgroupSet const &s)
{
  std::multiset<std::uint64_t> out;
  for (SubId h : s.members)
    out.insert(s.ambient->lattice().order(h));
  return out;
}

constexpr BaseName kAll[] = {BaseName::X,  BaseName::L1,  BaseName::L2, BaseName::S,
                             BaseName::Pc, BaseName::Pci, BaseName::E1, BaseName::T1};

} // namespace

TEST(Functors, XOfSmallGroups)
{
  auto a5 = analyse(alternating_group(5));
  EXPECT_TRUE(base_set(*a5, 5, BaseName::X).empty());

  auto s5 = analyse(symmetric_group(5));
  auto x = base_set(*s5, 2, BaseName::X);
  EXPECT_EQ(x.level, Level::Max);
  EXPECT_EQ(orders(x), (std::multiset<std::uint64_t>{60}));
  EXPECT_FALSE(x.contains(find(*s5, 24)));

  auto a7 = analyse(alternating_group(7));
  auto x7 = base_set(*a7, 7, BaseName::X);
  std::set<std::uint64_t> distinct;
  for (auto o : orders(x7))
    distinct.insert(o);
  EXPECT_EQ(distinct, (std::set<std::uint64_t>{120, 168, 360}));
  EXPECT_EQ(x7.size(), 7u + 15u + 15u + 21u);
}

TEST(Functors, PhiOfXInS5IsMaxOfA5)
{
  auto s5 = analyse(symmetric_group(5));
  SubId alt = find(*s5, 60);
  auto y = phi(base_set(*s5, 2, BaseName::X));
  EXPECT_EQ(y.level, Level::Max2);
  EXPECT_EQ(y.members, s5->maximal_subgroups_of(alt));
  EXPECT_EQ(orders(y).count(12), 5u);
  EXPECT_EQ(orders(y).count(10), 6u);
  EXPECT_EQ(orders(y).count(6), 10u);
  EXPECT_TRUE(phi(SubgroupSet{s5.get(), Level::Max, {}, false}).empty());
  EXPECT_THROW(phi(base_set(*s5, 2, BaseName::L1)), LevelMismatch);
}

TEST(Functors, ContractAndExtendIdentities)
{
  auto s5 = analyse(symmetric_group(5));
  auto y = base_set(*s5, 3, BaseName::L1);
  SubgroupSet none{s5.get(), Level::Max2, {}, false};
  EXPECT_EQ(contract(y, full_stratum(*s5, Level::Max2)), y);
  EXPECT_EQ(extend(y, none), y);
  EXPECT_THROW(contract(y, base_set(*s5, 3, BaseName::X)), LevelMismatch);
  auto s4 = analyse(symmetric_group(4));
  EXPECT_THROW(contract(y, base_set(*s4, 3, BaseName::L1)), AmbientMismatch);
}

TEST(Functors, ParserBuildsTheExpectedTree)
{
  auto e = parse_functor("Pci.(Phi(X)_L1 ^ E1)");
  EXPECT_EQ(describe(e), "dot(Pci,caret(contract(Phi(X),L1),E1))");
  EXPECT_EQ(describe(parse_functor("Phi(X)_L1_S")), "contract(contract(Phi(X),L1),S)");
  EXPECT_EQ(describe(parse_functor("Pci.((Phi(X)_L2^E1)_S)")), "dot(Pci,contract(caret(contract(Phi(X),L2),E1),S))");
  EXPECT_EQ(parse_functor("Max2star"), parse_functor("S"));
}

TEST(Functors, ParserRoundTripsRegisteredPipelines)
{
  EXPECT_EQ(registered_pipelines().size(), 8u);
  for (auto const &r : registered_pipelines()) {
    auto e = parse_functor(r.text);
    EXPECT_EQ(parse_functor(render(e)), e) << r.id;
    EXPECT_EQ(render(parse_functor(render(e))), render(e)) << r.id;
  }
  EXPECT_THROW(registered_pipeline("T99"), UnknownName);
}

TEST(Functors, ParserReportsPositions)
{
  auto position = [](std::string const &text) -> std::size_t {
    try {
      parse_functor(text);
    } catch (ParseError const &e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position("Phi(X)_Q1"), 7u);
  EXPECT_EQ(position("Phi(X"), 5u);
  EXPECT_EQ(position("Phi(X)_L1)"), 9u);
  EXPECT_EQ(position(""), 0u);
  EXPECT_EQ(position("Pci."), 4u);
}

TEST(Functors, EvaluationExamples)
{
  auto a5 = analyse(alternating_group(5));
  EXPECT_TRUE(FunctorEvaluator(*a5, 5).eval("Phi(X)_L1").empty());
  auto s5 = analyse(symmetric_group(5));
  auto y = FunctorEvaluator(*s5, 2).eval("Phi(X)_L1");
  EXPECT_EQ(y.members, s5->maximal_subgroups_of(find(*s5, 60)));
}

TEST(Functors, CaretSemanticsDiffer)
{
  auto s5 = analyse(symmetric_group(5));
  auto e = parse_functor("Phi(X)_L1^E1");
  auto inter = FunctorEvaluator(*s5, 5, {CaretSemantics::Intersection}).eval(e);
  auto uni = FunctorEvaluator(*s5, 5, {CaretSemantics::Union}).eval(e);
  auto base = FunctorEvaluator(*s5, 5).eval("Phi(X)_L1");
  auto e1 = base_set(*s5, 5, BaseName::E1);
  EXPECT_EQ(inter, contract(base, e1));
  EXPECT_EQ(uni, extend(base, e1));
}

TEST(Functors, BaseSetsMatchBruteForce)
{
  for (auto g : {symmetric_group(4), alternating_group(5), symmetric_group(5), dihedral_group(12)}) {
    auto a = analyse(g);
    auto const &u = a->universe();
    oracle::Lattice o(g->generators(), g->degree());
    auto const &subs = o.subgroups();
    oracle::Subgroup whole(subs.back());
    for (auto const &s : subs)
      if (s.size() > whole.size())
        whole = s;
    auto core = [&](oracle::Subgroup const &h) {
      oracle::Subgroup c = h;
      for (auto const &x : whole) {
        oracle::Subgroup next;
        for (auto const &y : c)
          if (h.count(x.inverse() * y * x))
            next.insert(y);
        c = std::move(next);
      }
      return c;
    };
    auto id_of = [&](oracle::Subgroup const &s) {
      for (SubId h = 0; h < a->lattice().subgroup_count(); ++h) {
        oracle::Subgroup t;
        a->elements(h).for_each([&](Elem x) { t.insert(u.element(x)); });
        if (t == s)
          return h;
      }
      throw std::runtime_error("missing subgroup");
    };
    auto max = o.maximal(whole);
    std::set<oracle::Subgroup> max2;
    for (auto const *m : max)
      for (auto const *h : o.maximal(*m))
        max2.insert(*h);
    for (auto p : std::vector<std::uint64_t>{2, 3, 5, 7}) {
      std::map<BaseName, std::vector<SubId>> expected;
      for (auto const *m : max)
        if (!o.solvable(*m))
          expected[BaseName::X].push_back(id_of(*m));
      for (auto const &h : max2) {
        std::vector<oracle::Subgroup const *> over;
        for (auto const *m : max)
          if (oracle::Lattice::contains(*m, h))
            over.push_back(m);
        auto any = [&](auto f) { return std::any_of(over.begin(), over.end(), f); };
        auto all = [&](auto f) { return std::all_of(over.begin(), over.end(), f); };
        bool strict = all([&](auto const *m) {
          auto below = o.maximal(*m);
          return std::any_of(below.begin(), below.end(), [&](auto const *k) { return *k == h; });
        });
        auto same_core = [&](auto const *m) { return core(h) == core(*m); };
        auto pp = [&](std::uint64_t n) { return oracle::Lattice::prime_power(n).has_value(); };
        auto power_of_p = [&](std::uint64_t n) {
          while (n % p == 0)
            n /= p;
          return n == 1;
        };
        SubId id = id_of(h);
        if (h.size() % p == 0)
          expected[BaseName::L1].push_back(id);
        if (any([&](auto const *m) { return m->size() % p == 0; }))
          expected[BaseName::L2].push_back(id);
        if (strict)
          expected[BaseName::S].push_back(id);
        if (all(same_core))
          expected[BaseName::Pc].push_back(id);
        if (all([&](auto const *m) { return same_core(m) || !pp(m->size() / h.size()); }))
          expected[BaseName::Pci].push_back(id);
        if (any([&](auto const *m) { return !power_of_p(whole.size() / m->size()); }))
          expected[BaseName::E1].push_back(id);
        if (any(same_core))
          expected[BaseName::T1].push_back(id);
      }
      for (auto b : kAll) {
        auto want = expected[b];
        std::sort(want.begin(), want.end());
        EXPECT_EQ(base_set(*a, p, b).members, want) << g->order() << " " << to_string(b) << " p=" << p;
      }
    }
  }
}

TEST(Functors, SetInclusionsAndEquivariance)
{
  for (auto g : {symmetric_group(5), psl2(7), direct_product(*alternating_group(5), *cyclic_group(3))}) {
    auto a = analyse(g);
    auto const &u = a->universe();
    for (auto p : prime_divisors(g->order())) {
      EXPECT_TRUE(base_set(*a, p, BaseName::L1).subset_of(base_set(*a, p, BaseName::L2)));
      EXPECT_TRUE(base_set(*a, p, BaseName::Pc).subset_of(base_set(*a, p, BaseName::Pci)));
      EXPECT_TRUE(base_set(*a, p, BaseName::Pc).subset_of(base_set(*a, p, BaseName::T1)));
      for (auto b : kAll) {
        auto s = base_set(*a, p, b);
        for (auto const &x : g->generators()) {
          std::vector<SubId> moved;
          for (SubId h : s.members)
            moved.push_back(a->conjugate(h, u.index_of(x)));
          std::sort(moved.begin(), moved.end());
          EXPECT_EQ(moved, s.members) << to_string(b);
        }
      }
    }
  }
}

TEST(Functors, DegeneratePrimeIsFlagged)
{
  auto s4 = analyse(symmetric_group(4));
  FunctorEvaluator fe(*s4, 5);
  EXPECT_TRUE(fe.degenerate());
  EXPECT_TRUE(fe.base(BaseName::L1).empty());
  auto v = generating_check(fe, "sym(4)", parse_functor("Phi(X)_L1"), ClassId::raw(ClassKind::F1, 5));
  EXPECT_TRUE(v.degenerate);
  EXPECT_EQ(v.outcome, Outcome::VacuousHolds);
  EXPECT_THROW(FunctorEvaluator(*s4, 4), NotPrime);
}

TEST(Functors, TransportThroughKleinFour)
{
  auto s4 = analyse(symmetric_group(4));
  SubId v4 = find(*s4, 4, [&](SubId h) { return s4->lattice().is_normal(h); });
  auto q = analyse_quotient(*s4, v4);
  EXPECT_EQ(q.analysis->group()->order(), 6u);
  auto t = transport_to_quotient(full_stratum(*s4, Level::Max), q);
  EXPECT_EQ(t.dropped, 4u);
  EXPECT_EQ(t.set.members, q.analysis->lattice().max);
  EXPECT_EQ(orders(t.set), (std::multiset<std::uint64_t>{2, 2, 2, 3}));

  auto id = analyse_quotient(*s4, s4->lattice().trivial());
  auto all = transport_to_quotient(full_stratum(*s4, Level::Max2), id);
  EXPECT_EQ(all.dropped, 0u);
  EXPECT_EQ(all.set.members, id.analysis->lattice().max2);

  SubgroupSet none{s4.get(), Level::Max2, {}, false};
  EXPECT_TRUE(transport_to_quotient(none, q).set.empty());
  EXPECT_THROW(analyse_quotient(*s4, find(*s4, 6)), NotNormal);
}

TEST(Functors, CoreAndIndexBaseSetsCommuteWithQuotients)
{
  for (auto g : {symmetric_group(4), direct_product(*alternating_group(5), *cyclic_group(2)),
                 direct_product(*symmetric_group(3), *symmetric_group(3))}) {
    auto a = analyse(g);
    for (SubId n : a->lattice().normal_subgroups()) {
      if (n == a->lattice().whole())
        continue;
      auto q = analyse_quotient(*a, n);
      for (auto p : prime_divisors(g->order()))
        for (auto b : {BaseName::S, BaseName::Pc, BaseName::Pci, BaseName::T1, BaseName::E1})
          EXPECT_TRUE(quotient_form_check(*a, q, p, b).agree) << g->order() << " " << to_string(b);
    }
  }
}

TEST(Functors, GeneratingCheckOutcomes)
{
  auto a5 = analyse(alternating_group(5));
  auto t51 = registered_pipeline("T51");
  auto v = generating_check(FunctorEvaluator(*a5, 5), "alt(5)", parse_functor(t51.text),
                            ClassId::raw(t51.target, 5));
  EXPECT_EQ(v.outcome, Outcome::VacuousHolds);
  EXPECT_EQ(v.target, "F1(5)");

  auto s5 = analyse(symmetric_group(5));
  auto w = generating_check(FunctorEvaluator(*s5, 2), "sym(5)", parse_functor(t51.text),
                            ClassId::raw(t51.target, 2));
  EXPECT_EQ(w.outcome, Outcome::NonVacuous);
  EXPECT_EQ(w.set_size, 21u);

  auto bad = generating_check(FunctorEvaluator(*a5, 5), "alt(5)", parse_functor("Phi(X)_L1"), ClassId::solvable());
  EXPECT_EQ(bad.outcome, Outcome::Violation);
  EXPECT_NE(bad.witness.find("A5"), std::string::npos) << bad.witness;
}

TEST(Functors, RegisteredPipelinesHoldOnSmallGroups)
{
  for (auto g : {symmetric_group(5), alternating_group(6), psl2(7), psl2(11),
                 direct_product(*alternating_group(5), *cyclic_group(2))}) {
    auto a = analyse(g);
    for (auto p : prime_divisors(g->order())) {
      FunctorEvaluator fe(*a, p);
      for (auto const &r : registered_pipelines()) {
        auto v = generating_check(fe, "g", parse_functor(r.text), ClassId::raw(r.target, p));
        EXPECT_NE(v.outcome, Outcome::Violation) << g->order() << " " << r.id << " p=" << p << " " << v.witness;
      }
    }
  }
}

TEST(Functors, AntihomomorphismExamples)
{
  auto s5 = analyse(symmetric_group(5));
  FunctorEvaluator fe(*s5, 5);
  Allowlist a5;
  a5.types.insert(SimpleTypeId::nonabelian(60));
  for (int ex : {1, 2}) {
    auto r = antihom_check(fe, ex, ClassId::f1_set({}), ClassId::f1_set(a5));
    EXPECT_TRUE(r.b_subset_a);
    EXPECT_TRUE(r.meet_is_b);
    EXPECT_TRUE(r.join_is_a);
    EXPECT_TRUE(r.join_identity);
    EXPECT_TRUE(r.meet_identity);
  }
  EXPECT_THROW(antihom_example(3), UnknownName);
}
