#include "maxsub/functors.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "maxsub/arith.hpp"
#include "maxsub/errors.hpp"

namespace maxsub {

std::string to_string(Level l) { return l == Level::Max ? "Max" : "Max2"; }

std::string to_string(CaretSemantics s) { return s == CaretSemantics::Union ? "union" : "intersection"; }

std::string to_string(E1Variant v) { return v == E1Variant::NotPowerOfP ? "not-power-of-p" : "not-prime-power"; }

CaretSemantics parse_caret(std::string const &s)
{
  if (s == "union")
    return CaretSemantics::Union;
  if (s == "intersection")
    return CaretSemantics::Intersection;
  throw ConfigError("caret semantics must be union or intersection, got '" + s + "'");
}

E1Variant parse_e1_variant(std::string const &s)
{
  if (s == "not-power-of-p")
    return E1Variant::NotPowerOfP;
  if (s == "not-prime-power")
    return E1Variant::NotPrimePower;
  throw ConfigError("E1 variant must be not-power-of-p or not-prime-power, got '" + s + "'");
}

bool SubgroupSet::contains(SubId h) const { return std::binary_search(members.begin(), members.end(), h); }

bool SubgroupSet::subset_of(SubgroupSet const &o) const
{
  return std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
}

std::string to_string(BaseName b)
{
  switch (b) {
  case BaseName::X: return "X";
  case BaseName::L1: return "L1";
  case BaseName::L2: return "L2";
  case BaseName::S: return "S";
  case BaseName::Pc: return "Pc";
  case BaseName::Pci: return "Pci";
  case BaseName::E1: return "E1";
  case BaseName::T1: return "T1";
  }
  return "?";
}

BaseName parse_base_name(std::string_view s)
{
  for (auto b : {BaseName::X, BaseName::L1, BaseName::L2, BaseName::S, BaseName::Pc, BaseName::Pci, BaseName::E1,
                 BaseName::T1})
    if (s == to_string(b))
      return b;
  if (s == "Max2star")
    return BaseName::S;
  throw UnknownName("unknown base set '" + std::string(s) + "'");
}

Level base_level(BaseName b) { return b == BaseName::X ? Level::Max : Level::Max2; }

// ---------------------------------------------------------------------------

namespace {

template <typename Pred>
SubgroupSet filter_max2(GroupAnalysis const &a, Pred &&keep)
{
  SubgroupSet out{&a, Level::Max2, {}, false};
  auto const &l = a.lattice();
  for (SubId h : l.max2)
    if (keep(h, l.overgroups(h)))
      out.members.push_back(h);
  return out;
}

void require_same(SubgroupSet const &y, SubgroupSet const &z)
{
  if (y.ambient != z.ambient)
    throw AmbientMismatch();
  if (y.level != z.level)
    throw LevelMismatch("cannot combine " + to_string(y.level) + " and " + to_string(z.level) + " sets");
}

} // namespace

SubgroupSet base_set(GroupAnalysis const &a, std::uint64_t p, BaseName name, E1Variant e1)
{
  if (!is_prime(p))
    throw NotPrime(p);
  auto const &l = a.lattice();
  SubgroupSet out;
  switch (name) {
  case BaseName::X:
    out = {&a, Level::Max, {}, false};
    for (SubId m : l.max)
      if (!l.class_record(m).solvable)
        out.members.push_back(m);
    break;
  case BaseName::L1:
    out = filter_max2(a, [&](SubId h, auto const &) { return l.order(h) % p == 0; });
    break;
  case BaseName::L2:
    out = filter_max2(a, [&](SubId, auto const &over) {
      return std::any_of(over.begin(), over.end(), [&](Overgroup const &o) { return l.order(o.maximal) % p == 0; });
    });
    break;
  case BaseName::S:
    out = filter_max2(a, [&](SubId h, auto const &) { return l.is_strict_second_maximal(h); });
    break;
  case BaseName::Pc:
    out = filter_max2(a, [&](SubId h, auto const &over) {
      return std::all_of(over.begin(), over.end(), [&](Overgroup const &o) { return l.core(h) == l.core(o.maximal); });
    });
    break;
  case BaseName::Pci:
    out = filter_max2(a, [&](SubId h, auto const &over) {
      return std::all_of(over.begin(), over.end(), [&](Overgroup const &o) {
        return l.core(h) == l.core(o.maximal) || !is_prime_power(l.order(o.maximal) / l.order(h));
      });
    });
    break;
  case BaseName::E1:
    out = filter_max2(a, [&](SubId, auto const &over) {
      return std::any_of(over.begin(), over.end(), [&](Overgroup const &o) {
        auto idx = l.index(o.maximal);
        return e1 == E1Variant::NotPowerOfP ? !is_power_of(idx, p) : !is_prime_power(idx);
      });
    });
    break;
  case BaseName::T1:
    out = filter_max2(a, [&](SubId h, auto const &over) {
      return std::any_of(over.begin(), over.end(), [&](Overgroup const &o) { return l.core(h) == l.core(o.maximal); });
    });
    break;
  }
  out.degenerate = a.group()->order() % p != 0;
  return out;
}

SubgroupSet full_stratum(GroupAnalysis const &a, Level level)
{
  auto const &l = a.lattice();
  return {&a, level, level == Level::Max ? l.max : l.max2, false};
}

SubgroupSet phi(SubgroupSet const &y)
{
  if (y.level != Level::Max)
    throw LevelMismatch("Phi takes a set of maximal subgroups");
  auto const &l = y.ambient->lattice();
  SubgroupSet out{y.ambient, Level::Max2, {}, y.degenerate};
  for (SubId m : y.members) {
    auto const &below = l.max_of[*l.max_position(m)];
    out.members.insert(out.members.end(), below.begin(), below.end());
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

SubgroupSet contract(SubgroupSet const &y, SubgroupSet const &z)
{
  require_same(y, z);
  SubgroupSet out{y.ambient, y.level, {}, y.degenerate || z.degenerate};
  std::set_intersection(y.members.begin(), y.members.end(), z.members.begin(), z.members.end(),
                        std::back_inserter(out.members));
  return out;
}

SubgroupSet extend(SubgroupSet const &y, SubgroupSet const &z)
{
  require_same(y, z);
  SubgroupSet out{y.ambient, y.level, {}, y.degenerate || z.degenerate};
  std::set_union(y.members.begin(), y.members.end(), z.members.begin(), z.members.end(),
                 std::back_inserter(out.members));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FunctorExpr parse()
  {
    FunctorExpr e = expr();
    skip();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c)
  {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c)
  {
    if (!peek(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string identifier()
  {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected a name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  BaseName atom()
  {
    skip();
    std::size_t start = pos_;
    std::string name = identifier();
    try {
      return parse_base_name(name);
    } catch (UnknownName const &) {
      throw ParseError("unknown atom '" + name + "'", start);
    }
  }

  FunctorExpr leaf(BaseName b)
  {
    FunctorExpr e;
    e.op = FunctorExpr::Op::Atom;
    e.atom = b;
    return e;
  }

  FunctorExpr expr()
  {
    skip();
    std::size_t save = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::string name = identifier();
      if (name != "Phi" && peek('.')) {
        pos_ = save;
        BaseName b = atom();
        expect('.');
        FunctorExpr e;
        e.op = FunctorExpr::Op::Dot;
        e.atom = b;
        e.args.push_back(expr());
        return e;
      }
      pos_ = save;
    }
    return term();
  }

  FunctorExpr term()
  {
    FunctorExpr e = factor();
    while (true) {
      FunctorExpr::Op op;
      if (peek('_'))
        op = FunctorExpr::Op::Contract;
      else if (peek('^'))
        op = FunctorExpr::Op::Extend;
      else
        return e;
      ++pos_;
      FunctorExpr n;
      n.op = op;
      n.atom = atom();
      n.args.push_back(std::move(e));
      e = std::move(n);
    }
  }

  FunctorExpr factor()
  {
    if (peek('(')) {
      ++pos_;
      FunctorExpr e = expr();
      expect(')');
      return e;
    }
    skip();
    std::size_t start = pos_;
    std::string name = identifier();
    if (name == "Phi") {
      expect('(');
      FunctorExpr e;
      e.op = FunctorExpr::Op::Phi;
      e.atom = atom();
      expect(')');
      return e;
    }
    try {
      return leaf(parse_base_name(name));
    } catch (UnknownName const &) {
      throw ParseError("unknown atom '" + name + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

FunctorExpr parse_functor(std::string_view text) { return Parser(text).parse(); }

std::string render(FunctorExpr const &e)
{
  using Op = FunctorExpr::Op;
  switch (e.op) {
  case Op::Atom: return to_string(e.atom);
  case Op::Phi: return "Phi(" + to_string(e.atom) + ")";
  case Op::Contract:
  case Op::Extend: {
    std::string inner = render(e.args[0]);
    if (e.args[0].op == Op::Dot)
      inner = "(" + inner + ")";
    return inner + (e.op == Op::Contract ? "_" : "^") + to_string(e.atom);
  }
  case Op::Dot: {
    std::string inner = render(e.args[0]);
    if (e.args[0].op == Op::Contract || e.args[0].op == Op::Extend)
      inner = "(" + inner + ")";
    return to_string(e.atom) + "." + inner;
  }
  }
  return "";
}

std::string describe(FunctorExpr const &e)
{
  using Op = FunctorExpr::Op;
  switch (e.op) {
  case Op::Atom: return to_string(e.atom);
  case Op::Phi: return "Phi(" + to_string(e.atom) + ")";
  case Op::Contract: return "contract(" + describe(e.args[0]) + "," + to_string(e.atom) + ")";
  case Op::Extend: return "caret(" + describe(e.args[0]) + "," + to_string(e.atom) + ")";
  case Op::Dot: return "dot(" + to_string(e.atom) + "," + describe(e.args[0]) + ")";
  }
  return "";
}

// ---------------------------------------------------------------------------

FunctorEvaluator::FunctorEvaluator(GroupAnalysis const &a, std::uint64_t p, FunctorOptions options)
  : a_(a), p_(p), options_(options), degenerate_(a.group()->order() % p != 0)
{
  if (!is_prime(p))
    throw NotPrime(p);
}

SubgroupSet const &FunctorEvaluator::base(BaseName name) const
{
  auto it = cache_.find(name);
  if (it == cache_.end())
    it = cache_.emplace(name, base_set(a_, p_, name, options_.e1)).first;
  return it->second;
}

SubgroupSet FunctorEvaluator::eval(FunctorExpr const &e) const
{
  using Op = FunctorExpr::Op;
  switch (e.op) {
  case Op::Atom: return base(e.atom);
  case Op::Phi: return phi(base(e.atom));
  case Op::Contract: return contract(eval(e.args[0]), base(e.atom));
  case Op::Extend:
    return options_.caret == CaretSemantics::Union ? extend(eval(e.args[0]), base(e.atom))
                                                   : contract(eval(e.args[0]), base(e.atom));
  case Op::Dot: return contract(base(e.atom), eval(e.args[0]));
  }
  return {};
}

// ---------------------------------------------------------------------------

SubId QuotientAnalysis::image(GroupAnalysis const &a, SubId h) const
{
  return analysis->id_of(quotient.map.image(a.handle(h)));
}

QuotientAnalysis analyse_quotient(GroupAnalysis const &a, SubId normal)
{
  if (!a.lattice().is_normal(normal))
    throw NotNormal("quotient by a subgroup that is not normal");
  Quotient q = quotient_group(a.group(), a.handle(normal));
  auto qa = GroupAnalysis::compute(q.group);
  return {std::move(qa), std::move(q), normal};
}

TransportResult transport_to_quotient(SubgroupSet const &y, QuotientAnalysis const &q)
{
  TransportResult r;
  r.set.ambient = q.analysis.get();
  r.set.level = y.level;
  r.set.degenerate = y.degenerate;
  for (SubId h : y.members) {
    if (!y.ambient->is_subgroup(q.kernel, h)) {
      ++r.dropped;
      continue;
    }
    r.set.members.push_back(q.image(*y.ambient, h));
  }
  std::sort(r.set.members.begin(), r.set.members.end());
  r.set.members.erase(std::unique(r.set.members.begin(), r.set.members.end()), r.set.members.end());
  return r;
}

QuotientFormCheck quotient_form_check(GroupAnalysis const &a, QuotientAnalysis const &q, std::uint64_t p,
                                      BaseName name, E1Variant e1)
{
  auto moved = transport_to_quotient(base_set(a, p, name, e1), q);
  auto direct = base_set(*q.analysis, p, name, e1);
  return {name, moved.set.members == direct.members, moved.set.size(), direct.size()};
}

// ---------------------------------------------------------------------------

std::string to_string(Outcome o)
{
  switch (o) {
  case Outcome::VacuousHolds: return "VacuousHolds";
  case Outcome::NonVacuous: return "NonVacuous";
  case Outcome::Violation: return "Violation";
  }
  return "?";
}

namespace {

std::string violation_witness(ClassEvaluator const &ce, ClassId const &target)
{
  auto const &l = ce.analysis().lattice();
  if (!target.is_raw() || target.kind == ClassKind::Solvable) {
    std::string w = "factors outside the class:";
    for (auto const &t : ce.factors(ce.whole()))
      if (!t.abelian && !(target.is_raw() ? false : target.allowlist.allows(t)))
        w += " " + to_string(t);
    return w;
  }
  auto m = ce.membership(ce.whole(), target);
  for (auto const &ev : m.evidence)
    if (!ev.satisfied)
      return "maximal subgroup " + std::to_string(ev.maximal) + " of order " + std::to_string(l.order(ev.maximal)) +
             " and index " + std::to_string(ev.index);
  return "";
}

} // namespace

TheoremVerdict generating_check(FunctorEvaluator const &fe, std::string const &group, FunctorExpr const &pipeline,
                                ClassId const &target)
{
  TheoremVerdict v;
  v.group = group;
  v.p = fe.prime();
  v.pipeline = render(pipeline);
  v.target = target.name();
  v.degenerate = fe.degenerate();
  SubgroupSet s = fe.eval(pipeline);
  v.set_size = s.size();
  if (!s.empty()) {
    v.outcome = Outcome::NonVacuous;
    return v;
  }
  ClassEvaluator ce(fe.analysis());
  if (ce.member(target)) {
    v.outcome = Outcome::VacuousHolds;
  } else {
    v.outcome = Outcome::Violation;
    v.witness = violation_witness(ce, target);
  }
  return v;
}

std::vector<RegisteredPipeline> const &registered_pipelines()
{
  static std::vector<RegisteredPipeline> const all{
    {"T51", "Phi(X)_L1", ClassKind::F1},
    {"C52", "Phi(X)_L2", ClassKind::F1},
    {"T53", "Pci.(Phi(X)_L1^E1)", ClassKind::Fdoubleprime},
    {"T54", "Pc.(Phi(X)_L2)", ClassKind::J},
    {"L55", "Phi(X)_L1_S", ClassKind::F2},
    {"C56", "Phi(X)_L2_S", ClassKind::F2},
    {"T57", "Pci.(Phi(X)_L1_S^E1)", ClassKind::Fdoubleprime},
    {"C58", "Pci.((Phi(X)_L2^E1)_S)", ClassKind::Fprime},
  };
  return all;
}

RegisteredPipeline const &registered_pipeline(std::string_view id)
{
  for (auto const &r : registered_pipelines())
    if (r.id == id)
      return r;
  throw UnknownName("unknown pipeline '" + std::string(id) + "'");
}

std::vector<EmptinessTransport> emptiness_transport(FunctorEvaluator const &fe, FunctorExpr const &pipeline,
                                                    std::vector<QuotientAnalysis> const &quotients)
{
  std::vector<EmptinessTransport> out;
  if (!fe.eval(pipeline).empty())
    return out;
  for (auto const &q : quotients) {
    FunctorEvaluator qe(*q.analysis, fe.prime(), fe.options());
    out.push_back({q.kernel, fe.analysis().lattice().order(q.kernel), qe.eval(pipeline).empty()});
  }
  return out;
}

// ---------------------------------------------------------------------------

AntihomExample antihom_example(int id)
{
  if (id == 1)
    return {1, "Phi(X)_L1", "Phi(X)_L1_S", ClassKind::F1, ClassKind::F2};
  if (id == 2)
    return {2, "Phi(X)_L1", "Pci.(Phi(X)_L1^E1)", ClassKind::F1, ClassKind::Fdoubleprime};
  throw UnknownName("unknown example " + std::to_string(id));
}

AntihomReport antihom_check(FunctorEvaluator const &fe, int example, ClassId const &ga, ClassId const &gb)
{
  AntihomExample ex = antihom_example(example);
  AntihomReport r;
  r.example = example;
  SubgroupSet a = fe.eval(ex.a);
  SubgroupSet b = fe.eval(ex.b);
  r.a_size = a.size();
  r.b_size = b.size();
  r.b_subset_a = b.subset_of(a);
  r.meet_is_b = contract(a, b) == b;
  r.join_is_a = extend(a, b) == a;

  ClassEvaluator ce(fe.analysis());
  r.member_ga = ce.member(ga);
  r.member_gb = ce.member(gb);
  r.member_meet = class_meet_membership(ce, ce.whole(), ga, gb);
  try {
    r.member_product = class_join_membership(ce, ga, gb);
  } catch (NonUniqueMinimal const &) {
    r.product_defined = false;
  }
  r.join_identity = r.product_defined && r.member_gb == r.member_product;
  r.meet_identity = r.member_ga == r.member_meet;
  return r;
}

} // namespace maxsub
