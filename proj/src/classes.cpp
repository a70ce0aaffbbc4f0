#include "maxsub/classes.hpp"

#include <algorithm>
#include <cctype>

#include "maxsub/arith.hpp"
#include "maxsub/errors.hpp"

namespace maxsub {

ClassId ClassId::raw(ClassKind kind, std::uint64_t p)
{
  if (kind == ClassKind::F1Set || kind == ClassKind::Hat)
    throw Error("raw class expected");
  ClassId c;
  c.kind = kind;
  if (kind_takes_prime(kind)) {
    if (!is_prime(p))
      throw NotPrime(p);
    c.p = p;
  }
  return c;
}

ClassId ClassId::f1_set(Allowlist s)
{
  ClassId c;
  c.kind = ClassKind::F1Set;
  c.allowlist = std::move(s);
  return c;
}

ClassId ClassId::hat(ClassKind base, std::uint64_t p, Allowlist s)
{
  ClassId c = raw(base, p);
  c.base = base;
  c.kind = ClassKind::Hat;
  c.allowlist = std::move(s);
  return c;
}

std::string kind_name(ClassKind k)
{
  switch (k) {
  case ClassKind::Solvable: return "Solvable";
  case ClassKind::F1: return "F1";
  case ClassKind::F2: return "F2";
  case ClassKind::Jpr: return "Jpr";
  case ClassKind::J: return "J";
  case ClassKind::Fprime: return "Fprime";
  case ClassKind::Fdoubleprime: return "Fdoubleprime";
  case ClassKind::F1Set: return "F1Set";
  case ClassKind::Hat: return "Hat";
  }
  return "?";
}

bool kind_takes_prime(ClassKind k)
{
  return k == ClassKind::F1 || k == ClassKind::F2 || k == ClassKind::J || k == ClassKind::Fprime ||
         k == ClassKind::Fdoubleprime;
}

ClassKind parse_class_kind(std::string const &s)
{
  std::string l;
  for (char c : s)
    l.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (auto k : {ClassKind::Solvable, ClassKind::F1, ClassKind::F2, ClassKind::Jpr, ClassKind::J,
                 ClassKind::Fprime, ClassKind::Fdoubleprime}) {
    std::string n = kind_name(k);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == l)
      return k;
  }
  throw UnknownName("unknown class '" + s + "'");
}

std::string ClassId::name() const
{
  auto with_p = [&](ClassKind k) {
    std::string n = kind_name(k);
    if (kind_takes_prime(k))
      n += "(" + std::to_string(p) + ")";
    return n;
  };
  if (kind == ClassKind::Hat)
    return "Hat(" + with_p(base) + ")";
  if (kind == ClassKind::F1Set) {
    std::string n = "f1({";
    bool first = true;
    for (auto const &t : allowlist.types) {
      n += (first ? "" : ",") + t.label;
      first = false;
    }
    return n + "})";
  }
  return with_p(kind);
}

bool f1_membership(std::vector<SimpleTypeId> const &factors, Allowlist const &s)
{
  return std::all_of(factors.begin(), factors.end(), [&](SimpleTypeId const &t) { return s.allows(t); });
}

// ---------------------------------------------------------------------------

std::uint64_t ClassEvaluator::order(Section s) const
{
  auto const &l = a_.lattice();
  return l.order(s.top) / l.order(s.bottom);
}

std::vector<SimpleTypeId> ClassEvaluator::factors(Section s) const
{
  auto const &l = a_.lattice();
  return factor_difference(l.class_record(s.top).factors, l.class_record(s.bottom).factors);
}

bool ClassEvaluator::solvable(Section s) const { return factors_solvable(factors(s)); }

bool ClassEvaluator::p_solvable(Section s, std::uint64_t p) const
{
  return factors_p_solvable(factors(s), p);
}

bool ClassEvaluator::normal_in_group(SubId n) const { return a_.lattice().is_normal(n); }

std::vector<SubId> ClassEvaluator::maximal(Section s) const
{
  auto const &l = a_.lattice();
  std::vector<SubId> out;
  std::vector<ClassIdx> seen;
  bool dedupe = normal_in_group(s.bottom);
  for (SubId k : a_.maximal_subgroups_of(s.top)) {
    if (dedupe) {
      ClassIdx c = l.class_of(k);
      if (std::find(seen.begin(), seen.end(), c) != seen.end())
        continue;
      if (!a_.is_subgroup(s.bottom, k))
        continue;
      seen.push_back(c);
    } else if (!a_.is_subgroup(s.bottom, k)) {
      continue;
    }
    out.push_back(k);
  }
  return out;
}

bool ClassEvaluator::minimal_non_solvable(Section s) const
{
  if (solvable(s))
    return false;
  for (SubId k : maximal(s))
    if (!solvable({k, s.bottom}))
      return false;
  return true;
}

bool ClassEvaluator::minimal_non_p_solvable(Section s, std::uint64_t p) const
{
  if (p_solvable(s, p))
    return false;
  for (SubId k : maximal(s))
    if (!p_solvable({k, s.bottom}, p))
      return false;
  return true;
}

MaximalEvidence ClassEvaluator::evidence(Section s, SubId k, std::uint64_t p) const
{
  auto const &l = a_.lattice();
  Section sk{k, s.bottom};
  MaximalEvidence e;
  e.maximal = k;
  e.order = order(sk);
  e.index = l.order(s.top) / l.order(k);
  e.index_prime = prime_power_base(e.index);
  e.solvable = solvable(sk);
  e.minimal_non_solvable = !e.solvable && minimal_non_solvable(sk);
  if (p) {
    e.p_solvable = p_solvable(sk, p);
    e.minimal_non_p_solvable = !e.p_solvable && minimal_non_p_solvable(sk, p);
  }
  return e;
}

Membership ClassEvaluator::membership(Section s, ClassId const &c) const
{
  Membership m;
  switch (c.kind) {
  case ClassKind::Solvable:
    m.member = solvable(s);
    return m;
  case ClassKind::F1Set:
  case ClassKind::Hat:
    m.member = f1_membership(factors(s), c.allowlist);
    return m;
  default:
    break;
  }
  m.member = true;
  for (SubId k : maximal(s)) {
    MaximalEvidence e = evidence(s, k, c.p);
    bool pp = e.index_prime.has_value();
    switch (c.kind) {
    case ClassKind::F1: e.satisfied = e.p_solvable; break;
    case ClassKind::F2: e.satisfied = e.p_solvable || e.minimal_non_p_solvable; break;
    case ClassKind::Jpr: e.satisfied = e.solvable || pp; break;
    case ClassKind::J: e.satisfied = e.p_solvable || pp; break;
    case ClassKind::Fprime: e.satisfied = e.p_solvable || e.minimal_non_solvable || pp; break;
    case ClassKind::Fdoubleprime: e.satisfied = e.p_solvable || e.minimal_non_p_solvable || pp; break;
    default: break;
    }
    m.member = m.member && e.satisfied;
    m.evidence.push_back(e);
  }
  return m;
}

SubId ClassEvaluator::residual(ClassId const &c) const
{
  auto const &l = a_.lattice();
  std::vector<SubId> good;
  for (SubId n : l.normal_subgroups())
    if (member(quotient(n), c))
      good.push_back(n);
  if (good.empty())
    throw NonUniqueMinimal("no quotient lies in " + c.name());
  SubId least = good.back(); // normal subgroups are listed largest first
  for (SubId n : good)
    if (!a_.is_subgroup(least, n))
      throw NonUniqueMinimal("quotients in " + c.name() + " have no least kernel");
  return least;
}

// ---------------------------------------------------------------------------

Allowlist allowlist_scan(std::vector<AnalysisPtr> const &corpus, ClassId const &base,
                         std::string const &corpus_id)
{
  Allowlist out;
  out.provenance = "corpus-scan:" + corpus_id + ":" + base.name();
  for (auto const &a : corpus) {
    ClassEvaluator e(*a);
    if (!e.member(base))
      continue;
    for (auto const &t : e.factors(e.whole()))
      if (!t.abelian)
        out.types.insert(t);
  }
  return out;
}

namespace {

SubId normal_meet(GroupAnalysis const &a, SubId x, SubId y)
{
  auto const &l = a.lattice();
  SubId best = l.trivial();
  for (SubId n : l.normal_subgroups())
    if (a.is_subgroup(n, x) && a.is_subgroup(n, y) && l.order(n) > l.order(best))
      best = n;
  return best;
}

} // namespace

AxiomReport formation_axiom_check(ClassId const &c,
                                  std::vector<std::pair<std::string, AnalysisPtr>> const &corpus)
{
  AxiomReport r;
  r.class_name = c.name();
  bool check_extension = c.kind == ClassKind::F1Set || c.kind == ClassKind::Hat;
  for (auto const &[name, a] : corpus) {
    ++r.groups;
    ClassEvaluator e(*a);
    auto const &l = a->lattice();
    auto normals = l.normal_subgroups();
    std::vector<bool> in(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i)
      in[i] = e.member(e.quotient(normals[i]), c);
    auto pos = [&](SubId n) {
      return static_cast<std::size_t>(std::find(normals.begin(), normals.end(), n) - normals.begin());
    };
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (!in[i])
        continue;
      for (std::size_t j = 0; j < normals.size(); ++j) {
        if (i == j || !a->is_subgroup(normals[i], normals[j]))
          continue;
        ++r.checks;
        if (!in[j])
          r.violations.push_back({name, "quotient",
                                  "G/N in class but G/M not, |N|=" + std::to_string(l.order(normals[i])) +
                                    " |M|=" + std::to_string(l.order(normals[j]))});
      }
      for (std::size_t j = i + 1; j < normals.size(); ++j) {
        if (!in[j])
          continue;
        ++r.checks;
        SubId m = normal_meet(*a, normals[i], normals[j]);
        if (!in[pos(m)])
          r.violations.push_back({name, "R0",
                                  "G/N1, G/N2 in class but not G/(N1 meet N2), |N1|=" +
                                    std::to_string(l.order(normals[i])) +
                                    " |N2|=" + std::to_string(l.order(normals[j]))});
      }
    }
    if (check_extension) {
      for (std::size_t i = 0; i < normals.size(); ++i) {
        ++r.checks;
        bool n_in = f1_membership(e.factors(e.subgroup(normals[i])), c.allowlist);
        if (n_in && in[i] && !in[pos(l.trivial())])
          r.violations.push_back({name, "extension",
                                  "N and G/N in class but G not, |N|=" + std::to_string(l.order(normals[i]))});
      }
    }
  }
  return r;
}

bool class_meet_membership(ClassEvaluator const &e, Section s, ClassId const &c1, ClassId const &c2)
{
  return e.member(s, c1) && e.member(s, c2);
}

bool class_join_membership(ClassEvaluator const &e, ClassId const &c1, ClassId const &c2)
{
  SubId r = e.residual(c2);
  return e.member(e.subgroup(r), c1);
}

} // namespace maxsub
