#include "maxsub/suites.hpp"

#include <chrono>
#include <exception>
#include <set>

#include "maxsub/arith.hpp"
#include "maxsub/audits.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/functors.hpp"
#include "maxsub/named.hpp"
#include "maxsub/tables.hpp"

namespace maxsub {

namespace {

LatticeCache make_cache(HarnessConfig const &c)
{
  if (!c.cache)
    return {};
  return LatticeCache(c.cache_dir.empty() ? LatticeCache::default_dir() : std::filesystem::path(c.cache_dir));
}

LatticeOptions make_options(HarnessConfig const &c)
{
  LatticeOptions o;
  o.bound = c.lattice_bound;
  return o;
}

std::string flag(bool v) { return v ? "T" : "F"; }

struct Fragment {
  std::vector<ReportItem> items;
  std::vector<Finding> findings;
  std::exception_ptr error;

  void add(std::string group, std::uint64_t p, std::string check, Verdict v, std::string detail = {})
  {
    items.push_back({std::move(group), p, std::move(check), v, std::move(detail)});
  }
  void note(std::string topic, std::string text) { findings.push_back({std::move(topic), std::move(text)}); }
};

/// Runs body once per corpus group in parallel and merges in corpus order.
template <class Body>
void per_group(SuiteContext &ctx, VerificationReport &r, Body body)
{
  auto const &analyses = ctx.analyses();
  std::vector<Fragment> parts(analyses.size());
  long n = static_cast<long>(analyses.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(ctx.corpus()[i], *analyses[i], parts[i]);
    } catch (...) {
      parts[i].error = std::current_exception();
    }
  }
  for (auto &f : parts) {
    if (f.error)
      std::rethrow_exception(f.error);
    for (auto &i : f.items)
      r.items.push_back(std::move(i));
    for (auto &x : f.findings)
      r.findings.push_back(std::move(x));
  }
}

std::size_t count_topic(VerificationReport const &r, std::string const &topic)
{
  std::size_t n = 0;
  for (auto const &f : r.findings)
    n += f.topic == topic;
  return n;
}

constexpr ClassKind kPrimeKinds[] = {ClassKind::F1, ClassKind::F2, ClassKind::J, ClassKind::Fprime,
                                     ClassKind::Fdoubleprime};

void prepare_allowlists(SuiteContext &ctx)
{
  std::set<std::uint64_t> primes;
  for (auto const &a : ctx.analyses())
    for (auto [p, degenerate] : ctx.primes(*a))
      primes.insert(p);
  for (auto p : primes) {
    for (auto k : kPrimeKinds)
      ctx.allowlist(k, p);
  }
  ctx.allowlist(ClassKind::Jpr, 0);
}

std::string outcome_text(TheoremVerdict const &v)
{
  if (v.outcome == Outcome::Violation)
    return "pipeline empty, not in " + v.target + ": " + v.witness;
  if (v.outcome == Outcome::VacuousHolds)
    return "pipeline empty, in " + v.target;
  return "pipeline has " + std::to_string(v.set_size) + " members";
}

Verdict verdict_of(TheoremVerdict const &v)
{
  return classify(v.outcome != Outcome::Violation, v.outcome == Outcome::VacuousHolds, v.degenerate);
}

struct DiffRow {
  std::size_t pairs = 0;
  std::size_t outcome_diffs = 0;
  std::size_t size_diffs = 0;
  std::size_t union_violations = 0;
};

ReportTable diff_table(std::string title, std::string last,
                       std::vector<std::pair<RegisteredPipeline, FunctorExpr>> const &pipelines,
                       std::map<std::string, DiffRow> const &rows)
{
  ReportTable t;
  t.title = std::move(title);
  t.header = {"pipeline", "target", "pairs", "verdict differences", "set size differences", std::move(last)};
  for (auto const &[reg, expr] : pipelines) {
    auto const &row = rows.at(reg.id);
    t.rows.push_back({reg.id + " " + reg.text, kind_name(reg.target), std::to_string(row.pairs),
                      std::to_string(row.outcome_diffs), std::to_string(row.size_diffs),
                      std::to_string(row.union_violations)});
  }
  return t;
}

// ---------------------------------------------------------------------------

VerificationReport suite_theorems(SuiteContext &ctx)
{
  VerificationReport r;
  prepare_allowlists(ctx);
  auto const &cfg = ctx.config();
  bool run_union = cfg.semantics != SemanticsMode::Intersection;
  E1Variant other_e1 = cfg.e1 == E1Variant::NotPowerOfP ? E1Variant::NotPrimePower : E1Variant::NotPowerOfP;
  std::vector<std::pair<RegisteredPipeline, FunctorExpr>> pipelines;
  std::map<std::string, DiffRow> union_rows, e1_rows;
  for (auto const &p : registered_pipelines()) {
    pipelines.emplace_back(p, parse_functor(p.text));
    union_rows[p.id];
    e1_rows[p.id];
  }

  per_group(ctx, r, [&](CorpusEntry const &e, GroupAnalysis const &a, Fragment &out) {
    std::optional<std::vector<QuotientAnalysis>> quotients;
    for (auto [p, degenerate] : ctx.primes(a)) {
      FunctorEvaluator fe(a, p, {CaretSemantics::Intersection, cfg.e1});
      for (auto const &[reg, expr] : pipelines) {
        auto raw = generating_check(fe, e.name, expr, ClassId::raw(reg.target, p));
        out.add(e.name, p, reg.id + "/raw", verdict_of(raw), outcome_text(raw));
        auto hat = generating_check(fe, e.name, expr, ctx.hat(reg.target, p));
        out.add(e.name, p, reg.id + "/hat", verdict_of(hat), outcome_text(hat));
        if (raw.set_size == 0) {
          if (!quotients) {
            quotients.emplace();
            for (SubId l : minimal_normal_subgroups(a))
              quotients->push_back(analyse_quotient(a, l));
          }
          auto moved = emptiness_transport(fe, expr, *quotients);
          bool holds = true;
          std::string detail;
          for (auto const &m : moved) {
            holds = holds && m.empty_on_quotient;
            if (!m.empty_on_quotient)
              detail += (detail.empty() ? "nonempty on G/L for |L|=" : ", ") + std::to_string(m.order);
          }
          if (detail.empty())
            detail = "empty on " + std::to_string(moved.size()) + " quotients by minimal normal subgroups";
          out.add(e.name, p, reg.id + "/transport", classify(holds, moved.empty(), degenerate), detail);
        }
        if (run_union) {
          FunctorEvaluator fu(a, p, {CaretSemantics::Union, cfg.e1});
          auto u = generating_check(fu, e.name, expr, ClassId::raw(reg.target, p));
          auto &row = union_rows[reg.id];
#pragma omp critical(union_rows)
          {
            ++row.pairs;
            row.outcome_diffs += u.outcome != raw.outcome;
            row.size_diffs += u.set_size != raw.set_size;
            row.union_violations += u.outcome == Outcome::Violation;
          }
          if (u.outcome != raw.outcome)
            out.note("union-diff", e.name + " p=" + std::to_string(p) + " " + reg.id + ": intersection " +
                                     to_string(raw.outcome) + " (" + std::to_string(raw.set_size) + "), union " +
                                     to_string(u.outcome) + " (" + std::to_string(u.set_size) + ")" +
                                     (u.outcome == Outcome::Violation ? " " + u.witness : ""));
        }
        if (cfg.e1_compare) {
          FunctorEvaluator fv(a, p, {CaretSemantics::Intersection, other_e1});
          auto v = generating_check(fv, e.name, expr, ClassId::raw(reg.target, p));
          auto &row = e1_rows[reg.id];
#pragma omp critical(e1_rows)
          {
            ++row.pairs;
            row.outcome_diffs += v.outcome != raw.outcome;
            row.size_diffs += v.set_size != raw.set_size;
            row.union_violations += v.outcome == Outcome::Violation;
          }
          if (v.outcome != raw.outcome)
            out.note("e1-diff", e.name + " p=" + std::to_string(p) + " " + reg.id + ": " + to_string(cfg.e1) + " " +
                                  to_string(raw.outcome) + " (" + std::to_string(raw.set_size) + "), " +
                                  to_string(other_e1) + " " + to_string(v.outcome) + " (" +
                                  std::to_string(v.set_size) + ")");
        }
      }
    }
  });

  if (run_union) {
    r.tables.push_back(diff_table("Caret semantics: intersection (counted) against union", "union Violation",
                                  pipelines, union_rows));
    std::size_t violations = 0;
    for (auto const &[id, row] : union_rows)
      violations += row.union_violations;
    r.note("union", std::to_string(count_topic(r, "union-diff")) + " verdict differences under union semantics, " +
                      std::to_string(violations) + " union Violations; union verdicts are not counted");
  }
  if (cfg.e1_compare) {
    r.tables.push_back(diff_table("E1 reading: " + to_string(cfg.e1) + " (counted) against " + to_string(other_e1),
                                  "other Violation", pipelines, e1_rows));
    r.note("e1", std::to_string(count_topic(r, "e1-diff")) + " verdict differences between E1 readings");
  }
  return r;
}

VerificationReport suite_inclusion(SuiteContext &ctx)
{
  VerificationReport r;
  prepare_allowlists(ctx);
  struct Edge {
    char const *name;
    ClassKind from, to;
  };
  static constexpr Edge edges[] = {
    {"S=>F1", ClassKind::Solvable, ClassKind::F1},       {"F1=>F2", ClassKind::F1, ClassKind::F2},
    {"F2=>Fdoubleprime", ClassKind::F2, ClassKind::Fdoubleprime}, {"Jpr=>J", ClassKind::Jpr, ClassKind::J},
    {"J=>Fprime", ClassKind::J, ClassKind::Fprime},      {"Fprime=>Fdoubleprime", ClassKind::Fprime, ClassKind::Fdoubleprime},
  };
  per_group(ctx, r, [&](CorpusEntry const &e, GroupAnalysis const &a, Fragment &out) {
    ClassEvaluator ce(a);
    for (auto [p, degenerate] : ctx.primes(a)) {
      auto member = [&](ClassKind k) {
        return ce.member(k == ClassKind::Solvable ? ClassId::solvable() : ClassId::raw(k, kind_takes_prime(k) ? p : 0));
      };
      for (auto const &edge : edges) {
        bool a_in = member(edge.from), b_in = member(edge.to);
        out.add(e.name, p, std::string("inclusion/") + edge.name, classify(!a_in || b_in, !a_in, degenerate),
                "premise " + flag(a_in) + ", conclusion " + flag(b_in));
      }
      if (!degenerate && member(ClassKind::F1) && !member(ClassKind::Jpr))
        out.note("diagram-edge", e.name + " p=" + std::to_string(p) + ": in F1(p) but not in Jpr");
    }
  });
  r.note("diagram", std::to_string(count_topic(r, "diagram-edge")) +
                      " (group, prime) pairs in F1(p) but not in Jpr; the F1-Jpr edge of the inclusion diagram is "
                      "reported, not counted");
  std::set<std::uint64_t> primes;
  for (auto const &a : ctx.analyses())
    for (auto [p, d] : ctx.primes(*a))
      primes.insert(p);
  auto const &jpr = ctx.allowlist(ClassKind::Jpr, 0).types;
  for (auto p : primes) {
    auto const &f1 = ctx.allowlist(ClassKind::F1, p).types;
    std::string missing;
    for (auto const &t : f1)
      if (!jpr.count(t))
        missing += " " + to_string(t);
    r.note("hat-diagram", "p=" + std::to_string(p) + ": allowlist of F1(p) " +
                            (missing.empty() ? "is inside that of Jpr" : "has outside Jpr:" + missing));
  }
  return r;
}

VerificationReport suite_examples(SuiteContext &ctx)
{
  VerificationReport r;
  auto check = [&](std::string const &spec, std::uint64_t p, std::string const &what, bool holds,
                   std::string const &detail) {
    r.add(spec, p, "example/" + what, holds ? Verdict::NonVacuous : Verdict::Violation, detail);
  };
  auto eval = [&](std::string const &spec) { return ctx.store().get(named_group(spec)); };
  {
    auto a = eval("psl2(16)");
    ClassEvaluator e(*a);
    bool j = e.member(ClassId::raw(ClassKind::J, 17)), jpr = e.member(ClassId::raw(ClassKind::Jpr, 0));
    check("psl2(16)", 17, "in J(17) not in Jpr", j && !jpr, "J " + flag(j) + ", Jpr " + flag(jpr));
  }
  {
    auto a = eval("alt(7)");
    ClassEvaluator e(*a);
    bool f = e.member(ClassId::raw(ClassKind::Fprime, 7)), j = e.member(ClassId::raw(ClassKind::J, 7));
    check("alt(7)", 7, "in Fprime(7) not in J(7)", f && !j, "Fprime " + flag(f) + ", J " + flag(j));
  }
  {
    auto a = eval("mathieu11");
    ClassEvaluator e(*a);
    bool f2 = e.member(ClassId::raw(ClassKind::Fdoubleprime, 11)), f1 = e.member(ClassId::raw(ClassKind::Fprime, 11));
    check("mathieu11", 11, "in Fdoubleprime(11) not in Fprime(11)", f2 && !f1,
          "Fdoubleprime " + flag(f2) + ", Fprime " + flag(f1));
  }
  for (std::string spec : {"alt(5)", "psl2(7)"}) {
    auto a = eval(spec);
    ClassEvaluator e(*a);
    bool m = e.minimal_non_solvable(e.whole());
    check(spec, 0, "minimal non-solvable", m, flag(m));
  }
  {
    auto a = eval("psl2(11)");
    ClassEvaluator e(*a);
    bool mp = e.minimal_non_p_solvable(e.whole(), 11), ms = e.minimal_non_solvable(e.whole());
    check("psl2(11)", 11, "minimal non-11-solvable, not minimal non-solvable", mp && !ms,
          "minimal non-11-solvable " + flag(mp) + ", minimal non-solvable " + flag(ms));
  }
  return r;
}

VerificationReport suite_core_solvability(SuiteContext &ctx)
{
  VerificationReport r;
  auto limit = ctx.config().lemma_order_limit;
  per_group(ctx, r, [&](CorpusEntry const &e, GroupAnalysis const &a, Fragment &out) {
    if (a.group()->order() > limit)
      return;
    for (bool strict : {false, true}) {
      auto c = core_solvability(a, strict);
      std::string detail = "solvable " + flag(c.solvable) + ", criterion " + flag(c.criterion) + ", " +
                           std::to_string(c.checked) + " subgroups";
      if (c.failing)
        detail += ", no core-larger overgroup for subgroup " + std::to_string(*c.failing);
      out.add(e.name, 0, strict ? "core-solvability/strict" : "core-solvability/max2",
              classify(c.agree(), c.checked == 0, false), detail);
    }
  });
  return r;
}

VerificationReport suite_x_hn(SuiteContext &ctx)
{
  VerificationReport r;
  auto limit = ctx.config().lemma_order_limit;
  per_group(ctx, r, [&](CorpusEntry const &e, GroupAnalysis const &a, Fragment &out) {
    if (a.group()->order() > limit)
      return;
    auto s = x_hn_scan(a);
    std::string detail = std::to_string(s.triples) + " triples";
    if (!s.counterexamples.empty()) {
      auto const &c = s.counterexamples.front();
      detail += ", " + std::to_string(s.counterexamples.size()) + " counterexamples, first H=" + std::to_string(c.h) +
                " X=" + std::to_string(c.x) + " N=" + std::to_string(c.n);
    }
    out.add(e.name, 0, "x-hn", classify(s.counterexamples.empty(), s.triples == 0, false), detail);
  });
  return r;
}

VerificationReport suite_l_index(SuiteContext &ctx)
{
  VerificationReport r;
  per_group(ctx, r, [&](CorpusEntry const &e, GroupAnalysis const &a, Fragment &out) {
    auto inst = l_index_instances(a);
    bool ok = true;
    std::size_t nonabelian = 0;
    std::set<std::string> seen;
    for (auto const &i : inst) {
      ok = ok && i.consistent();
      if (!i.l_abelian) {
        ++nonabelian;
        std::string text = e.name + ": minimal normal L of order " + std::to_string(i.l_order) +
                           (i.l == a.lattice().whole() ? " (L = G)" : "") + ", maximal indices " +
                           std::to_string(i.index_m) + " and " + std::to_string(i.index_n) + "; L " +
                           (i.l_psl27_power ? "is a direct power of the simple group of order 168, consistent"
                                            : "is not abelian and not a power of PSL(2,7)");
        if (seen.insert(text).second)
          out.note("l-index", text);
      }
    }
    out.add(e.name, 0, "l-index", classify(ok, inst.empty(), false),
            std::to_string(inst.size()) + " instances, " + std::to_string(nonabelian) + " with nonabelian L");
  });
  return r;
}

VerificationReport suite_antihom(SuiteContext &ctx)
{
  VerificationReport r;
  prepare_allowlists(ctx);
  auto const &cfg = ctx.config();
  per_group(ctx, r, [&](CorpusEntry const &e, GroupAnalysis const &a, Fragment &out) {
    for (auto [p, degenerate] : ctx.primes(a)) {
      FunctorEvaluator fe(a, p, {CaretSemantics::Intersection, cfg.e1});
      for (int ex : {1, 2}) {
        auto def = antihom_example(ex);
        std::string tag = "antihom/ex" + std::to_string(ex);
        auto h = antihom_check(fe, ex, ctx.hat(def.ga, p), ctx.hat(def.gb, p));
        bool sets = h.b_subset_a && h.meet_is_b && h.join_is_a;
        out.add(e.name, p, tag + "/sets", classify(sets, h.a_size == 0, degenerate),
                "|a|=" + std::to_string(h.a_size) + " |b|=" + std::to_string(h.b_size));
        out.add(e.name, p, tag + "/join", classify(h.join_identity, false, degenerate),
                "in g(b) " + flag(h.member_gb) + ", in g(a)g(b) " +
                    (h.product_defined ? flag(h.member_product) : std::string("undefined")));
        out.add(e.name, p, tag + "/meet", classify(h.meet_identity, false, degenerate),
                "in g(a) " + flag(h.member_ga) + ", in g(a) meet g(b) " + flag(h.member_meet));
        auto raw = antihom_check(fe, ex, ClassId::raw(def.ga, p), ClassId::raw(def.gb, p));
        if (!raw.join_identity || !raw.meet_identity)
          out.note("raw-reading", e.name + " p=" + std::to_string(p) + " example " + std::to_string(ex) +
                                    ": raw classes give join " + flag(raw.join_identity) + ", meet " +
                                    flag(raw.meet_identity));
      }
    }
  });
  r.note("antihom", std::to_string(count_topic(r, "raw-reading")) +
                      " (group, prime, example) cases where the raw class readings break an identity; the hat "
                      "readings are the counted ones");
  return r;
}

VerificationReport suite_formation_axioms(SuiteContext &ctx)
{
  VerificationReport r;
  prepare_allowlists(ctx);
  std::vector<std::pair<std::string, AnalysisPtr>> corpus;
  std::set<std::uint64_t> primes;
  for (std::size_t i = 0; i < ctx.corpus().size(); ++i) {
    corpus.emplace_back(ctx.corpus()[i].name, ctx.analyses()[i]);
    for (auto [p, d] : ctx.primes(*ctx.analyses()[i]))
      primes.insert(p);
  }
  std::vector<ClassId> counted{ClassId::solvable()};
  std::vector<ClassId> raw;
  for (auto p : primes)
    for (auto k : kPrimeKinds) {
      counted.push_back(ctx.hat(k, p));
      raw.push_back(ClassId::raw(k, p));
    }
  counted.push_back(ctx.hat(ClassKind::Jpr, 0));
  raw.push_back(ClassId::raw(ClassKind::Jpr, 0));
  std::vector<AxiomReport> reports(counted.size()), raw_reports(raw.size());
  long n = static_cast<long>(counted.size()), m = static_cast<long>(raw.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n + m; ++i) {
    if (i < n)
      reports[i] = formation_axiom_check(counted[i], corpus);
    else
      raw_reports[i - n] = formation_axiom_check(raw[i - n], corpus);
  }
  for (std::size_t i = 0; i < counted.size(); ++i) {
    auto const &a = reports[i];
    std::string detail = std::to_string(a.checks) + " checks";
    if (!a.violations.empty())
      detail += ", first: " + a.violations.front().group + " " + a.violations.front().axiom + " " +
                a.violations.front().detail;
    std::uint64_t p = counted[i].p;
    r.add(ctx.corpus_id(), p, "axioms/" + a.class_name, classify(a.violations.empty(), a.checks == 0, false), detail);
  }
  for (auto const &a : raw_reports)
    if (!a.violations.empty())
      r.note("raw-class", a.class_name + ": " + std::to_string(a.violations.size()) + " axiom failures, first " +
                            a.violations.front().group + " " + a.violations.front().axiom);
  return r;
}

VerificationReport suite_oracle(SuiteContext &ctx)
{
  VerificationReport r;
  auto limit = ctx.config().oracle_order_limit;
  int seeds = ctx.config().jordan_holder_seeds;
  per_group(ctx, r, [&](CorpusEntry const &e, GroupAnalysis const &a, Fragment &out) {
    if (a.group()->order() <= limit) {
      auto c = oracle_compare(a);
      out.add(e.name, 0, "oracle/classes", classify(c.agree(), false, false),
              std::to_string(c.lattice.size()) + " classes by lattice, " + std::to_string(c.brute.size()) +
                  " by closure");
    }
    auto j = jordan_holder_check(a, seeds);
    out.add(e.name, 0, "oracle/jordan-holder", classify(j.stable && j.matches_lattice, false, false),
            std::to_string(j.series) + " series, stable " + flag(j.stable) + ", matches lattice " +
                flag(j.matches_lattice));
  });
  return r;
}

} // namespace

// ---------------------------------------------------------------------------

SuiteContext::SuiteContext(std::vector<CorpusEntry> corpus, std::string corpus_id, HarnessConfig config)
  : corpus_(std::move(corpus)), corpus_id_(std::move(corpus_id)), config_(std::move(config)),
    store_(make_cache(config_), make_options(config_))
{
}

std::vector<AnalysisPtr> const &SuiteContext::analyses()
{
  if (analyses_.size() != corpus_.size()) {
    analyses_.clear();
    for (auto const &e : corpus_)
      analyses_.push_back(store_.get(e.group));
  }
  return analyses_;
}

std::vector<std::pair<std::uint64_t, bool>> SuiteContext::primes(GroupAnalysis const &a) const
{
  std::vector<std::pair<std::uint64_t, bool>> out;
  auto order = a.group()->order();
  for (auto p : prime_divisors(order))
    out.emplace_back(p, false);
  for (auto p : config_.degenerate_primes)
    if (order % p != 0)
      out.emplace_back(p, true);
  return out;
}

Allowlist const &SuiteContext::allowlist(ClassKind kind, std::uint64_t p)
{
  auto key = std::make_pair(kind, kind_takes_prime(kind) ? p : 0);
  if (auto it = allowlists_.find(key); it != allowlists_.end())
    return it->second;
  Allowlist s;
  if (config_.allowlist_policy == "explicit") {
    for (auto o : config_.allowlist)
      s.types.insert(SimpleTypeId::nonabelian(o));
    s.provenance = "explicit";
  } else {
    s = allowlist_scan(analyses(), ClassId::raw(kind, key.second), corpus_id_);
  }
  return allowlists_.emplace(key, std::move(s)).first->second;
}

ClassId SuiteContext::hat(ClassKind kind, std::uint64_t p)
{
  std::uint64_t q = kind_takes_prime(kind) ? p : 0;
  return ClassId::hat(kind, q, allowlist(kind, q));
}

std::string SuiteContext::allowlist_provenance() const
{
  return config_.allowlist_policy == "explicit" ? "explicit" : "corpus-scan:" + corpus_id_;
}

std::vector<std::string> const &suite_ids()
{
  static std::vector<std::string> const ids{"tables",  "examples",   "theorems", "inclusion",        "core-solvability",
                                            "x-hn",    "l-index",    "antihom",  "formation-axioms", "oracle"};
  return ids;
}

VerificationReport run_tables(std::vector<int> const &ids, SuiteContext &ctx)
{
  auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = "tables";
  for (int id : ids) {
    auto t = reproduce_table(id, ctx.store(), ctx.config());
    for (auto &i : t.items)
      r.items.push_back(std::move(i));
    for (auto &f : t.findings)
      r.findings.push_back(std::move(f));
    for (auto &x : t.tables)
      r.tables.push_back(std::move(x));
  }
  r.config = nlohmann::ordered_json::object();
  r.config["tables"] = ids;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport run_suite(std::string const &id, SuiteContext &ctx)
{
  auto start = std::chrono::steady_clock::now();
  if (id == "tables")
    return run_tables({1, 2, 3, 4}, ctx);
  VerificationReport r;
  if (id == "examples")
    r = suite_examples(ctx);
  else if (id == "theorems")
    r = suite_theorems(ctx);
  else if (id == "inclusion")
    r = suite_inclusion(ctx);
  else if (id == "core-solvability")
    r = suite_core_solvability(ctx);
  else if (id == "x-hn")
    r = suite_x_hn(ctx);
  else if (id == "l-index")
    r = suite_l_index(ctx);
  else if (id == "antihom")
    r = suite_antihom(ctx);
  else if (id == "formation-axioms")
    r = suite_formation_axioms(ctx);
  else if (id == "oracle")
    r = suite_oracle(ctx);
  else
    throw UnknownName("unknown suite '" + id + "'");
  r.suite = id;
  r.config = ctx.config().to_json();
  r.config["corpus_size"] = ctx.corpus().size();
  r.config["allowlist_provenance"] = ctx.allowlist_provenance();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace maxsub
