#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxsub/arith.hpp"
#include "maxsub/cache.hpp"
#include "maxsub/classes.hpp"
#include "maxsub/config.hpp"
#include "maxsub/corpus.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/functors.hpp"
#include "maxsub/structure.hpp"
#include "maxsub/suites.hpp"
#include "maxsub/tables.hpp"

using namespace maxsub;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string config_file;
  std::string format = "text";
  bool no_cache = false;
  std::string cache_dir;
  std::string corpus;
  std::string semantics;
  std::string e1;
  std::uint64_t bound = 0;
};

HarnessConfig make_config(Options const &o)
{
  HarnessConfig c;
  c.format = o.format;
  if (o.no_cache)
    c.cache = false;
  if (!o.cache_dir.empty())
    c.cache_dir = o.cache_dir;
  if (!o.corpus.empty())
    c.corpus = o.corpus;
  if (!o.semantics.empty())
    c.semantics = parse_semantics_mode(o.semantics);
  if (!o.e1.empty()) {
    try {
      c.e1 = parse_e1_variant(o.e1);
    } catch (Error const &e) {
      throw ConfigError(e.what());
    }
  }
  if (o.bound)
    c.lattice_bound = o.bound;
  if (!o.config_file.empty())
    apply_config_file(c, o.config_file);
  return c;
}

LatticeCache cache_of(HarnessConfig const &c)
{
  if (!c.cache)
    return {};
  return LatticeCache(c.cache_dir.empty() ? LatticeCache::default_dir() : std::filesystem::path(c.cache_dir));
}

SuiteContext make_context(HarnessConfig const &c)
{
  if (c.corpus.empty())
    return SuiteContext(default_corpus(), "default", c);
  std::filesystem::path p(c.corpus);
  return SuiteContext(read_manifest(p), p.stem().string(), c);
}

AnalysisPtr analyse(CorpusEntry const &e, HarnessConfig const &c)
{
  LatticeOptions o;
  o.bound = c.lattice_bound;
  return analyse_cached(e.group, cache_of(c), o);
}

std::string flag(bool v) { return v ? "T" : "F"; }

std::string factors_text(std::vector<SimpleTypeId> const &f)
{
  std::map<std::string, int> count;
  for (auto const &t : f)
    ++count[to_string(t)];
  std::string out;
  for (auto const &[k, n] : count)
    out += (out.empty() ? "" : ", ") + k + (n > 1 ? "^" + std::to_string(n) : "");
  return out.empty() ? "none" : out;
}

void emit(HarnessConfig const &c, ordered_json const &j, std::string const &text)
{
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_info(std::string const &name, HarnessConfig const &c)
{
  auto e = resolve_group(name);
  auto a = analyse(e, c);
  auto const &l = a->lattice();
  auto const &g = *a->group();
  ordered_json j;
  j["name"] = e.name;
  j["degree"] = g.degree();
  j["order"] = g.order();
  std::vector<std::string> gens;
  for (auto const &x : g.generators())
    gens.push_back(x.to_cycles());
  j["generators"] = gens;
  j["subgroups"] = l.subgroup_count();
  j["subgroup_classes"] = l.classes.size();
  j["maximal_classes"] = l.maximal_classes.size();
  j["maximal"] = l.max.size();
  j["second_maximal"] = l.max2.size();
  j["strictly_second_maximal"] = l.strict_second_maximal().size();
  j["frattini_order"] = l.order(l.frattini);
  j["solvable"] = l.classes[0].solvable;
  j["composition_factors"] = factors_text(l.classes[0].factors);
  std::ostringstream out;
  out << e.name << "\n  degree " << g.degree() << ", order " << g.order() << "\n";
  for (auto const &s : gens)
    out << "  gen " << s << "\n";
  out << "  subgroups " << l.subgroup_count() << " in " << l.classes.size() << " classes\n"
      << "  maximal " << l.max.size() << " in " << l.maximal_classes.size() << " classes\n"
      << "  second maximal " << l.max2.size() << ", strictly " << j["strictly_second_maximal"] << "\n"
      << "  Frattini order " << l.order(l.frattini) << "\n"
      << "  solvable " << flag(l.classes[0].solvable) << "\n"
      << "  composition factors " << j["composition_factors"].get<std::string>() << "\n";
  emit(c, j, out.str());
  return kExitPass;
}

int cmd_max(std::string const &name, std::uint64_t p, HarnessConfig const &c)
{
  auto e = resolve_group(name);
  auto a = analyse(e, c);
  auto const &l = a->lattice();
  ClassEvaluator ce(*a);
  ordered_json rows = ordered_json::array();
  std::ostringstream out;
  out << "maximal subgroups of " << e.name << " (order " << l.group_order << ")\n";
  out << "  order  index  conjugates  core  solvable  prime-power-index"
      << (p ? "  " + std::to_string(p) + "-solvable" : std::string()) << "\n";
  for (ClassIdx k : l.maximal_classes) {
    auto const &cls = l.classes[k];
    SubId m = cls.rep();
    bool solv = ce.solvable(ce.subgroup(m));
    bool pp = is_prime_power(l.index(m));
    ordered_json r{{"order", cls.order}, {"index", l.index(m)}, {"conjugates", cls.size()},
                   {"core_order", l.order(cls.core)}, {"solvable", solv}, {"prime_power_index", pp}};
    out << "  " << cls.order << "  " << l.index(m) << "  " << cls.size() << "  " << l.order(cls.core) << "  "
        << flag(solv) << "  " << flag(pp) << "(" << l.index(m) << ")";
    if (p) {
      bool ps = ce.p_solvable(ce.subgroup(m), p);
      r["p_solvable"] = ps;
      out << "  " << flag(ps);
    }
    out << "\n";
    rows.push_back(std::move(r));
  }
  emit(c, {{"group", e.name}, {"order", l.group_order}, {"maximal_classes", rows}}, out.str());
  return kExitPass;
}

int cmd_max2(std::string const &name, bool strict, HarnessConfig const &c)
{
  auto e = resolve_group(name);
  auto a = analyse(e, c);
  auto const &l = a->lattice();
  std::map<ClassIdx, std::pair<std::size_t, std::size_t>> by_class; // count, overgroups of the first member
  for (SubId h : l.max2) {
    if (strict && !l.is_strict_second_maximal(h))
      continue;
    auto &slot = by_class[l.class_of(h)];
    if (slot.first++ == 0)
      slot.second = l.overgroups(h).size();
  }
  ordered_json rows = ordered_json::array();
  std::ostringstream out;
  std::size_t total = 0;
  out << (strict ? "strictly second maximal" : "second maximal") << " subgroups of " << e.name << "\n";
  out << "  order  members  maximal-overgroups\n";
  for (auto const &[k, v] : by_class) {
    total += v.first;
    rows.push_back({{"order", l.classes[k].order}, {"members", v.first}, {"maximal_overgroups", v.second}});
    out << "  " << l.classes[k].order << "  " << v.first << "  " << v.second << "\n";
  }
  out << "  total " << total << "\n";
  emit(c, {{"group", e.name}, {"strict", strict}, {"total", total}, {"classes", rows}}, out.str());
  return kExitPass;
}

ClassId class_of(std::string const &id, std::uint64_t p)
{
  ClassKind k = parse_class_kind(id);
  if (k == ClassKind::Solvable)
    return ClassId::solvable();
  if (kind_takes_prime(k) && p == 0)
    throw ConfigError("class " + id + " needs --p");
  return ClassId::raw(k, kind_takes_prime(k) ? p : 0);
}

int cmd_classify(std::string const &name, std::string const &cls, std::uint64_t p, bool hat, HarnessConfig const &c)
{
  auto e = resolve_group(name);
  ClassId id = class_of(cls, p);
  if (hat) {
    auto ctx = make_context(c);
    id = ctx.hat(id.kind, p);
  }
  auto a = analyse(e, c);
  ClassEvaluator ce(*a);
  auto m = ce.membership(ce.whole(), id);
  auto const &l = a->lattice();
  ordered_json ev = ordered_json::array();
  std::ostringstream out;
  out << e.name << " in " << id.name() << ": " << (m.member ? "yes" : "no") << "\n";
  if (!id.is_raw())
    out << "  allowlist " << id.allowlist.provenance << ", composition factors "
        << factors_text(l.classes[0].factors) << "\n";
  for (auto const &x : m.evidence) {
    ordered_json r{{"order", x.order},
                   {"index", x.index},
                   {"prime_power_index", x.index_prime.has_value()},
                   {"solvable", x.solvable},
                   {"p_solvable", x.p_solvable},
                   {"minimal_non_solvable", x.minimal_non_solvable},
                   {"minimal_non_p_solvable", x.minimal_non_p_solvable},
                   {"satisfied", x.satisfied}};
    out << "  M order " << x.order << " index " << x.index << ": solvable " << flag(x.solvable) << ", p-solvable "
        << flag(x.p_solvable) << ", minimal non-solvable " << flag(x.minimal_non_solvable)
        << ", minimal non-p-solvable " << flag(x.minimal_non_p_solvable) << ", prime power index "
        << flag(x.index_prime.has_value()) << " -> " << (x.satisfied ? "ok" : "fails") << "\n";
    ev.push_back(std::move(r));
  }
  emit(c, {{"group", e.name}, {"class", id.name()}, {"member", m.member}, {"evidence", ev}}, out.str());
  return kExitPass;
}

int cmd_functor(std::string const &expr, std::string const &name, std::uint64_t p, std::string const &caret,
                HarnessConfig const &c)
{
  if (!is_prime(p))
    throw NotPrime(p);
  auto e = resolve_group(name);
  auto a = analyse(e, c);
  FunctorOptions o;
  o.caret = caret.empty() ? CaretSemantics::Intersection : parse_caret(caret);
  o.e1 = c.e1;
  auto tree = parse_functor(expr);
  FunctorEvaluator fe(*a, p, o);
  auto s = fe.eval(tree);
  auto const &l = a->lattice();
  std::map<std::uint64_t, std::size_t> orders;
  for (SubId h : s.members)
    ++orders[l.order(h)];
  ordered_json by_order = ordered_json::object();
  for (auto const &[k, v] : orders)
    by_order[std::to_string(k)] = v;
  std::ostringstream out;
  out << render(tree) << " on " << e.name << " with p=" << p << " (" << to_string(o.caret) << ")\n"
      << "  tree " << describe(tree) << "\n"
      << "  level " << to_string(s.level) << ", size " << s.size() << (s.degenerate ? ", degenerate prime" : "")
      << "\n";
  for (auto const &[k, v] : orders)
    out << "  order " << k << ": " << v << "\n";
  emit(c,
       {{"expr", render(tree)},
        {"tree", describe(tree)},
        {"group", e.name},
        {"p", p},
        {"caret", to_string(o.caret)},
        {"level", to_string(s.level)},
        {"size", s.size()},
        {"degenerate", s.degenerate},
        {"members", s.members},
        {"by_order", by_order}},
       out.str());
  return kExitPass;
}

int emit_report(VerificationReport const &r, HarnessConfig const &c)
{
  std::cout << (c.format == "json" ? render_json(r) : render_text(r));
  return r.has_violation() ? kExitViolation : kExitPass;
}

int cmd_tables(std::vector<int> ids, HarnessConfig const &c)
{
  if (ids.empty())
    ids = {1, 2, 3, 4};
  auto ctx = make_context(c);
  return emit_report(run_tables(ids, ctx), c);
}

int cmd_verify(std::string const &suite, HarnessConfig const &c)
{
  auto ctx = make_context(c);
  if (suite != "all")
    return emit_report(run_suite(suite, ctx), c);
  int status = kExitPass;
  bool first = true;
  for (auto const &id : suite_ids()) {
    if (!first && c.format != "json")
      std::cout << "\n";
    first = false;
    if (emit_report(run_suite(id, ctx), c) != kExitPass)
      status = kExitViolation;
  }
  return status;
}

int cmd_scan(std::string const &cls, std::uint64_t p, HarnessConfig const &c)
{
  ClassId base = class_of(cls, p);
  auto ctx = make_context(c);
  auto s = allowlist_scan(ctx.analyses(), base, ctx.corpus_id());
  std::vector<std::string> types;
  for (auto const &t : s.types)
    types.push_back(to_string(t));
  std::ostringstream out;
  out << "allowlist for " << base.name() << " (" << s.provenance << "):";
  for (auto const &t : types)
    out << " " << t;
  out << (types.empty() ? " none\n" : "\n");
  emit(c, {{"class", base.name()}, {"provenance", s.provenance}, {"types", types}}, out.str());
  return kExitPass;
}

int cmd_cache(std::string const &action, HarnessConfig const &c)
{
  HarnessConfig on = c;
  on.cache = true;
  auto cache = cache_of(on);
  if (action == "clear") {
    auto n = cache.clear();
    emit(c, {{"dir", cache.dir().string()}, {"removed", n}},
         "removed " + std::to_string(n) + " entries from " + cache.dir().string() + "\n");
    return kExitPass;
  }
  auto st = cache.stats();
  emit(c, {{"dir", cache.dir().string()}, {"entries", st.entries}, {"bytes", st.bytes}},
       cache.dir().string() + ": " + std::to_string(st.entries) + " entries, " + std::to_string(st.bytes) +
           " bytes\n");
  return kExitPass;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Maximal subgroup lattices, generalized solvable classes and subgroup-set functors"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_file, "JSON config; its keys override command-line flags");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-cache", o.no_cache, "Disable the lattice cache");
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (default: $MAXSUB_CACHE_DIR or ~/.cache/maxsub)");
  app.add_option("--bound", o.bound, "Largest group order to enumerate");
  app.add_option("--e1", o.e1, "E1 reading")->check(CLI::IsMember({"not-power-of-p", "not-prime-power"}));

  std::string group, cls, expr, caret, suite, action;
  std::uint64_t p = 0;
  bool strict = false, hat = false;
  std::vector<int> table_ids;

  auto *info = app.add_subcommand("info", "Order, generators and lattice summary");
  info->add_option("group", group, "Named constructor or group file")->required();
  auto *max = app.add_subcommand("max", "Maximal subgroup classes");
  max->add_option("group", group)->required();
  max->add_option("--p", p, "Also report p-solvability");
  auto *max2 = app.add_subcommand("max2", "Second maximal subgroups by class");
  max2->add_option("group", group)->required();
  max2->add_flag("--strict", strict, "Only strictly second maximal subgroups");
  auto *classify = app.add_subcommand("classify", "Class membership with per-maximal evidence");
  classify->add_option("group", group)->required();
  classify->add_option("--class", cls, "Solvable, F1, F2, Jpr, J, Fprime, Fdoubleprime")->required();
  classify->add_option("--p", p, "Prime parameter");
  classify->add_flag("--hat", hat, "Use the extension formation over the corpus-scanned allowlist");
  auto *functor = app.add_subcommand("functor", "Functor pipelines");
  functor->require_subcommand(1);
  auto *eval = functor->add_subcommand("eval", "Evaluate a pipeline on a group");
  eval->add_option("expr", expr, "Pipeline, e.g. \"Pci.(Phi(X)_L1^E1)\"")->required();
  eval->add_option("group", group)->required();
  eval->add_option("--p", p, "Prime")->required();
  eval->add_option("--caret", caret, "Semantics of ^")->check(CLI::IsMember({"union", "intersection"}));
  auto *tables = app.add_subcommand("tables", "Reproduce the transcribed tables");
  tables->add_option("ids", table_ids, "Table ids 1..4")->check(CLI::Range(1, 4));
  auto *verify = app.add_subcommand("verify", "Run a verification suite over a corpus");
  verify->add_option("--suite", suite, "Suite id or 'all'")->required();
  verify->add_option("--corpus", o.corpus, "Corpus manifest (default: built-in corpus)");
  verify->add_option("--semantics", o.semantics, "Semantics of ^")
    ->check(CLI::IsMember({"intersection", "union", "both"}));
  auto *scan = app.add_subcommand("scan-allowlist", "Collect nonabelian factors of corpus groups in a class");
  scan->add_option("--class", cls)->required();
  scan->add_option("--p", p, "Prime parameter");
  scan->add_option("--corpus", o.corpus, "Corpus manifest");
  auto *cache = app.add_subcommand("cache", "Lattice cache maintenance");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"clear", "stats"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    HarnessConfig c = make_config(o);
    if (*info)
      return cmd_info(group, c);
    if (*max)
      return cmd_max(group, p, c);
    if (*max2)
      return cmd_max2(group, strict, c);
    if (*classify)
      return cmd_classify(group, cls, p, hat, c);
    if (*eval)
      return cmd_functor(expr, group, p, caret, c);
    if (*tables)
      return cmd_tables(table_ids, c);
    if (*verify) {
      if (suite != "all" && std::find(suite_ids().begin(), suite_ids().end(), suite) == suite_ids().end())
        throw UnknownName("unknown suite '" + suite + "'");
      return cmd_verify(suite, c);
    }
    if (*scan)
      return cmd_scan(cls, p, c);
    if (*cache)
      return cmd_cache(action, c);
  } catch (BoundExceeded const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
