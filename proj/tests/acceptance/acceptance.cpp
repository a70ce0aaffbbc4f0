#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "maxsub/audits.hpp"
#include "maxsub/cache.hpp"
#include "maxsub/corpus.hpp"
#include "maxsub/named.hpp"
#include "maxsub/suites.hpp"
#include "maxsub/tables.hpp"

using namespace maxsub;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void verdict(int id, std::string const &title, bool pass, std::string const &detail)
{
  failures += !pass;
  std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << title << ": " << detail << std::endl;
}

std::string violations_text(VerificationReport const &r, std::size_t limit = 3)
{
  std::string out;
  std::size_t n = 0;
  for (auto const &i : r.items)
    if (i.verdict == Verdict::Violation && n++ < limit)
      out += "; " + i.group + (i.p ? " p=" + std::to_string(i.p) : "") + " " + i.check + " " + i.detail;
  return out;
}

std::string counts_text(VerificationReport const &r)
{
  auto c = r.counts();
  std::ostringstream out;
  out << c.total() << " items, " << c.violation << " violations (" << c.vacuous_holds << " vacuous, "
      << c.non_vacuous << " non-vacuous, " << c.degenerate << " degenerate)";
  return out.str();
}

bool has_finding(VerificationReport const &r, std::string const &topic)
{
  for (auto const &f : r.findings)
    if (f.topic == topic)
      return true;
  return false;
}

std::size_t count_checks(VerificationReport const &r, std::string const &check)
{
  std::size_t n = 0;
  for (auto const &i : r.items)
    n += i.check == check;
  return n;
}

/// Everything but the configuration echo, which records the cache setting.
std::string results(VerificationReport const &r)
{
  auto j = report_json(r);
  j.erase("config");
  return j.dump();
}

HarnessConfig uncached()
{
  HarnessConfig c;
  c.cache = false;
  return c;
}

} // namespace

int main()
{
  auto corpus = default_corpus();
  HarnessConfig config = uncached();
  config.semantics = SemanticsMode::Both;
  SuiteContext ctx(corpus, "default", config);

  {
    auto t = Clock::now();
    auto r = run_tables({1, 2, 3, 4}, ctx);
    double s = since(t);
    auto c = r.counts();
    std::ostringstream d;
    d << c.total() - c.violation << "/" << c.total() << " cells match in " << s << " s" << violations_text(r);
    verdict(1, "table reproduction", c.violation == 0 && s <= 600, d.str());
  }
  {
    auto r = run_suite("examples", ctx);
    verdict(2, "example claims", r.counts().violation == 0 && r.items.size() == 6,
            counts_text(r) + violations_text(r));
  }
  {
    auto r = run_suite("theorems", ctx);
    bool diff = has_finding(r, "union") && !r.tables.empty();
    verdict(3, "theorem matrix", r.counts().violation == 0 && diff,
            counts_text(r) + (diff ? ", union diff emitted" : ", union diff missing") + violations_text(r));
  }
  std::size_t lemma_groups = 0, oracle_groups = 0;
  for (auto const &e : corpus) {
    lemma_groups += e.group->order() <= config.lemma_order_limit;
    oracle_groups += e.group->order() <= config.oracle_order_limit;
  }
  {
    auto r = run_suite("core-solvability", ctx);
    bool all = count_checks(r, "core-solvability/max2") == lemma_groups &&
               count_checks(r, "core-solvability/strict") == lemma_groups;
    verdict(4, "core-solvability criterion", r.counts().violation == 0 && all,
            std::to_string(lemma_groups) + " groups, " + counts_text(r) + violations_text(r));
  }
  {
    auto r = run_suite("x-hn", ctx);
    verdict(5, "X=HN lemma", r.counts().violation == 0 && r.items.size() == lemma_groups,
            std::to_string(lemma_groups) + " groups, " + counts_text(r) + violations_text(r));
  }
  {
    auto r = run_suite("l-index", ctx);
    auto a = ctx.store().get(psl2(7));
    bool self = false;
    for (auto const &i : l_index_instances(*a))
      self = self || (i.l == a->lattice().whole() && std::min(i.index_m, i.index_n) == 7 &&
                      std::max(i.index_m, i.index_n) == 8 && i.consistent());
    verdict(6, "L-index scan", r.counts().violation == 0 && self,
            counts_text(r) + (self ? ", PSL(2,7) self-instance (indices 7, 8) detected and consistent"
                                   : ", PSL(2,7) self-instance not detected") +
                violations_text(r));
  }
  {
    auto r = run_suite("inclusion", ctx);
    verdict(7, "inclusion chain", r.counts().violation == 0, counts_text(r) + violations_text(r));
  }
  {
    auto r = run_suite("oracle", ctx);
    bool coverage = count_checks(r, "oracle/classes") == oracle_groups &&
                    count_checks(r, "oracle/jordan-holder") == corpus.size();
    verdict(8, "oracle equivalence", r.counts().violation == 0 && coverage,
            std::to_string(oracle_groups) + " groups by closure, " + std::to_string(corpus.size()) +
                " by Jordan-Holder, " + counts_text(r) + violations_text(r));
  }
  {
    auto r = run_suite("antihom", ctx);
    std::size_t identities = 0;
    for (auto const &i : r.items)
      identities += i.check.ends_with("/join") || i.check.ends_with("/meet");
    verdict(9, "anti-homomorphism", r.counts().violation == 0 && identities > 0,
            counts_text(r) + ", " + std::to_string(identities) + " identity checks" + violations_text(r));
  }
  {
    bool ok = true;
    std::string detail;
    std::vector<std::string> ids{"theorems", "inclusion", "antihom", "l-index"};
    SuiteContext again(corpus, "default", config);
    for (auto const &id : ids) {
      auto a = render_json(run_suite(id, ctx), false);
      auto b = render_json(run_suite(id, again), false);
      if (a != b) {
        ok = false;
        detail += " " + id + " differs between runs;";
      }
    }
    auto t1 = render_text(run_tables({1, 2, 3, 4}, ctx), false);
    auto t2 = render_text(run_tables({1, 2, 3, 4}, again), false);
    if (t1 != t2) {
      ok = false;
      detail += " tables differ between runs;";
    }

    auto dir = std::filesystem::temp_directory_path() / ("maxsub-acceptance-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    HarnessConfig cached = config;
    cached.cache = true;
    cached.cache_dir = dir.string();
    SuiteContext cold(corpus, "default", cached);
    SuiteContext warm(corpus, "default", cached);
    cold.analyses();
    for (auto const &id : ids) {
      auto on = results(run_suite(id, cold));
      if (on != results(run_suite(id, warm)) || on != results(run_suite(id, ctx))) {
        ok = false;
        detail += " " + id + " differs with the cache;";
      }
    }
    for (auto const &a : warm.analyses()) {
      auto fresh = GroupAnalysis::compute(a->group());
      if (!(fresh->lattice() == a->lattice())) {
        ok = false;
        detail += " restored lattice differs;";
        break;
      }
    }

    LatticeCache cache(dir / "m11");
    auto m11 = mathieu11();
    auto t = Clock::now();
    auto a = analyse_cached(m11, cache);
    double cold_s = since(t);
    t = Clock::now();
    auto b = analyse_cached(m11, cache);
    double warm_s = since(t);
    bool same = a->lattice() == b->lattice();
    double speedup = cold_s / std::max(warm_s, 1e-9);
    std::filesystem::remove_all(dir);
    std::ostringstream d;
    d << "reports byte-identical across runs and with cache on/off" << (ok ? "" : " NO:" + detail)
      << "; M11 cold " << cold_s << " s, warm " << warm_s << " s, speedup " << speedup << "x";
    verdict(10, "determinism and cache", ok && same && speedup >= 10, d.str());
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all passed")
            << std::endl;
  return failures ? 1 : 0;
}
