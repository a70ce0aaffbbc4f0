#include "maxsub/tables.hpp"

#include <chrono>

#include "expected_tables_data.hpp"
#include "maxsub/arith.hpp"
#include "maxsub/classes.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/named.hpp"

namespace maxsub {

using nlohmann::json;

std::string_view expected_tables_source() { return kExpectedTablesJson; }

std::vector<ExpectedTable> parse_expected_tables(std::string_view json_text)
{
  std::vector<ExpectedTable> out;
  try {
    json doc = json::parse(json_text);
    for (auto const &t : doc.at("tables")) {
      ExpectedTable e;
      e.id = t.at("id").get<int>();
      e.caption = t.at("caption").get<std::string>();
      for (auto const &s : t.at("sections")) {
        ExpectedSection sec;
        sec.group = s.at("group").get<std::string>();
        sec.label = s.at("label").get<std::string>();
        if (!s.at("p").is_null())
          sec.p = s.at("p").get<std::uint64_t>();
        sec.complete = s.at("complete").get<bool>();
        for (auto const &r : s.at("rows")) {
          ExpectedRow row;
          row.structure = r.at("structure").get<std::string>();
          row.order = r.at("order").get<std::uint64_t>();
          row.order_source = r.at("order_source").get<std::string>();
          if (r.contains("index"))
            row.index = r.at("index").get<std::uint64_t>();
          if (r.contains("prime_power"))
            row.prime_power = r.at("prime_power").get<bool>();
          if (r.contains("solvable"))
            row.solvable = r.at("solvable").get<bool>();
          if (r.contains("p_solvable"))
            row.p_solvable = r.at("p_solvable").get<bool>();
          row.cite = r.at("cite").get<std::string>();
          sec.rows.push_back(std::move(row));
        }
        e.sections.push_back(std::move(sec));
      }
      out.push_back(std::move(e));
    }
  } catch (json::exception const &e) {
    throw ConfigError(std::string("expected tables: ") + e.what());
  }
  return out;
}

std::vector<ExpectedTable> const &expected_tables()
{
  static std::vector<ExpectedTable> const t = parse_expected_tables(expected_tables_source());
  return t;
}

ExpectedTable const &expected_table(int id)
{
  for (auto const &t : expected_tables())
    if (t.id == id)
      return t;
  throw UnknownName("no table " + std::to_string(id));
}

namespace {

std::string flag(bool v) { return v ? "T" : "F"; }

struct ComputedClass {
  SubId rep = 0;
  std::uint64_t order = 0;
  std::uint64_t index = 0;
  std::size_t conjugates = 0;
  bool prime_power = false;
  bool solvable = false;
  std::optional<bool> p_solvable;
};

std::vector<ComputedClass> computed_classes(GroupAnalysis const &a, std::optional<std::uint64_t> p)
{
  ClassEvaluator e(a);
  auto const &l = a.lattice();
  std::vector<ComputedClass> out;
  for (ClassIdx c : l.maximal_classes) {
    ComputedClass k;
    k.rep = l.classes[c].rep();
    k.order = l.classes[c].order;
    k.index = l.group_order / k.order;
    k.conjugates = l.classes[c].size();
    k.prime_power = is_prime_power(k.index);
    k.solvable = e.solvable(e.subgroup(k.rep));
    if (p)
      k.p_solvable = e.p_solvable(e.subgroup(k.rep), *p);
    out.push_back(k);
  }
  return out;
}

} // namespace

VerificationReport reproduce_table(int id, AnalysisStore &store, HarnessConfig const &config)
{
  auto start = std::chrono::steady_clock::now();
  ExpectedTable const &t = expected_table(id);
  VerificationReport r;
  r.suite = "table" + std::to_string(id);
  r.config = {{"caption", t.caption}};
  (void)config;
  for (auto const &sec : t.sections) {
    auto g = named_group(sec.group);
    auto a = store.get(g);
    auto computed = computed_classes(*a, sec.p);
    std::string where = "table" + std::to_string(id) + "/" + sec.label;

    ReportTable listing;
    listing.title = "Table " + std::to_string(id) + ": maximal subgroups of " + sec.label + " (order " +
                    std::to_string(g->order()) + (sec.p ? ", p=" + std::to_string(*sec.p) : std::string()) + ")";
    listing.header = {"order", "index", "conjugates", "prime power index", "solvable"};
    if (sec.p)
      listing.header.push_back("p-solvable");
    listing.header.push_back("expected");
    std::vector<bool> matched(computed.size(), false);

    for (auto const &row : sec.rows) {
      std::vector<std::size_t> hits;
      for (std::size_t i = 0; i < computed.size(); ++i)
        if (computed[i].order == row.order) {
          hits.push_back(i);
          matched[i] = true;
        }
      std::string cell = where + "/" + row.structure;
      if (hits.empty()) {
        r.add(sec.group, sec.p.value_or(0), cell + "/order", Verdict::Violation,
              "no maximal class of order " + std::to_string(row.order) + " (" + row.cite + ")");
        continue;
      }
      std::string n = hits.size() == 1 ? "" : " (" + std::to_string(hits.size()) + " classes)";
      r.add(sec.group, sec.p.value_or(0), cell + "/order", Verdict::NonVacuous,
            std::to_string(row.order) + n);
      auto compare = [&](std::string const &col, auto expected, auto computed_of, auto show) {
        bool ok = true;
        std::string got;
        for (auto i : hits) {
          auto v = computed_of(computed[i]);
          ok = ok && v == expected;
          if (got.empty())
            got = show(v);
          else if (show(v) != got)
            got += "/" + show(v);
        }
        std::string detail = "expected " + show(expected) + ", computed " + got;
        if (!ok)
          detail += " (" + row.cite + ")";
        r.add(sec.group, sec.p.value_or(0), cell + "/" + col, ok ? Verdict::NonVacuous : Verdict::Violation,
              detail);
      };
      auto show_flag = [](bool v) { return flag(v); };
      auto show_num = [](std::uint64_t v) { return std::to_string(v); };
      if (row.index)
        compare("index", *row.index, [](ComputedClass const &c) { return c.index; }, show_num);
      if (row.prime_power)
        compare("prime_power", *row.prime_power, [](ComputedClass const &c) { return c.prime_power; }, show_flag);
      if (row.solvable)
        compare("solvable", *row.solvable, [](ComputedClass const &c) { return c.solvable; }, show_flag);
      if (row.p_solvable)
        compare("p_solvable", *row.p_solvable, [](ComputedClass const &c) { return c.p_solvable.value_or(false); },
                show_flag);
    }
    for (std::size_t i = 0; i < computed.size(); ++i) {
      auto const &c = computed[i];
      if (sec.complete && !matched[i])
        r.add(sec.group, sec.p.value_or(0), where + "/unlisted", Verdict::Violation,
              "computed maximal class of order " + std::to_string(c.order) + " is not in the table");
      if (!sec.complete && !matched[i])
        r.note(where, "maximal class of order " + std::to_string(c.order) + " and index " + std::to_string(c.index) +
                        " is not listed; the table shows a subset");
      std::vector<std::string> cells{std::to_string(c.order), std::to_string(c.index),
                                     std::to_string(c.conjugates),
                                     flag(c.prime_power) + "(" + std::to_string(c.index) + ")", flag(c.solvable)};
      if (sec.p)
        cells.push_back(flag(c.p_solvable.value_or(false)));
      cells.push_back(matched[i] ? "listed" : "-");
      listing.rows.push_back(std::move(cells));
    }
    r.tables.push_back(std::move(listing));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace maxsub
