#include "maxsub/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace maxsub {

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::VacuousHolds: return "VacuousHolds";
  case Verdict::NonVacuous: return "NonVacuous";
  case Verdict::Violation: return "Violation";
  case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

VerdictCounts VerificationReport::counts() const
{
  VerdictCounts c;
  for (auto const &i : items)
    switch (i.verdict) {
    case Verdict::VacuousHolds: ++c.vacuous_holds; break;
    case Verdict::NonVacuous: ++c.non_vacuous; break;
    case Verdict::Violation: ++c.violation; break;
    case Verdict::Degenerate: ++c.degenerate; break;
    }
  return c;
}

void VerificationReport::add(std::string group, std::uint64_t p, std::string check, Verdict v, std::string detail)
{
  items.push_back({std::move(group), p, std::move(check), v, std::move(detail)});
}

void VerificationReport::note(std::string topic, std::string text)
{
  findings.push_back({std::move(topic), std::move(text)});
}

Verdict classify(bool holds, bool vacuous, bool degenerate)
{
  if (!holds)
    return Verdict::Violation;
  if (degenerate)
    return Verdict::Degenerate;
  return vacuous ? Verdict::VacuousHolds : Verdict::NonVacuous;
}

namespace {

std::string seconds_text(double s)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

void render_table(std::ostringstream &out, ReportTable const &t)
{
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t i = 0; i < t.header.size(); ++i)
    width[i] = t.header[i].size();
  for (auto const &row : t.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  auto line = [&](std::vector<std::string> const &cells) {
    out << " ";
    for (std::size_t i = 0; i < width.size(); ++i) {
      std::string c = i < cells.size() ? cells[i] : "";
      out << " " << c << std::string(width[i] - c.size(), ' ');
    }
    out << "\n";
  };
  out << t.title << "\n";
  line(t.header);
  for (auto const &row : t.rows)
    line(row);
}

} // namespace

std::string render_text(VerificationReport const &r, bool include_timing)
{
  std::ostringstream out;
  out << "suite: " << r.suite << "\n";
  if (!r.config.empty()) {
    out << "config:";
    for (auto const &[k, v] : r.config.items())
      out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    out << "\n";
  }
  for (auto const &t : r.tables) {
    out << "\n";
    render_table(out, t);
  }
  std::vector<ReportItem const *> shown;
  for (auto const &i : r.items)
    if (i.verdict == Verdict::Violation)
      shown.push_back(&i);
  if (!shown.empty()) {
    out << "\nviolations:\n";
    for (auto const *i : shown) {
      out << "  " << i->group;
      if (i->p)
        out << " p=" << i->p;
      out << " " << i->check;
      if (!i->detail.empty())
        out << ": " << i->detail;
      out << "\n";
    }
  }
  if (!r.findings.empty()) {
    out << "\nfindings:\n";
    for (auto const &f : r.findings)
      out << "  [" << f.topic << "] " << f.text << "\n";
  }
  auto c = r.counts();
  out << "\ncounts: VacuousHolds=" << c.vacuous_holds << " NonVacuous=" << c.non_vacuous
      << " Violation=" << c.violation << " Degenerate=" << c.degenerate << " total=" << c.total() << "\n";
  out << "result: " << (c.violation ? "FAIL" : "PASS") << "\n";
  if (include_timing)
    out << "time: " << seconds_text(r.seconds) << " s\n";
  return out.str();
}

nlohmann::ordered_json report_json(VerificationReport const &r)
{
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["config"] = r.config;
  auto c = r.counts();
  j["counts"] = {{"VacuousHolds", c.vacuous_holds},
                 {"NonVacuous", c.non_vacuous},
                 {"Violation", c.violation},
                 {"Degenerate", c.degenerate},
                 {"total", c.total()}};
  auto items = nlohmann::ordered_json::array();
  for (auto const &i : r.items) {
    nlohmann::ordered_json e;
    e["group"] = i.group;
    if (i.p)
      e["p"] = i.p;
    e["check"] = i.check;
    e["verdict"] = to_string(i.verdict);
    if (!i.detail.empty())
      e["detail"] = i.detail;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  auto findings = nlohmann::ordered_json::array();
  for (auto const &f : r.findings)
    findings.push_back({{"topic", f.topic}, {"text", f.text}});
  j["findings"] = std::move(findings);
  auto tables = nlohmann::ordered_json::array();
  for (auto const &t : r.tables)
    tables.push_back({{"title", t.title}, {"header", t.header}, {"rows", t.rows}});
  j["tables"] = std::move(tables);
  return j;
}

std::string render_json(VerificationReport const &r, bool include_timing)
{
  nlohmann::ordered_json j;
  j["report"] = report_json(r);
  if (include_timing)
    j["timing"] = {{"seconds", r.seconds}};
  return j.dump(2) + "\n";
}

} // namespace maxsub
