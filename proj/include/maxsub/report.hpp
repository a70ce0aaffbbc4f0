#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace maxsub {

enum class Verdict { VacuousHolds, NonVacuous, Violation, Degenerate };

std::string to_string(Verdict v);

struct ReportItem {
  std::string group;
  std::uint64_t p = 0; // 0 when the check has no prime
  std::string check;
  Verdict verdict = Verdict::NonVacuous;
  std::string detail;
};

/// Informational output: findings that are reported but never counted.
struct Finding {
  std::string topic;
  std::string text;
};

/// A titled table printed verbatim in both renderings.
struct ReportTable {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct VerdictCounts {
  std::size_t vacuous_holds = 0;
  std::size_t non_vacuous = 0;
  std::size_t violation = 0;
  std::size_t degenerate = 0;

  std::size_t total() const { return vacuous_holds + non_vacuous + violation + degenerate; }
};

/**
 * Result of one suite. Everything except `seconds` is a function of the
 * corpus and configuration; renderings keep timing outside the compared
 * region (the last line of text, the "timing" member of JSON).
 */
struct VerificationReport {
  std::string suite;
  nlohmann::ordered_json config;
  std::vector<ReportItem> items;
  std::vector<Finding> findings;
  std::vector<ReportTable> tables;
  double seconds = 0;

  VerdictCounts counts() const;
  bool has_violation() const { return counts().violation > 0; }
  void add(std::string group, std::uint64_t p, std::string check, Verdict v, std::string detail = {});
  void note(std::string topic, std::string text);
};

/// Violation dominates, then the degenerate flag, then vacuity.
Verdict classify(bool holds, bool vacuous, bool degenerate);

std::string render_text(VerificationReport const &r, bool include_timing = true);
nlohmann::ordered_json report_json(VerificationReport const &r);
/// {"report": ..., "timing": {"seconds": ...}}
std::string render_json(VerificationReport const &r, bool include_timing = true);

} // namespace maxsub
