#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxsub/config.hpp"
#include "maxsub/corpus.hpp"
#include "maxsub/report.hpp"

namespace maxsub {

struct ExpectedRow {
  std::string structure; // informational, never compared
  std::uint64_t order = 0;
  std::string order_source; // "table" or "label"
  std::optional<std::uint64_t> index;
  std::optional<bool> prime_power;
  std::optional<bool> solvable;
  std::optional<bool> p_solvable;
  std::string cite;
};

struct ExpectedSection {
  std::string group; // named constructor spec
  std::string label;
  std::optional<std::uint64_t> p;
  bool complete = true; // rows list every maximal class
  std::vector<ExpectedRow> rows;
};

struct ExpectedTable {
  int id = 0;
  std::string caption;
  std::vector<ExpectedSection> sections;
};

/// The transcribed tables embedded at build time.
std::string_view expected_tables_source();
std::vector<ExpectedTable> parse_expected_tables(std::string_view json_text);
std::vector<ExpectedTable> const &expected_tables();
/// Throws UnknownName for ids outside 1..4.
ExpectedTable const &expected_table(int id);

/// Compares every transcribed cell against the computed maximal classes of
/// the context group. One item per cell; unlisted classes of a complete
/// table are violations.
VerificationReport reproduce_table(int id, AnalysisStore &store, HarnessConfig const &config);

} // namespace maxsub
