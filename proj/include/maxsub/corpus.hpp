#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maxsub/cache.hpp"
#include "maxsub/lattice.hpp"

namespace maxsub {

/// One group of a corpus, from a group file or a named constructor.
struct GroupRecord {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators; // cycle notation
  std::optional<std::uint64_t> expected_order;
  std::set<std::string> tags;
};

/**
 * Group file, one directive per line:
 *   name <string>
 *   degree <n>
 *   gen <cycles>        (repeatable)
 *   order <n>           (optional)
 *   tag <string>        (repeatable)
 * Blank lines and lines starting with '#' are ignored. Throws ConfigError.
 */
GroupRecord parse_group_file(std::string const &text);
GroupRecord read_group_file(std::filesystem::path const &path);

/// Builds the group and checks the expected order. Throws ConfigError.
GroupPtr build(GroupRecord const &r);

struct CorpusEntry {
  std::string name;
  GroupPtr group;
  std::set<std::string> tags;
};

/**
 * Manifest, one entry per line:
 *   file <path>         group file, relative to the manifest
 *   named <spec>        named constructor
 * Blank lines and '#' comments are ignored. Throws ConfigError.
 */
std::vector<CorpusEntry> parse_manifest(std::string const &text, std::filesystem::path const &base = {});
std::vector<CorpusEntry> read_manifest(std::filesystem::path const &path);

/// Named specs of the default corpus.
std::vector<std::string> const &default_corpus_specs();
std::vector<CorpusEntry> default_corpus();

/// A group named by a constructor spec or a group file path.
CorpusEntry resolve_group(std::string const &name_or_path);

/// Analyses of corpus groups, computed once and shared.
class AnalysisStore {
 public:
  explicit AnalysisStore(LatticeCache cache = {}, LatticeOptions options = {});

  AnalysisPtr get(GroupPtr const &g);
  LatticeCache const &cache() const { return cache_; }
  LatticeOptions const &options() const { return options_; }

 private:
  LatticeCache cache_;
  LatticeOptions options_;
  std::mutex mutex_;
  std::map<std::string, AnalysisPtr> by_key_;
};

} // namespace maxsub
