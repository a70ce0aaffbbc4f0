#pragma once

#include <map>
#include <string>
#include <vector>

#include "maxsub/classes.hpp"
#include "maxsub/config.hpp"
#include "maxsub/corpus.hpp"
#include "maxsub/report.hpp"

namespace maxsub {

/// Corpus, analyses and configuration shared by the suites of one run.
class SuiteContext {
 public:
  SuiteContext(std::vector<CorpusEntry> corpus, std::string corpus_id, HarnessConfig config);

  std::vector<CorpusEntry> const &corpus() const { return corpus_; }
  std::string const &corpus_id() const { return corpus_id_; }
  HarnessConfig const &config() const { return config_; }
  AnalysisStore &store() { return store_; }

  /// Analyses parallel to corpus(), computed on first use.
  std::vector<AnalysisPtr> const &analyses();

  /// Primes dividing |G| followed by the configured degenerate primes that
  /// do not; the flag marks the degenerate ones.
  std::vector<std::pair<std::uint64_t, bool>> primes(GroupAnalysis const &a) const;

  /// Allowlist for the hat reading of a raw class at p: scanned over the
  /// corpus, or the configured explicit list.
  Allowlist const &allowlist(ClassKind kind, std::uint64_t p);
  ClassId hat(ClassKind kind, std::uint64_t p);
  std::string allowlist_provenance() const;

 private:
  std::vector<CorpusEntry> corpus_;
  std::string corpus_id_;
  HarnessConfig config_;
  AnalysisStore store_;
  std::vector<AnalysisPtr> analyses_;
  std::map<std::pair<ClassKind, std::uint64_t>, Allowlist> allowlists_;
};

std::vector<std::string> const &suite_ids();

/// Throws UnknownName for an unregistered id.
VerificationReport run_suite(std::string const &id, SuiteContext &ctx);

/// tables 1..4 merged into one report.
VerificationReport run_tables(std::vector<int> const &ids, SuiteContext &ctx);

} // namespace maxsub
