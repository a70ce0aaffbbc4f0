#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxsub/functors.hpp"

namespace maxsub {

enum class SemanticsMode { Intersection, Union, Both };

std::string to_string(SemanticsMode m);
SemanticsMode parse_semantics_mode(std::string const &s);

struct HarnessConfig {
  SemanticsMode semantics = SemanticsMode::Intersection;
  E1Variant e1 = E1Variant::NotPowerOfP;
  bool e1_compare = false; // also run the other E1 reading and report the diff
  std::vector<std::uint64_t> degenerate_primes{2, 3, 5, 7, 11, 13, 17};
  bool cache = true;
  std::string cache_dir; // empty: LatticeCache::default_dir()
  std::uint64_t lattice_bound = kDefaultLatticeBound;
  std::uint64_t lemma_order_limit = 2000;
  std::uint64_t oracle_order_limit = 200;
  int jordan_holder_seeds = 10;
  std::string allowlist_policy = "scan"; // scan | explicit
  std::vector<std::uint64_t> allowlist;  // orders of simple groups, for explicit
  std::string format = "text";           // text | json
  std::string corpus;                    // manifest path; empty: default corpus

  nlohmann::ordered_json to_json() const;
};

/// Overlays the keys present in j onto c. Unknown keys and bad values throw
/// ConfigError.
void apply_config(HarnessConfig &c, nlohmann::json const &j);
void apply_config_file(HarnessConfig &c, std::filesystem::path const &path);

} // namespace maxsub
