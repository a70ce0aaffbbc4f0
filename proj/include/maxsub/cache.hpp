#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "maxsub/lattice.hpp"

namespace maxsub {

/// Encodes a snapshot as CBOR; decode throws Error on malformed input.
std::vector<std::uint8_t> encode_snapshot(LatticeSnapshot const &s);
LatticeSnapshot decode_snapshot(std::vector<std::uint8_t> const &bytes);

/// Cache file name for a group key under the current algorithm version.
std::string cache_entry_name(std::string const &group_key, int version = kLatticeAlgorithmVersion);

struct CacheStats {
  std::size_t entries = 0;
  std::uintmax_t bytes = 0;
};

/**
 * Content-addressed store of lattice snapshots. Entries whose key or
 * version do not match, or which fail to decode, are treated as misses and
 * overwritten by the next store.
 */
class LatticeCache {
 public:
  LatticeCache() = default; // disabled
  explicit LatticeCache(std::filesystem::path dir);

  /// MAXSUB_CACHE_DIR, else $XDG_CACHE_HOME/maxsub, else ~/.cache/maxsub.
  static std::filesystem::path default_dir();

  bool enabled() const { return !dir_.empty(); }
  std::filesystem::path const &dir() const { return dir_; }

  std::optional<LatticeSnapshot> load(std::string const &group_key) const;
  void store(LatticeSnapshot const &s) const;

  CacheStats stats() const;
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

/// Restores from the cache when possible, otherwise computes and stores.
AnalysisPtr analyse_cached(GroupPtr g, LatticeCache const &cache, LatticeOptions const &options = {});

} // namespace maxsub
