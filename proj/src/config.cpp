#include "maxsub/config.hpp"

#include <fstream>

#include "maxsub/arith.hpp"
#include "maxsub/errors.hpp"

namespace maxsub {

using nlohmann::json;

std::string to_string(SemanticsMode m)
{
  switch (m) {
  case SemanticsMode::Intersection: return "intersection";
  case SemanticsMode::Union: return "union";
  case SemanticsMode::Both: return "both";
  }
  return "?";
}

SemanticsMode parse_semantics_mode(std::string const &s)
{
  if (s == "intersection")
    return SemanticsMode::Intersection;
  if (s == "union")
    return SemanticsMode::Union;
  if (s == "both")
    return SemanticsMode::Both;
  throw ConfigError("unknown semantics '" + s + "'");
}

nlohmann::ordered_json HarnessConfig::to_json() const
{
  nlohmann::ordered_json j;
  j["semantics"] = to_string(semantics);
  j["e1"] = to_string(e1);
  j["e1_compare"] = e1_compare;
  j["degenerate_primes"] = degenerate_primes;
  j["cache"] = cache;
  j["lattice_bound"] = lattice_bound;
  j["lemma_order_limit"] = lemma_order_limit;
  j["oracle_order_limit"] = oracle_order_limit;
  j["jordan_holder_seeds"] = jordan_holder_seeds;
  j["allowlist_policy"] = allowlist_policy;
  j["allowlist"] = allowlist;
  j["corpus"] = corpus.empty() ? "default" : corpus;
  return j;
}

namespace {

template <class T>
T get(json const &j, char const *key)
{
  try {
    return j.at(key).get<T>();
  } catch (json::exception const &) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

} // namespace

void apply_config(HarnessConfig &c, json const &j)
{
  if (!j.is_object())
    throw ConfigError("config must be a JSON object");
  for (auto const &item : j.items()) {
    auto const &key = item.key();
    if (key == "semantics")
      c.semantics = parse_semantics_mode(get<std::string>(j, "semantics"));
    else if (key == "e1") {
      try {
        c.e1 = parse_e1_variant(get<std::string>(j, "e1"));
      } catch (Error const &e) {
        throw ConfigError(e.what());
      }
    } else if (key == "e1_compare")
      c.e1_compare = get<bool>(j, "e1_compare");
    else if (key == "degenerate_primes") {
      c.degenerate_primes = get<std::vector<std::uint64_t>>(j, "degenerate_primes");
      for (auto p : c.degenerate_primes)
        if (!is_prime(p))
          throw ConfigError("degenerate_primes: " + std::to_string(p) + " is not prime");
    } else if (key == "cache")
      c.cache = get<bool>(j, "cache");
    else if (key == "cache_dir")
      c.cache_dir = get<std::string>(j, "cache_dir");
    else if (key == "lattice_bound")
      c.lattice_bound = get<std::uint64_t>(j, "lattice_bound");
    else if (key == "lemma_order_limit")
      c.lemma_order_limit = get<std::uint64_t>(j, "lemma_order_limit");
    else if (key == "oracle_order_limit")
      c.oracle_order_limit = get<std::uint64_t>(j, "oracle_order_limit");
    else if (key == "jordan_holder_seeds")
      c.jordan_holder_seeds = get<int>(j, "jordan_holder_seeds");
    else if (key == "allowlist_policy") {
      c.allowlist_policy = get<std::string>(j, "allowlist_policy");
      if (c.allowlist_policy != "scan" && c.allowlist_policy != "explicit")
        throw ConfigError("allowlist_policy must be 'scan' or 'explicit'");
    } else if (key == "allowlist")
      c.allowlist = get<std::vector<std::uint64_t>>(j, "allowlist");
    else if (key == "format") {
      c.format = get<std::string>(j, "format");
      if (c.format != "text" && c.format != "json")
        throw ConfigError("format must be 'text' or 'json'");
    } else if (key == "corpus")
      c.corpus = get<std::string>(j, "corpus");
    else
      throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_config_file(HarnessConfig &c, std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (json::exception const &e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  apply_config(c, j);
}

} // namespace maxsub
