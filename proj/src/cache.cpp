#include "maxsub/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "maxsub/errors.hpp"

namespace maxsub {

using nlohmann::json;

namespace {

json factor_json(SimpleTypeId const &t) { return json::array({t.abelian, t.order}); }

SimpleTypeId factor_from(json const &j)
{
  bool abelian = j.at(0).get<bool>();
  auto order = j.at(1).get<std::uint64_t>();
  return abelian ? SimpleTypeId::cyclic(order) : SimpleTypeId::nonabelian(order);
}

std::uint64_t fnv1a(std::string const &s)
{
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace

std::vector<std::uint8_t> encode_snapshot(LatticeSnapshot const &s)
{
  json j;
  j["version"] = kLatticeAlgorithmVersion;
  j["key"] = s.key;
  j["group_order"] = s.group_order;
  json classes = json::array();
  for (auto const &c : s.classes) {
    json f = json::array();
    for (auto const &t : c.factors)
      f.push_back(factor_json(t));
    classes.push_back({{"order", c.order}, {"members", c.members}, {"core", c.core}, {"solvable", c.solvable},
                       {"factors", f}});
  }
  j["classes"] = std::move(classes);
  json subs = json::array();
  for (auto const &r : s.subgroups)
    subs.push_back(json::array({r.cls, r.conjugator, r.generators}));
  j["subgroups"] = std::move(subs);
  j["contains"] = s.contains;
  j["maximal_classes"] = s.maximal_classes;
  j["max"] = s.max;
  j["max_of"] = s.max_of;
  j["max2"] = s.max2;
  json over = json::array();
  for (auto const &row : s.max2_over) {
    json r = json::array();
    for (auto const &o : row)
      r.push_back(json::array({o.maximal, o.covers}));
    over.push_back(std::move(r));
  }
  j["max2_over"] = std::move(over);
  j["frattini"] = s.frattini;
  return json::to_cbor(j);
}

LatticeSnapshot decode_snapshot(std::vector<std::uint8_t> const &bytes)
{
  try {
    json j = json::from_cbor(bytes);
    if (j.at("version").get<int>() != kLatticeAlgorithmVersion)
      throw Error("snapshot written by another algorithm version");
    LatticeSnapshot s;
    s.key = j.at("key").get<std::string>();
    s.group_order = j.at("group_order").get<std::uint64_t>();
    for (auto const &c : j.at("classes")) {
      SubgroupClass k;
      k.order = c.at("order").get<std::uint64_t>();
      k.members = c.at("members").get<std::vector<SubId>>();
      k.core = c.at("core").get<SubId>();
      k.solvable = c.at("solvable").get<bool>();
      for (auto const &f : c.at("factors"))
        k.factors.push_back(factor_from(f));
      s.classes.push_back(std::move(k));
    }
    for (auto const &r : j.at("subgroups"))
      s.subgroups.push_back({r.at(0).get<ClassIdx>(), r.at(2).get<std::vector<Elem>>(), r.at(1).get<Elem>()});
    s.contains = j.at("contains").get<std::vector<std::vector<std::uint64_t>>>();
    s.maximal_classes = j.at("maximal_classes").get<std::vector<ClassIdx>>();
    s.max = j.at("max").get<std::vector<SubId>>();
    s.max_of = j.at("max_of").get<std::vector<std::vector<SubId>>>();
    s.max2 = j.at("max2").get<std::vector<SubId>>();
    for (auto const &row : j.at("max2_over")) {
      std::vector<Overgroup> r;
      for (auto const &o : row)
        r.push_back({o.at(0).get<SubId>(), o.at(1).get<bool>()});
      s.max2_over.push_back(std::move(r));
    }
    s.frattini = j.at("frattini").get<SubId>();
    return s;
  } catch (json::exception const &e) {
    throw Error(std::string("malformed lattice snapshot: ") + e.what());
  }
}

std::string cache_entry_name(std::string const &group_key, int version)
{
  std::ostringstream out;
  out << "v" << version << "-" << std::hex << std::setw(16) << std::setfill('0')
      << fnv1a(group_key + "#" + std::to_string(version)) << ".cbor";
  return out.str();
}

LatticeCache::LatticeCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path LatticeCache::default_dir()
{
  if (char const *d = std::getenv("MAXSUB_CACHE_DIR"); d && *d)
    return d;
  if (char const *x = std::getenv("XDG_CACHE_HOME"); x && *x)
    return std::filesystem::path(x) / "maxsub";
  if (char const *h = std::getenv("HOME"); h && *h)
    return std::filesystem::path(h) / ".cache" / "maxsub";
  return std::filesystem::temp_directory_path() / "maxsub-cache";
}

std::optional<LatticeSnapshot> LatticeCache::load(std::string const &group_key) const
{
  if (!enabled())
    return std::nullopt;
  std::ifstream in(dir_ / cache_entry_name(group_key), std::ios::binary);
  if (!in)
    return std::nullopt;
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    LatticeSnapshot s = decode_snapshot(bytes);
    if (s.key != group_key)
      return std::nullopt;
    return s;
  } catch (Error const &) {
    return std::nullopt;
  }
}

void LatticeCache::store(LatticeSnapshot const &s) const
{
  if (!enabled())
    return;
  std::filesystem::create_directories(dir_);
  auto target = dir_ / cache_entry_name(s.key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    auto bytes = encode_snapshot(s);
    out.write(reinterpret_cast<char const *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
      return;
  }
  std::filesystem::rename(tmp, target);
}

CacheStats LatticeCache::stats() const
{
  CacheStats st;
  if (!enabled() || !std::filesystem::exists(dir_))
    return st;
  for (auto const &e : std::filesystem::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".cbor") {
      ++st.entries;
      st.bytes += e.file_size();
    }
  return st;
}

std::size_t LatticeCache::clear() const
{
  std::size_t n = 0;
  if (!enabled() || !std::filesystem::exists(dir_))
    return n;
  for (auto const &e : std::filesystem::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".cbor") {
      std::filesystem::remove(e.path());
      ++n;
    }
  return n;
}

AnalysisPtr analyse_cached(GroupPtr g, LatticeCache const &cache, LatticeOptions const &options)
{
  if (g->order() > options.bound)
    throw BoundExceeded("group order " + std::to_string(g->order()) + " exceeds the lattice bound " +
                        std::to_string(options.bound));
  if (auto s = cache.load(g->key()))
    return GroupAnalysis::restore(std::move(g), std::move(*s));
  auto a = GroupAnalysis::compute(std::move(g), options);
  cache.store(a->lattice());
  return a;
}

} // namespace maxsub
