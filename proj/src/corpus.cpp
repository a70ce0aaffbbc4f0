#include "maxsub/corpus.hpp"

#include <fstream>
#include <sstream>

#include "maxsub/errors.hpp"
#include "maxsub/named.hpp"

namespace maxsub {

namespace {

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string slurp(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::uint64_t parse_count(std::string const &v, std::string const &what, std::size_t line)
{
  try {
    std::size_t used = 0;
    auto n = std::stoull(v, &used);
    if (used != v.size())
      throw std::invalid_argument(v);
    return n;
  } catch (std::exception const &) {
    throw ConfigError("line " + std::to_string(line) + ": bad " + what + " '" + v + "'");
  }
}

} // namespace

GroupRecord parse_group_file(std::string const &text)
{
  GroupRecord r;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto s = trim(raw);
    if (s.empty() || s[0] == '#')
      continue;
    auto sp = s.find_first_of(" \t");
    std::string key = s.substr(0, sp);
    std::string value = sp == std::string::npos ? std::string() : trim(s.substr(sp));
    if (key == "name")
      r.name = value;
    else if (key == "degree")
      r.degree = static_cast<std::size_t>(parse_count(value, "degree", line));
    else if (key == "gen")
      r.generators.push_back(value);
    else if (key == "order")
      r.expected_order = parse_count(value, "order", line);
    else if (key == "tag")
      r.tags.insert(value);
    else
      throw ConfigError("line " + std::to_string(line) + ": unknown directive '" + key + "'");
  }
  if (r.name.empty())
    throw ConfigError("group file has no name");
  if (r.degree == 0)
    throw ConfigError("group file " + r.name + " has no degree");
  if (r.generators.empty())
    throw ConfigError("group file " + r.name + " has no generators");
  return r;
}

GroupRecord read_group_file(std::filesystem::path const &path) { return parse_group_file(slurp(path)); }

GroupPtr build(GroupRecord const &r)
{
  std::vector<Permutation> gens;
  for (auto const &g : r.generators) {
    try {
      gens.push_back(Permutation::parse(g, r.degree));
    } catch (ParseError const &e) {
      throw ConfigError(r.name + ": generator '" + g + "': " + e.what());
    }
  }
  auto g = std::make_shared<const Group>(std::move(gens));
  if (r.expected_order && *r.expected_order != g->order())
    throw ConfigError(r.name + ": expected order " + std::to_string(*r.expected_order) + ", generated " +
                      std::to_string(g->order()));
  return g;
}

std::vector<CorpusEntry> parse_manifest(std::string const &text, std::filesystem::path const &base)
{
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto s = trim(raw);
    if (s.empty() || s[0] == '#')
      continue;
    auto sp = s.find_first_of(" \t");
    std::string key = s.substr(0, sp);
    std::string value = sp == std::string::npos ? std::string() : trim(s.substr(sp));
    if (value.empty())
      throw ConfigError("manifest line " + std::to_string(line) + ": missing value");
    if (key == "file") {
      auto r = read_group_file(base / value);
      out.push_back({r.name, build(r), r.tags});
    } else if (key == "named") {
      try {
        out.push_back({canonical_spec(value), named_group(value), {}});
      } catch (UnknownName const &e) {
        throw ConfigError("manifest line " + std::to_string(line) + ": " + e.what());
      }
    } else {
      throw ConfigError("manifest line " + std::to_string(line) + ": unknown directive '" + key + "'");
    }
  }
  return out;
}

std::vector<CorpusEntry> read_manifest(std::filesystem::path const &path)
{
  return parse_manifest(slurp(path), path.parent_path());
}

std::vector<std::string> const &default_corpus_specs()
{
  static std::vector<std::string> const specs = [] {
    std::vector<std::string> s;
    for (int n = 2; n <= 7; ++n)
      s.push_back("sym(" + std::to_string(n) + ")");
    for (int n = 3; n <= 7; ++n)
      s.push_back("alt(" + std::to_string(n) + ")");
    for (int n = 2; n <= 8; ++n)
      s.push_back("cyclic(" + std::to_string(n) + ")");
    for (int m = 4; m <= 16; m += 2)
      s.push_back("dihedral(" + std::to_string(m) + ")");
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
      s.push_back("psl2(" + std::to_string(q) + ")");
    s.push_back("mathieu11");
    for (char const *p : {"product(alt(5),cyclic(2))", "product(alt(5),cyclic(3))", "product(alt(5),sym(3))",
                          "product(sym(5),cyclic(2))", "product(alt(5),alt(4))", "product(alt(5),sym(4))",
                          "product(sym(5),sym(3))", "product(psl2(7),cyclic(2))", "product(psl2(7),cyclic(3))",
                          "product(psl2(7),sym(3))", "product(alt(6),cyclic(2))", "product(alt(6),cyclic(3))",
                          "product(psl2(8),cyclic(2))", "product(psl2(11),cyclic(2))",
                          "product(dihedral(10),alt(5))", "product(cyclic(5),alt(5))", "product(dihedral(8),sym(3))",
                          "product(sym(3),sym(3))", "product(sym(4),cyclic(2))", "product(sym(4),sym(3))",
                          "product(alt(4),cyclic(3))", "product(cyclic(2),cyclic(2))",
                          "product(cyclic(3),cyclic(3))", "product(sym(3),cyclic(3))", "product(alt(4),alt(4))"})
      s.push_back(p);
    return s;
  }();
  return specs;
}

std::vector<CorpusEntry> default_corpus()
{
  std::vector<CorpusEntry> out;
  for (auto const &s : default_corpus_specs())
    out.push_back({canonical_spec(s), named_group(s), {}});
  return out;
}

CorpusEntry resolve_group(std::string const &name_or_path)
{
  try {
    return {canonical_spec(name_or_path), named_group(name_or_path), {}};
  } catch (UnknownName const &) {
    std::filesystem::path p(name_or_path);
    if (!std::filesystem::exists(p))
      throw;
    auto r = read_group_file(p);
    return {r.name, build(r), r.tags};
  }
}

AnalysisStore::AnalysisStore(LatticeCache cache, LatticeOptions options)
  : cache_(std::move(cache)), options_(options)
{
}

AnalysisPtr AnalysisStore::get(GroupPtr const &g)
{
  auto key = g->key();
  {
    std::lock_guard lock(mutex_);
    if (auto it = by_key_.find(key); it != by_key_.end())
      return it->second;
  }
  auto a = analyse_cached(g, cache_, options_);
  std::lock_guard lock(mutex_);
  return by_key_.emplace(key, a).first->second;
}

} // namespace maxsub
