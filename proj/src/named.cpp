#include "maxsub/named.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "maxsub/arith.hpp"
#include "maxsub/errors.hpp"

namespace maxsub {

namespace {

constexpr unsigned kMaxNamedDegree = 12;

Permutation cycle_perm(std::size_t degree, std::vector<Point> points)
{
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<Point> range1(unsigned from, unsigned to)
{
  std::vector<Point> v;
  for (unsigned i = from; i <= to; ++i)
    v.push_back(i);
  return v;
}

void require_degree(unsigned n, unsigned lo, char const *name)
{
  if (n < lo || n > kMaxNamedDegree)
    throw UnknownName(std::string(name) + "(" + std::to_string(n) + ") is out of range");
}

} // namespace

GroupPtr symmetric_group(unsigned n)
{
  require_degree(n, 1, "sym");
  if (n == 1)
    return share(Group::trivial(1));
  if (n == 2)
    return share(Group({cycle_perm(2, {1, 2})}));
  return share(Group({cycle_perm(n, {1, 2}), cycle_perm(n, range1(1, n))}));
}

GroupPtr alternating_group(unsigned n)
{
  require_degree(n, 1, "alt");
  if (n < 3)
    return share(Group::trivial(n));
  std::vector<Permutation> gens;
  for (unsigned i = 3; i <= n; ++i)
    gens.push_back(cycle_perm(n, {1, 2, i}));
  return share(Group(std::move(gens)));
}

GroupPtr cyclic_group(unsigned n)
{
  require_degree(n, 1, "cyclic");
  if (n == 1)
    return share(Group::trivial(1));
  return share(Group({cycle_perm(n, range1(1, n))}));
}

GroupPtr dihedral_group(unsigned order)
{
  if (order < 4 || order % 2 || order / 2 > kMaxNamedDegree)
    throw UnknownName("dihedral(" + std::to_string(order) + ") is out of range");
  unsigned n = order / 2;
  if (n == 2)
    return share(Group({Permutation::parse("(1 2)(3 4)", 4), Permutation::parse("(1 3)(2 4)", 4)}));
  std::vector<std::vector<Point>> refl;
  for (unsigned i = 1; i < n + 1 - i; ++i)
    refl.push_back({i, n + 1 - i});
  return share(Group({cycle_perm(n, range1(1, n)), Permutation::from_cycles(n, refl)}));
}

GaloisField::GaloisField(unsigned q) : q_(q)
{
  auto base = prime_power_base(q);
  if (!base)
    throw UnknownName("field size " + std::to_string(q) + " is not a prime power");
  p_ = static_cast<unsigned>(*base);
  k_ = static_cast<unsigned>(prime_factors(q).size());
  // Search for a monic degree-k polynomial making x primitive; elements are
  // base-p digit vectors, multiplication by x shifts and reduces.
  for (unsigned tail = 0; tail < q_; ++tail) {
    auto times_x = [&](unsigned a) {
      std::vector<unsigned> d(k_ + 1, 0);
      unsigned t = a;
      for (unsigned i = 0; i < k_; ++i, t /= p_)
        d[i + 1] = t % p_;
      unsigned lead = d[k_];
      unsigned tt = tail;
      for (unsigned i = 0; i < k_; ++i, tt /= p_)
        d[i] = (d[i] + (p_ - (lead * (tt % p_)) % p_)) % p_;
      unsigned r = 0;
      for (unsigned i = k_; i-- > 0;)
        r = r * p_ + d[i];
      return r;
    };
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<bool> seen(q_, false);
    unsigned a = 1;
    bool ok = true;
    for (unsigned i = 0; i < q_ - 1; ++i) {
      if (seen[a] || a == 0) {
        ok = false;
        break;
      }
      seen[a] = true;
      exp_[i] = a;
      log_[a] = i;
      if (k_ == 1)
        a = static_cast<unsigned>((static_cast<unsigned long>(a) * (tail + 2)) % p_);
      else
        a = times_x(a);
    }
    if (ok && a == 1)
      return;
  }
  throw Error("no primitive element found for GF(" + std::to_string(q) + ")");
}

unsigned GaloisField::add(unsigned a, unsigned b) const
{
  unsigned r = 0, place = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

unsigned GaloisField::neg(unsigned a) const
{
  unsigned r = 0, place = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

unsigned GaloisField::mul(unsigned a, unsigned b) const
{
  if (a == 0 || b == 0)
    return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

unsigned GaloisField::inv(unsigned a) const
{
  if (a == 0)
    throw Error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GroupPtr psl2(unsigned q)
{
  if (q > 32)
    throw UnknownName("psl2(" + std::to_string(q) + ") is out of range");
  GaloisField f(q);
  unsigned inf = q;
  // z -> (a z + c) / (b z + d), acting on GF(q) and infinity (point q).
  auto mobius = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<Point> img(q + 1);
    for (unsigned z = 0; z <= q; ++z) {
      unsigned num, den;
      if (z == inf) {
        num = a;
        den = b;
      } else {
        num = f.add(f.mul(a, z), c);
        den = f.add(f.mul(b, z), d);
      }
      img[z] = den == 0 ? inf : f.mul(num, f.inv(den));
    }
    return Permutation::from_images(std::move(img));
  };
  std::vector<Permutation> gens;
  unsigned k = static_cast<unsigned>(prime_factors(q).size());
  for (unsigned i = 0; i < k; ++i)
    gens.push_back(mobius(1, 0, f.power_of_primitive(i), 1));
  gens.push_back(mobius(0, 1, f.neg(1), 0));
  unsigned w = f.primitive();
  gens.push_back(mobius(w, 0, 0, f.inv(w)));
  std::erase_if(gens, [](Permutation const &g) { return g.is_identity(); });
  return share(Group(std::move(gens)));
}

GroupPtr mathieu11()
{
  return share(Group({Permutation::parse("(1 2 3 4 5 6 7 8 9 10 11)", 11),
                      Permutation::parse("(3 7 11 8)(4 10 5 6)", 11)}));
}

GroupPtr direct_product(Group const &a, Group const &b)
{
  std::size_t n = a.degree() + b.degree();
  if (n > 64)
    throw UnknownName("direct product degree exceeds 64");
  std::vector<Permutation> gens;
  for (auto const &g : a.generators())
    if (!g.is_identity())
      gens.push_back(g.extended(n));
  for (auto const &g : b.generators())
    if (!g.is_identity())
      gens.push_back(g.shifted(static_cast<Point>(a.degree()), n));
  if (gens.empty())
    return share(Group::trivial(n));
  return share(Group(std::move(gens)));
}

// ---------------------------------------------------------------------------

namespace {

struct SpecParser {
  std::string s;
  std::size_t i = 0;

  GroupPtr parse()
  {
    auto g = term();
    if (i != s.size())
      throw UnknownName("trailing text in group spec '" + s + "'");
    return g;
  }

  std::string ident()
  {
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    return s.substr(start, i - start);
  }

  void expect(char c)
  {
    if (i >= s.size() || s[i] != c)
      throw UnknownName("malformed group spec '" + s + "'");
    ++i;
  }

  unsigned number()
  {
    std::string d = ident();
    if (d.empty() || d.size() > 6 || !std::all_of(d.begin(), d.end(), ::isdigit))
      throw UnknownName("expected a number in group spec '" + s + "'");
    return static_cast<unsigned>(std::stoul(d));
  }

  GroupPtr term()
  {
    std::string name = ident();
    if (name == "mathieu11" || name == "m11")
      return mathieu11();
    expect('(');
    GroupPtr g;
    if (name == "product") {
      auto a = term();
      expect(',');
      auto b = term();
      g = direct_product(*a, *b);
    } else {
      unsigned n = number();
      if (name == "sym")
        g = symmetric_group(n);
      else if (name == "alt")
        g = alternating_group(n);
      else if (name == "cyclic")
        g = cyclic_group(n);
      else if (name == "dihedral")
        g = dihedral_group(n);
      else if (name == "psl2")
        g = psl2(n);
      else
        throw UnknownName("unknown group constructor '" + name + "'");
    }
    expect(')');
    return g;
  }
};

} // namespace

std::string canonical_spec(std::string_view spec)
{
  std::string out;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

GroupPtr named_group(std::string_view spec)
{
  SpecParser p{canonical_spec(spec)};
  return p.parse();
}

} // namespace maxsub
