#include "maxsub/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "maxsub/errors.hpp"

namespace maxsub {

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw Error("image list is not a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  Permutation result(degree);
  for (auto const &cycle : cycles) {
    if (cycle.empty())
      continue;
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw Error("cycle point " + std::to_string(from) + " outside 1.." +
                    std::to_string(degree));
      images[from - 1] = to - 1;
    }
    result *= from_images(std::move(images));
  }
  return result;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  std::size_t max_point = 0;

  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size())
    throw ParseError("empty permutation", 0);

  while (i < text.size()) {
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '(')
      throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 65535)
          throw ParseError("point too large", i);
        ++i;
      }
      if (value == 0)
        throw ParseError("points are 1-based", i);
      if (std::find(cycle.begin(), cycle.end(), value) != cycle.end())
        throw ParseError("repeated point in cycle", i);
      cycle.push_back(static_cast<Point>(value));
      max_point = std::max(max_point, value);
    }
    cycles.push_back(std::move(cycle));
  }

  if (degree == 0)
    degree = std::max<std::size_t>(max_point, 1);
  if (max_point > degree)
    throw ParseError("point " + std::to_string(max_point) + " exceeds degree " +
                       std::to_string(degree),
                     text.size());
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw DegreeMismatch(degree(), rhs.degree());
  std::vector<Point> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    images[x] = rhs.images_[images_[x]];
  return Permutation(std::move(images));
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  if (degree() != rhs.degree())
    throw DegreeMismatch(degree(), rhs.degree());
  for (auto &x : images_)
    x = rhs.images_[x];
  return *this;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    images[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(images));
}

Permutation Permutation::conjugate(Permutation const &x) const
{
  return x.inverse() * *this * x;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::uint64_t Permutation::order() const
{
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    std::uint64_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::lowest_moved_point() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return static_cast<Point>(x);
  return static_cast<Point>(images_.size());
}

Permutation Permutation::extended(std::size_t degree) const
{
  if (degree < images_.size())
    throw DegreeMismatch(images_.size(), degree);
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::copy(images_.begin(), images_.end(), images.begin());
  return Permutation(std::move(images));
}

Permutation Permutation::shifted(Point offset, std::size_t degree) const
{
  if (offset + images_.size() > degree)
    throw DegreeMismatch(offset + images_.size(), degree);
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t x = 0; x < images_.size(); ++x)
    images[x + offset] = images_[x] + offset;
  return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const
{
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out += '(';
    bool first = true;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first)
        out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Permutation::hash() const
{
  std::uint64_t h = 0xcbf29ce484222325ULL ^ images_.size();
  for (Point x : images_) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << p.to_cycles();
}

} // namespace maxsub
