#include "maxsub/arith.hpp"

namespace maxsub {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  auto f = prime_factors(n);
  std::vector<std::uint64_t> out;
  for (auto p : f)
    if (out.empty() || out.back() != p)
      out.push_back(p);
  return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n)
{
  auto d = prime_divisors(n);
  if (d.size() != 1)
    return std::nullopt;
  return d.front();
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  if (n < p || p < 2)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace maxsub
