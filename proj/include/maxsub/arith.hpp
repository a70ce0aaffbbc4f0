#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace maxsub {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Prime factors with multiplicity, increasing.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// The prime p with n = p^k, k >= 1. Returns nothing for n = 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

inline bool is_prime_power(std::uint64_t n) { return prime_power_base(n).has_value(); }

/// n = p^k for the given p and some k >= 1.
bool is_power_of(std::uint64_t n, std::uint64_t p);

} // namespace maxsub
