#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace graphclass {

bool is_prime(std::uint64_t n) noexcept;

/// Throws NotPrimeError unless `q` is a prime below 2^32.
void require_prime(std::uint64_t q);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// `base` (deduplicated, order kept) extended with successive primes after
/// max(base) until it holds `count` entries.
std::vector<std::uint64_t> extend_primes(std::span<const std::uint64_t> base, std::size_t count);

/// q^n, or nullopt if it exceeds `limit`.
std::optional<std::uint64_t> checked_power(std::uint64_t q, std::size_t n,
                                           std::uint64_t limit = UINT64_MAX);

}  // namespace graphclass
