#include "graphclass/primes.hpp"

#include <algorithm>
#include <string>

#include "graphclass/errors.hpp"

namespace graphclass {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t q) {
  if (!is_prime(q)) throw NotPrimeError("modulus " + std::to_string(q) + " is not prime");
  if (q >= (std::uint64_t{1} << 32))
    throw NotPrimeError("modulus " + std::to_string(q) + " exceeds 32 bits");
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint64_t> extend_primes(std::span<const std::uint64_t> base, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q : base)
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  std::uint64_t last = out.empty() ? 2 : *std::max_element(out.begin(), out.end());
  while (out.size() < count) {
    last = next_prime(last);
    out.push_back(last);
  }
  return out;
}

std::optional<std::uint64_t> checked_power(std::uint64_t q, std::size_t n, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q != 0 && acc > limit / q) return std::nullopt;
    acc *= q;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

}  // namespace graphclass
