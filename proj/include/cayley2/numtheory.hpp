#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cayley2 {

bool is_prime(std::uint64_t n);

// Decomposes q = p^e with p prime. Returns nullopt when q < 2 or q is not a
// prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

// Ascending list of prime powers in [2, limit].
std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit);

// base^exp; throws std::overflow_error when the result leaves uint64.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// C(n, k) in uint64; throws std::overflow_error on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace cayley2
