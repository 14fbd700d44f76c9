#include "cayley2/numtheory.hpp"

#include <stdexcept>

namespace cayley2 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  // The smallest prime factor of a prime power is its base.
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, e);
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (prime_power(q)) out.push_back(q);
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      throw std::overflow_error("ipow: overflow");
    }
    r *= base;
  }
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is always integral at this point.
    std::uint64_t num = n - k + i;
    if (r > UINT64_MAX / num) throw std::overflow_error("binomial: overflow");
    r = r * num / i;
  }
  return r;
}

}  // namespace cayley2
