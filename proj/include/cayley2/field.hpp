#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace cayley2 {

// Maximum field order accepted by make_field. Fields back the group
// constructions, whose own size guard (see group.hpp) is the binding limit;
// this one only stops pathological requests before table allocation.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

// GF(q) with q = p^e.
//
// Elements are indices 0..q-1. An element with coefficient vector
// (c_0, ..., c_{e-1}) over GF(p) — c_i multiplying x^i in the quotient
// representation — has index sum c_i * p^i. Index 0 is the additive identity
// and index 1 the multiplicative identity, for every p and e.
//
// The reduction polynomial is pinned so that indices mean the same thing
// everywhere: for GF(2^m) with m in {2,3,5,7,9,11} a fixed table
// (x^2+x+1, x^3+x+1, x^5+x^2+1, x^7+x+1, x^9+x+1, x^11+x^2+1) is used; every
// other (p,e) takes the lexicographically smallest monic irreducible, i.e.
// the first irreducible when the non-leading coefficient vector is counted
// through indices 0,1,2,... as above.
class FiniteField {
 public:
  FiniteField(std::uint64_t p, unsigned e);

  std::uint64_t order() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  // Monic reduction polynomial, coefficients c_0..c_e over GF(p); c_e = 1.
  // Degree-1 fields report the polynomial x.
  const std::vector<std::uint32_t>& reduction_poly() const { return poly_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  std::uint32_t pow(std::uint32_t a, std::int64_t t) const;

  // A multiplicative generator (primitive element); q >= 2.
  std::uint32_t generator() const { return generator_; }
  // Multiplicative order of a != 0.
  std::uint64_t element_order(std::uint32_t a) const;

 private:
  void check_index(std::uint32_t a) const;

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> poly_;
  // Discrete log/antilog tables for extension fields (e > 1); prime fields
  // use modular arithmetic directly.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::uint32_t generator_ = 0;
};

// Builds GF(q). Throws std::invalid_argument when q is not a prime power and
// std::length_error when q exceeds kMaxFieldOrder.
std::shared_ptr<const FiniteField> make_field(std::uint64_t q);

// True when `poly` (coefficients c_0..c_e over GF(p), monic, degree >= 1) has
// no monic divisor of degree in [1, deg/2]. Exposed for tests.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint64_t p);

// The reduction polynomial make_field would pick for (p, e), without building
// tables. Exposed so tests can compare the fixed GF(2^m) table against the
// sieve.
std::vector<std::uint32_t> reduction_poly_for(std::uint64_t p, unsigned e);
std::vector<std::uint32_t> sieve_reduction_poly(std::uint64_t p, unsigned e);

}  // namespace cayley2
