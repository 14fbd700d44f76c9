#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cayley2/field.hpp"

using namespace cayley2;

namespace {

// Brute-force field axioms; full tables for small q.
void check_field_axioms(const FiniteField& f) {
  const auto q = static_cast<std::uint32_t>(f.order());
  CHECK(f.add(0, 0) == 0);
  CHECK(f.mul(1, 1) == 1);
  for (std::uint32_t a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.mul(a, 0) == 0);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (std::uint32_t b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (std::uint32_t c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold for every backing order in use") {
  for (const std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    CAPTURE(q);
    check_field_axioms(*make_field(q));
  }
}

TEST_CASE("prime field arithmetic is plain modular arithmetic") {
  const auto f = make_field(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      CHECK(f->add(a, b) == (a + b) % 7);
      CHECK(f->mul(a, b) == (a * b) % 7);
    }
  }
  CHECK(f->inv(2) == 4);
  CHECK(f->neg(3) == 4);
  CHECK(f->sub(1, 5) == 3);
}

TEST_CASE("GF(4) multiplication under x^2 = x + 1") {
  // index = c0 + 2*c1: 2 is x, 3 is x+1
  const auto f = make_field(4);
  CHECK(f->reduction_poly() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f->mul(2, 2) == 3);  // x^2 = x+1
  CHECK(f->mul(2, 3) == 1);  // x(x+1) = x^2+x = 1
  CHECK(f->mul(3, 3) == 2);  // (x+1)^2 = x^2+1 = x
  CHECK(f->add(2, 3) == 1);
  CHECK(f->neg(2) == 2);  // characteristic 2
  CHECK(f->inv(2) == 3);
}

TEST_CASE("GF(9) arithmetic under the sieved polynomial") {
  // smallest monic irreducible over GF(3): x^2 + 1
  const auto f = make_field(9);
  CHECK(f->reduction_poly() == std::vector<std::uint32_t>{1, 0, 1});
  // index = c0 + 3*c1; x = 3, so x*x = -1 = 2
  CHECK(f->mul(3, 3) == 2);
  CHECK(f->neg(3) == 6);  // -x = 2x
  CHECK(f->pow(3, 4) == f->mul(2, 2));
}

TEST_CASE("fixed reduction polynomials for GF(2^m) match the header table") {
  const std::vector<std::pair<unsigned, std::vector<std::uint32_t>>> fixed = {
      {2, {1, 1, 1}},                          // x^2+x+1
      {3, {1, 1, 0, 1}},                       // x^3+x+1
      {5, {1, 0, 1, 0, 0, 1}},                 // x^5+x^2+1
      {7, {1, 1, 0, 0, 0, 0, 0, 1}},           // x^7+x+1
      {9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},     // x^9+x+1
      {11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},  // x^11+x^2+1
  };
  for (const auto& [m, poly] : fixed) {
    CAPTURE(m);
    CHECK(reduction_poly_for(2, m) == poly);
    CHECK(is_irreducible(poly, 2));
  }
  // degrees off the fixed table fall back to the sieve
  CHECK(reduction_poly_for(2, 4) == sieve_reduction_poly(2, 4));
  CHECK(reduction_poly_for(3, 2) == sieve_reduction_poly(3, 2));
}

TEST_CASE("sieve picks an irreducible and rejects reducibles") {
  CHECK(is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // x^2+1 = (x+1)^2 over GF(2)
  CHECK_FALSE(is_irreducible({0, 0, 1}, 2));  // x^2
  CHECK(is_irreducible({1, 0, 1}, 3));
  for (const std::uint64_t p : {2, 3, 5}) {
    for (unsigned e = 2; e <= 4; ++e) {
      CAPTURE(p);
      CAPTURE(e);
      const auto poly = sieve_reduction_poly(p, e);
      CHECK(poly.size() == e + 1);
      CHECK(poly[e] == 1);
      CHECK(is_irreducible(poly, p));
    }
  }
}

TEST_CASE("frobenius: (a+b)^p = a^p + b^p in extension fields") {
  for (const std::uint64_t q : {4, 8, 9, 16, 25, 27}) {
    CAPTURE(q);
    const auto f = make_field(q);
    const auto p = static_cast<std::int64_t>(f->characteristic());
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
  for (const std::uint64_t q : {3, 4, 5, 7, 8, 9, 16, 25}) {
    CAPTURE(q);
    const auto f = make_field(q);
    CHECK(f->element_order(f->generator()) == q - 1);
    for (std::uint32_t a = 1; a < q; ++a) {
      CHECK((q - 1) % f->element_order(a) == 0);
      CHECK(f->pow(a, static_cast<std::int64_t>(q - 1)) == 1);
      CHECK(f->pow(a, -1) == f->inv(a));
    }
  }
}

TEST_CASE("make_field rejects non prime powers and oversize orders") {
  CHECK_THROWS_AS(make_field(0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(6), std::invalid_argument);
  CHECK_THROWS_AS(make_field(12), std::invalid_argument);
  CHECK_THROWS_AS(make_field(std::uint64_t{1} << 21), std::length_error);
}
