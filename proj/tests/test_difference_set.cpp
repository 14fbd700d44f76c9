#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cayley2/difference_set.hpp"
#include "cayley2/group.hpp"

using namespace cayley2;

namespace {

GdsDescriptor plain_claim(GroupPtr g, std::vector<std::uint32_t> set,
                          std::int64_t lambda) {
  GdsDescriptor d;
  d.group = std::move(g);
  std::sort(set.begin(), set.end());
  d.set = std::move(set);
  d.claim.v = d.group->order();
  d.claim.k = static_cast<std::uint32_t>(d.set.size());
  d.claim.lambda = lambda;
  return d;
}

// Difference counts computed with nothing but group ops and a plain array.
std::vector<std::int64_t> oracle_differences(const FiniteGroup& g,
                                             const std::vector<std::uint32_t>& set) {
  std::vector<std::int64_t> cnt(g.order(), 0);
  for (const auto a : set) {
    for (const auto b : set) {
      if (a != b) ++cnt[g.op(a, g.inv(b))];
    }
  }
  return cnt;
}

}  // namespace

TEST_CASE("the (7,3,1) planar set {1,2,4} in Z7 verifies") {
  auto d = plain_claim(cyclic_group(7), {1, 2, 4}, 1);
  const auto r = verify_gds(d);
  CHECK(r.ok);
  CHECK(r.measured_lambda == 1);
  CHECK(r.witnesses.empty());

  const auto typed = check_type_equation(d, DesignType::planar);
  CHECK(typed.ok);
  CHECK(typed.failures.empty());
}

TEST_CASE("the perturbed set {1,2,3} in Z7 is rejected with witnesses") {
  auto d = plain_claim(cyclic_group(7), {1, 2, 3}, 1);
  const auto r = verify_gds(d);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witnesses.size() == 4);
  const std::vector<std::uint32_t> where = {r.witnesses[0].element,
                                            r.witnesses[1].element,
                                            r.witnesses[2].element,
                                            r.witnesses[3].element};
  CHECK(where == std::vector<std::uint32_t>{1, 3, 4, 6});
  CHECK(r.witnesses[0].measured == 2);
  CHECK(r.witnesses[1].measured == 0);
  CHECK_FALSE(r.measured_lambda.has_value());  // mixed multiplicities
}

TEST_CASE("the relative set {0,1} in Z4 with forbidden {0,2} verifies") {
  auto d = plain_claim(cyclic_group(4), {0, 1}, 1);
  d.subgroups.emplace_back(d.group, std::vector<std::uint32_t>{0, 2});
  d.claim.exceptional = {{2, 0}};
  const auto r = verify_gds(d);
  CHECK(r.ok);
  CHECK(r.measured_lambda == 1);
  REQUIRE(r.measured_exceptional.size() == 1);
  CHECK(r.measured_exceptional[0] == 0);

  const auto typed = check_type_equation(d, DesignType::relative);
  CHECK(typed.ok);
  CHECK(typed.failures.empty());
}

TEST_CASE("the (16;4,4,4;3,1) set in Z4xZ4 verifies against all three subgroups") {
  const auto g = parse_group("z4xz4");
  // {(1,2), (2,0), (0,3)} with index a*4+b
  auto d = plain_claim(g, {6, 8, 3}, 1);
  d.subgroups.emplace_back(g, std::vector<std::uint32_t>{0, 4, 8, 12});
  d.subgroups.emplace_back(g, std::vector<std::uint32_t>{0, 1, 2, 3});
  d.subgroups.emplace_back(g, std::vector<std::uint32_t>{0, 5, 10, 15});
  d.claim.exceptional = {{4, 0}, {4, 0}, {4, 0}};

  const auto r = verify_gds(d);
  CHECK(r.ok);
  CHECK(r.measured_lambda == 1);
  for (const auto& m : r.measured_exceptional) CHECK(m == 0);

  const auto typed = check_type_equation(d, DesignType::neofield);
  CHECK(typed.ok);
  CHECK(typed.failures.empty());
  // every D*N_i / D^(-1)*N_i misses exactly one coset worth of elements
  REQUIRE(typed.deficiencies.size() == 6);
  for (const auto& [label, missing] : typed.deficiencies) {
    CAPTURE(label);
    CHECK(missing.size() == 4);
  }
}

TEST_CASE("verify_gds agrees with an independent difference oracle") {
  std::mt19937 rng(991);
  for (const char* desc : {"z13", "z4xz4", "tw2"}) {
    CAPTURE(desc);
    const auto g = parse_group(desc);
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(g->order() - 1));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint32_t> set;
      for (int i = 0; i < 4; ++i) set.push_back(pick(rng));
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());

      const auto counts = oracle_differences(*g, set);
      auto d = plain_claim(g, set, 1);
      const auto r = verify_gds(d);

      bool all_one = true;
      for (std::uint32_t i = 1; i < g->order(); ++i) all_one &= (counts[i] == 1);
      CHECK(r.ok == all_one);
      for (const auto& w : r.witnesses) {
        CHECK(w.measured == counts[w.element]);
        CHECK(w.expected == 1);
      }
    }
  }
}

TEST_CASE("twisted relative difference sets verify for every m") {
  for (unsigned m = 1; m <= 4; ++m) {
    CAPTURE(m);
    const auto d = twisted_rds(m);
    CHECK(d.set.size() == (1u << m));
    const auto r = check_type_equation(d, DesignType::relative);
    CHECK(r.ok);
    CHECK(r.failures.empty());
    CHECK(r.measured_lambda == 1);
    CHECK(r.measured_exceptional[0] == 0);
  }
}

TEST_CASE("quadratic relative difference sets verify for odd prime powers") {
  for (const std::uint64_t q : {3, 5, 7, 9}) {
    CAPTURE(q);
    const auto d = quadratic_rds(q);
    const auto r = check_type_equation(d, DesignType::relative);
    CHECK(r.ok);
    CHECK(r.failures.empty());
  }
  CHECK_THROWS_AS(quadratic_rds(4), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_rds(8), std::invalid_argument);
}

TEST_CASE("direct product difference sets verify with both subgroups") {
  for (const std::uint64_t q : {3, 4, 5, 7}) {
    CAPTURE(q);
    const auto d = dpds(q);
    CHECK(d.claim.v == q * (q - 1));
    CHECK(d.claim.k == q - 1);
    const auto r = check_type_equation(d, DesignType::direct_product);
    CHECK(r.ok);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("neofield difference sets: frozen small sets and deficiency shapes") {
  CHECK(neofield_gds(3).set == std::vector<std::uint32_t>{3});
  CHECK(neofield_gds(4).set == std::vector<std::uint32_t>{5, 7});
  CHECK(neofield_gds(5).set == std::vector<std::uint32_t>{7, 10, 13});

  for (const std::uint64_t q : {3, 4, 5, 7, 8}) {
    CAPTURE(q);
    const auto d = neofield_gds(q);
    const auto r = check_type_equation(d, DesignType::neofield);
    CHECK(r.ok);
    CHECK(r.failures.empty());

    // D*N1 misses exactly N1, D*N2 misses N2; D*N3 misses the antidiagonal,
    // which coincides with N3 exactly in characteristic 2.
    const auto f = make_field(q);
    const auto un = static_cast<std::uint32_t>(q - 1);
    std::vector<std::uint32_t> antidiag;
    for (std::uint32_t a = 1; a < q; ++a) {
      antidiag.push_back((a - 1) * un + (f->neg(a) - 1));
    }
    std::sort(antidiag.begin(), antidiag.end());

    for (const auto& [label, missing] : r.deficiencies) {
      CAPTURE(label);
      if (label == "D*N1" || label == "D^(-1)*N1") {
        CHECK(missing == d.subgroups[0].elements);
      } else if (label == "D*N2" || label == "D^(-1)*N2") {
        CHECK(missing == d.subgroups[1].elements);
      } else {
        CHECK(missing == antidiag);
        CHECK((missing == d.subgroups[2].elements) == (q % 2 == 0));
      }
    }
  }
  CHECK_THROWS_AS(neofield_gds(2), std::invalid_argument);
  CHECK_THROWS_AS(neofield_gds(6), std::invalid_argument);
}

TEST_CASE("double cover identity holds exactly for odd m") {
  for (const unsigned m : {1, 3}) {
    CAPTURE(m);
    const auto c = check_double_cover(m);
    CHECK(c.holds);
    CHECK(c.defect.is_zero());
  }
  for (const unsigned m : {2, 4}) {
    CAPTURE(m);
    const auto c = check_double_cover(m);
    CHECK_FALSE(c.holds);
    CHECK_FALSE(c.defect.support().empty());
    // both sides have augmentation 2q^2, so the defect always sums to zero
    CHECK(c.defect.aug() == 0);
  }
  // m = 2: rows s != 0 split into trace-0 positions (counted twice by both
  // squares) and trace-1 positions (counted by neither): 3 rows x 4 entries.
  CHECK(check_double_cover(2).defect.support().size() == 12);
}

TEST_CASE("malformed descriptors and claims are rejected up front") {
  const auto g = cyclic_group(7);

  auto d = plain_claim(g, {1, 2, 4}, 1);
  d.claim.v = 8;
  CHECK_THROWS_AS(verify_gds(d), std::invalid_argument);

  d = plain_claim(g, {1, 2, 4}, 1);
  d.claim.k = 2;
  CHECK_THROWS_AS(verify_gds(d), std::invalid_argument);

  d = plain_claim(g, {1, 2, 4}, 1);
  d.set = {2, 1, 4};  // not sorted
  CHECK_THROWS_AS(verify_gds(d), std::invalid_argument);

  d = plain_claim(g, {1, 2, 9}, 1);
  CHECK_THROWS_AS(verify_gds(d), std::out_of_range);

  // overlapping exceptional subgroups
  const auto z4 = cyclic_group(4);
  auto rel = plain_claim(z4, {0, 1}, 1);
  rel.subgroups.emplace_back(z4, std::vector<std::uint32_t>{0, 2});
  rel.subgroups.emplace_back(z4, std::vector<std::uint32_t>{0, 2});
  rel.claim.exceptional = {{2, 0}, {2, 0}};
  CHECK_THROWS_AS(verify_gds(rel), std::invalid_argument);

  // claimed subgroup order disagrees with the explicit subgroup
  auto bad_n = plain_claim(z4, {0, 1}, 1);
  bad_n.subgroups.emplace_back(z4, std::vector<std::uint32_t>{0, 2});
  bad_n.claim.exceptional = {{4, 0}};
  CHECK_THROWS_AS(verify_gds(bad_n), std::invalid_argument);
}

TEST_CASE("type equations validate their shape constraints") {
  const auto g = cyclic_group(7);
  auto planar = plain_claim(g, {1, 2, 4}, 1);
  CHECK_THROWS_AS(check_type_equation(planar, DesignType::relative),
                  std::invalid_argument);  // relative needs one subgroup

  auto bad_lambda = plain_claim(g, {1, 2, 4}, 0);
  CHECK_THROWS_AS(check_type_equation(bad_lambda, DesignType::planar),
                  std::invalid_argument);

  const auto z4 = cyclic_group(4);
  auto rel = plain_claim(z4, {0, 1}, 2);
  rel.subgroups.emplace_back(z4, std::vector<std::uint32_t>{0, 2});
  rel.claim.exceptional = {{2, 0}};
  CHECK_THROWS_AS(check_type_equation(rel, DesignType::relative),
                  std::invalid_argument);  // lambda must be 1

  // direct product shape: |N1| = |N2| + 1
  const auto d = dpds(4);
  auto swapped = d;
  std::swap(swapped.subgroups[0], swapped.subgroups[1]);
  std::swap(swapped.claim.exceptional[0], swapped.claim.exceptional[1]);
  CHECK_THROWS_AS(check_type_equation(swapped, DesignType::direct_product),
                  std::invalid_argument);
}
