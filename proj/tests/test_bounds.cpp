#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley2/bounds.hpp"
#include "cayley2/construction.hpp"

using namespace cayley2;

TEST_CASE("moore ceilings, frozen and by formula") {
  CHECK(moore(7, 2) == 50);
  CHECK(moore(57, 2) == 3250);
  CHECK(moore(2, 3) == 7);
  CHECK(moore(3, 3) == 22);
  CHECK(moore(3, 2) == 10);

  for (std::uint64_t d = 3; d <= 100; ++d) {
    CHECK(moore(d, 2) == d * d + 1);
  }
  for (unsigned k = 1; k <= 10; ++k) {
    CHECK(moore(2, k) == 2 * std::uint64_t{k} + 1);
  }

  CHECK_THROWS_AS(moore(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(moore(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(moore(1u << 20, 5), std::overflow_error);
}

TEST_CASE("abelian diameter-2 ceiling") {
  CHECK(ac_upper(6) == 25);
  CHECK(ac_upper(7) == 32);
  CHECK(ac_upper(1) == 2);
  for (std::uint64_t d = 1; d <= 200; ++d) {
    CHECK(ac_upper(d) == d * d / 2 + d + 1);
    if (d >= 2) CHECK(ac_upper(d) <= moore(d, 2));
  }
  CHECK_THROWS_AS(ac_upper(0), std::invalid_argument);
}

TEST_CASE("lattice-covering ceiling for even degrees") {
  CHECK(df_upper(1, 1) == 3);
  CHECK(df_upper(2, 2) == 13);
  CHECK(df_upper(3, 2) == 25);
  CHECK(df_upper(12, 2) == 313);

  // closed forms at diameter 2 and at delta = 2
  for (std::uint64_t delta = 1; delta <= 60; ++delta) {
    CHECK(df_upper(delta, 2) == 2 * delta * delta + 2 * delta + 1);
  }
  for (std::uint64_t k = 1; k <= 60; ++k) {
    CHECK(df_upper(2, k) == 2 * k * k + 2 * k + 1);
  }
  // at even degree d the two diameter-2 ceilings coincide
  for (std::uint64_t d = 2; d <= 120; d += 2) {
    CHECK(df_upper(d / 2, 2) == ac_upper(d));
  }
  // symmetric in (delta, k)
  for (std::uint64_t a = 1; a <= 12; ++a) {
    for (std::uint64_t b = 1; b <= 12; ++b) {
      CHECK(df_upper(a, b) == df_upper(b, a));
    }
  }

  CHECK_THROWS_AS(df_upper(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(df_upper(1, 0), std::invalid_argument);
}

TEST_CASE("the bounds table lines up ceilings against certified orders") {
  std::vector<CayleyCertificate> certs;
  certs.push_back(certify_spec(build_rds4_graph(1)));
  certs.push_back(certify_spec(build_rds4_graph(3)));

  const auto rows = table(6, 24, certs);
  REQUIRE(rows.size() == 19);

  const auto& r6 = rows[0];
  CHECK(r6.d == 6);
  CHECK(r6.k == 2);
  CHECK(r6.moore_bound == 37);
  CHECK(r6.ac_bound == 25);
  REQUIRE(r6.df_bound.has_value());
  CHECK(*r6.df_bound == 25);
  REQUIRE(r6.best_order.has_value());
  CHECK(*r6.best_order == 16);
  CHECK(r6.construction == "rds4 m=1");

  const auto& r7 = rows[1];
  CHECK_FALSE(r7.df_bound.has_value());
  CHECK_FALSE(r7.best_order.has_value());
  CHECK(r7.construction.empty());

  const auto& r24 = rows[18];
  CHECK(r24.moore_bound == 577);
  CHECK(r24.ac_bound == 313);
  CHECK(*r24.df_bound == 313);
  CHECK(*r24.best_order == 256);
  CHECK(r24.construction == "rds4 m=3");
}

TEST_CASE("the table keeps the best certificate per degree") {
  auto small = certify_spec(build_rds4_graph(1));
  auto padded = certify_spec(pad_to_degree(build_neofield_graph(3), 20));
  auto shrunk = small;
  shrunk.order = 10;
  shrunk.group = "z10";  // pretend a weaker degree-6 graph also exists
  const auto rows = table(6, 20, {shrunk, small, padded});
  CHECK(*rows[0].best_order == 16);
  CHECK(rows[0].construction == "rds4 m=1");
  CHECK(*rows[14].best_order == 100);
}

TEST_CASE("the table refuses bad certificates") {
  CayleyCertificate diam3;
  diam3.group = "z9";
  diam3.generators = {1, 8};
  diam3.order = 9;
  diam3.degree = 2;
  diam3.diameter = 4;
  CHECK_THROWS_AS(table(2, 4, {diam3}), std::invalid_argument);

  CayleyCertificate bogus;  // order 26 at degree 6 would beat the ceiling
  bogus.group = "z26";
  bogus.generators = {1, 2, 3, 23, 24, 25};
  bogus.order = 26;
  bogus.degree = 6;
  bogus.diameter = 2;
  CHECK_THROWS_AS(table(6, 6, {bogus}), std::logic_error);

  CHECK_THROWS_AS(table(1, 5, {}), std::invalid_argument);
  CHECK_THROWS_AS(table(8, 6, {}), std::invalid_argument);
}

TEST_CASE("tab-separated rendering is stable") {
  const auto rows = table(6, 7, {certify_spec(build_rds4_graph(1))});
  CHECK(table_tsv(rows) ==
        "d\tk\tmoore\tac_upper\tdf_upper\tbest_order\tconstruction\n"
        "6\t2\t37\t25\t25\t16\trds4 m=1\n"
        "7\t2\t50\t32\t-\t-\t-\n");
}
