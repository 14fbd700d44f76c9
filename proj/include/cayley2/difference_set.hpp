#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley2/group.hpp"
#include "cayley2/group_ring.hpp"

namespace cayley2 {

// Claimed parameters (v; n_1..n_r; k, lambda; lambda_1..lambda_r) of a
// generalized difference set: |D| = k in a group of order v, with the
// difference multiset hitting each element outside the exceptional subgroups
// lambda times and each non-identity element of N_i exactly lambda_i times.
struct GdsParams {
  std::uint64_t v = 0;
  std::uint32_t k = 0;
  std::int64_t lambda = 0;
  std::vector<std::pair<std::uint64_t, std::int64_t>> exceptional;  // (n_i, lambda_i)
};

struct GdsDescriptor {
  GroupPtr group;
  std::vector<std::uint32_t> set;  // sorted, duplicate-free
  std::vector<Subgroup> subgroups;
  GdsParams claim;
};

struct GdsWitness {
  std::uint32_t element = 0;
  std::int64_t measured = 0;
  std::int64_t expected = 0;
};

struct GdsReport {
  bool ok = false;
  // The common multiplicity actually measured off the exceptional subgroups,
  // when it is constant (independent of the claim); likewise per subgroup on
  // N_i minus the identity. nullopt when the region is empty or mixed.
  std::optional<std::int64_t> measured_lambda;
  std::vector<std::optional<std::int64_t>> measured_exceptional;
  std::vector<GdsWitness> witnesses;  // claim violations, ascending element
  // Zero-coefficient sets of auxiliary products (affine / neofield types).
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> deficiencies;
  std::vector<std::string> failures;  // failed auxiliary equations

  std::string to_text() const;
};

// Measures the difference multiset {d1 * d2^-1} of d.set along two
// independent routes (group-ring convolution D * D^(-1) and direct ordered
// pair enumeration), cross-checks them, and compares against d.claim.
// Throws std::invalid_argument when the descriptor itself is malformed
// (wrong sizes, subgroups overlapping beyond the identity, ...).
GdsReport verify_gds(const GdsDescriptor& d);

// The five classical design shapes and their group-ring equations.
enum class DesignType {
  planar,          // D*D^(-1) = n.e + lambda.G                      (r = 0)
  relative,        // D*D^(-1) = n.e + G - N,   D*N = D^(-1)*N = G   (r = 1)
  affine,          // as relative but D*N = G - M with |M| = n-1     (r = 1)
  direct_product,  // r = 2: D*N1 = G, D*N2 = G - N2, N1*N2 = G
  neofield,        // r = 3: D*Ni = G - Mi, Ni*Nj = G (i != j)
};

// verify_gds plus the displayed equation for the given type and its
// auxiliary product identities; deficiency sets are measured, never assumed.
GdsReport check_type_equation(const GdsDescriptor& d, DesignType type);

// ((q-1)^2; q-1,q-1,q-1; q-2, 1; 0,0,0) in unit(q) x unit(q):
// D = {(x, 1-x) : x != 0, 1}, exceptional subgroups = the two axes and the
// diagonal. Requires prime power q >= 3.
GdsDescriptor neofield_gds(std::uint64_t q);

// (q, q, q, 1) relative difference set D = {(x, 0)} in the twisted group of
// degree m, forbidden subgroup N = {(0, b)}.
GdsDescriptor twisted_rds(unsigned m,
                          std::uint64_t max_order = kDefaultMaxGroupOrder);

// (q, q, q, 1) relative difference set D = {(x, x^2)} in add(q) x add(q)
// for odd prime powers q, forbidden subgroup N = {0} x add(q).
GdsDescriptor quadratic_rds(std::uint64_t q);

// (q(q-1); q, q-1; q-1, 1; 0, 0) in add(q) x unit(q): D = {(x, x) : x != 0}.
GdsDescriptor dpds(std::uint64_t q);

struct DoubleCoverCheck {
  bool holds = false;
  GroupRingElement defect;  // D*D + D^(-1)*D^(-1) - 2G; zero iff holds
};

// Checks D*D + D^(-1)*D^(-1) == 2G for the degree-m twisted relative
// difference set. Holds exactly for odd m: for even m the quadratic
// x^2 + a x + a^2 acquires roots and the squares' images collide.
DoubleCoverCheck check_double_cover(unsigned m);

}  // namespace cayley2
