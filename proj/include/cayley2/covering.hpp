#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cayley2/group.hpp"
#include "cayley2/group_ring.hpp"

namespace cayley2 {

// A candidate covering configuration on an auxiliary abelian group H: a
// nonempty subset Psi and k subsets Lambda_1..Lambda_k, each Lambda_i closed
// under inversion (so that the generating set assembled from it later is
// symmetric).  The derived size s = 2|Psi| + sum |Lambda_i| is the degree
// budget the configuration spends per base-set element.
struct CoveringConfig {
  GroupPtr group;
  std::vector<std::uint32_t> psi;
  std::vector<std::vector<std::uint32_t>> lambdas;
};

// s = 2|Psi| + sum_i |Lambda_i|.
unsigned config_size(const CoveringConfig& c);

// The covering sum evaluated literally in Z[H]:
//
//   Psi*Psi^(-1) + sum_i Psi*Lambda_i + sum_i Psi^(-1)*Lambda_i
//                + sum_{i != j} Lambda_i*Lambda_j
//
// (the last sum over ordered pairs).  Partially-covering products such as
// Lambda_i*Lambda_i are deliberately not credited; this sum is a sufficient
// pre-filter and the graph layer stays the ground truth.
GroupRingElement cover_sum(const CoveringConfig& c);

// Tests whether every element of H gets coefficient >= 1 in cover_sum.
// Throws std::invalid_argument when the config invariants fail (empty Psi,
// out-of-range or duplicate indices, some Lambda_i not inverse-closed).
CoverResult check_cover(const CoveringConfig& c);

struct SearchLimits {
  std::uint64_t max_order = 25;  // enumerate abelian H with |H| <= max_order
  unsigned k = 3;                // number of Lambda blocks
  unsigned max_psi = 1;          // |Psi| <= max_psi
  unsigned max_theta = 2;        // |Lambda_i| <= max_theta
  std::size_t max_results = 25;  // top hits kept
  // Explosion guard: estimated configuration count above which the search
  // refuses to start instead of running for hours.
  std::uint64_t max_configs = std::uint64_t{1} << 28;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SearchHit {
  CoveringConfig config;
  std::vector<std::uint64_t> invariant_factors;  // ascending, d1 | d2 | ...
  unsigned s = 0;
  boost::rational<long long> score;  // |H| / s^2
};

// Exhaustive scan of covering configurations.
//
// Abelian groups are enumerated by invariant-factor decompositions, Lambda
// blocks as unions of negation orbits {h, -h} in nondecreasing canonical
// order (the cover sum is symmetric under permuting blocks), Psi as plain
// subsets.  Cost model: roughly
//   sum over H of  (#Psi choices) * (#Lambda tuples) * s^2
// elementary operations; the (H, Psi) partitions run on a thread pool and
// are merged deterministically, so repeated runs return identical results.
// Hits are ordered by score descending, ties by canonical key ascending,
// truncated to max_results, and every returned config is re-verified
// through check_cover from scratch.
//
// Throws std::length_error when the estimated configuration count exceeds
// limits.max_configs.
std::vector<SearchHit> search_cover(const SearchLimits& limits);

// All invariant-factor chains (ascending, each dividing the next) of abelian
// groups of order exactly n; {1} markers never appear except for n = 1.
std::vector<std::vector<std::uint64_t>> abelian_factorizations(std::uint64_t n);

// Builds the direct product of cyclic groups for one invariant-factor chain.
GroupPtr abelian_group(const std::vector<std::uint64_t>& factors,
                       std::uint64_t max_order = kDefaultMaxGroupOrder);

// Tab-separated table of hits: header then one row per hit with the group's
// invariant factors, Psi, each Lambda_i, s and the exact score.
std::string search_hits_tsv(const std::vector<SearchHit>& hits, unsigned k);

// Closed-form upper bound ((2s - 1/2)^2 / 10 + 1) / s^2 on the order/degree^2
// ratio achievable by a one-block covering configuration, as an exact
// rational.  Meaningful as a bound for s >= 4; defined for all s >= 1.
boost::rational<long long> tau_bound(unsigned s);

// Exact maximum of (1 + psi(psi-1) + psi(psi+1)/2 + 2 psi theta) / s^2 over
// integer splits s = 2 psi + theta, psi >= 1, theta >= 0.  Requires
// 2 <= s <= 64; never exceeds tau_bound(s).
boost::rational<long long> tau_exhaustive(unsigned s);

}  // namespace cayley2
