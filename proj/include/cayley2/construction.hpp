#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cayley2/cayley_graph.hpp"
#include "cayley2/covering.hpp"
#include "cayley2/group.hpp"

namespace cayley2 {

// A generating set assembled from layers (subset of the base group G tagged
// with an element of the auxiliary group H) plus sporadic extra elements.
// The final set lives in G x H, is duplicate-free, symmetric, and never
// contains the identity: a layer that happens to produce the identity (the
// (N, 0) layers do) has it dropped, and dropped_identity records that.
struct GeneratingSpec {
  GroupPtr group;  // G x H
  GroupPtr base;   // G
  GroupPtr aux;    // H
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> layers;
  std::vector<std::uint32_t> sporadic;  // indices in G x H
  std::vector<std::uint32_t> set;       // resulting S, sorted
  bool dropped_identity = false;
  std::string provenance;
  std::uint64_t claimed_degree = 0;
};

// The two degree-8 covering configurations on Z5 x Z5 used by the neofield
// construction: the printed one (whose Lambda_1 orbit collides with Psi and
// fails to cover) and the corrected one with Lambda_1 = {(2,0),(3,0)}.
CoveringConfig literal_cover_config();
CoveringConfig corrected_cover_config();

// Degree-3q graph on twisted(m) x Z4 from the (q,q,q,1)-RDS, q = 2^m, m odd.
// The forbidden-subgroup layer is placed at 2 in Z4 rather than at 0 so the
// set stays identity-free at full size 3q; the product identity
//   S*S = 2q*e + (q-2)*(N,0) + 2*(G, all of Z4)
// is asserted exactly.  Even m is refused with the double-cover defect.
GeneratingSpec build_rds4_graph(unsigned m,
                                std::uint64_t max_order = kDefaultMaxGroupOrder);

// Degree <= 8q-4 graph on (F_q*)^2 x H from the neofield GDS, |H| = 25.
// The config must pass check_cover with three blocks; the augmented set
// D~ = D + {(1,1)} (+ {(1,-1)} for odd q) must cover against every N_i.
GeneratingSpec build_neofield_graph(std::uint64_t q, const CoveringConfig& config,
                                    std::uint64_t max_order = kDefaultMaxGroupOrder);
GeneratingSpec build_neofield_graph(std::uint64_t q);  // corrected config

// Degree 4q-2 graph on (F_q,+) x (F_q*,.) x Z6 from the direct-product GDS.
GeneratingSpec build_dpds_graph(std::uint64_t q,
                                std::uint64_t max_order = kDefaultMaxGroupOrder);

// Grows S to exactly degree d by adding unused elements, involutions first
// and then inverse-pairs, each in ascending index order; symmetry and
// loop-freeness are preserved, so the diameter stays 2.  Requires
// |S| <= d <= order - 1; throws std::runtime_error when an odd deficit
// remains and no involution is available.
GeneratingSpec pad_to_degree(const GeneratingSpec& spec, std::uint64_t d);

// Largest-order diameter-2 graph of degree exactly d obtainable from the
// two constructions above: scans every candidate parameter whose measured
// degree fits below d and whose order leaves room to pad, picks the largest
// order, and pads.  Throws std::runtime_error when no base construction
// fits (this happens for d in {16, 17}).
GeneratingSpec best_for_degree(std::uint64_t d);

// certify() on the assembled set, wiring provenance and the claimed degree.
CayleyCertificate certify_spec(const GeneratingSpec& spec);

}  // namespace cayley2
