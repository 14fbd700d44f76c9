#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley2/group.hpp"

namespace cayley2 {

// Sentinel returned by diameter_groupring when the order-2 ball from the
// identity misses part of the group.
inline constexpr int kDiameterMoreThanTwo = 3;

struct BfsResult {
  bool connected = false;
  unsigned eccentricity = 0;
  std::uint64_t reached = 0;
};

// Breadth-first levels from the identity; adjacency is generated on the fly
// from S (u -> u*s), never stored.
BfsResult bfs_from_identity(const FiniteGroup& g,
                            const std::vector<std::uint32_t>& s);

// Eccentricity of the identity == graph diameter (Cayley graphs are
// vertex-transitive).  Throws std::runtime_error when S does not generate
// the group; a disconnected graph has no diameter.
unsigned diameter_bfs(const FiniteGroup& g, const std::vector<std::uint32_t>& s);

// Decides diameter <= 2 in the group ring: e + S + S*S must dominate G
// coefficientwise.  Returns 0 (trivial group), 1, 2, or
// kDiameterMoreThanTwo.  Independent of the BFS route.
int diameter_groupring(GroupPtr g, const std::vector<std::uint32_t>& s);

// BFS from every vertex; cross-audits vertex-transitivity at small scale.
// Requires |G| <= 2000; throws std::length_error beyond, std::runtime_error
// when disconnected.
unsigned all_pairs_diameter(const FiniteGroup& g,
                            const std::vector<std::uint32_t>& s);

// Independently re-verifiable record of a constructed graph.
struct CayleyCertificate {
  std::string group;  // descriptor, parse_group() round-trips it
  std::vector<std::uint32_t> generators;
  std::uint64_t order = 0;
  std::uint64_t degree = 0;
  unsigned diameter = 0;
  std::string provenance;
  std::string methods;  // verification tags, e.g. "bfs,groupring"
  std::uint64_t claimed_degree = 0;  // 0 when no claim accompanies the build
};

// Runs both diameter methods, demands they agree, checks the diameter-2
// order bounds (v <= d^2 + 1, and v <= floor(d^2/2) + d + 1 since every
// group family here is abelian), and assembles the certificate.  Throws
// std::logic_error when any cross-check fails.
CayleyCertificate certify(GroupPtr g, const std::vector<std::uint32_t>& s,
                          const std::string& provenance,
                          std::uint64_t claimed_degree = 0);

// Edge list "u v\n" with u < v, both ascending, 0-based vertex indices.
std::string edges_text(const FiniteGroup& g, const std::vector<std::uint32_t>& s);

// Both exporters require a verified certificate (nonempty methods tag).
void export_edges(const CayleyCertificate& cert, const std::string& path);
void write_certificate(const CayleyCertificate& cert, const std::string& path);
std::string certificate_text(const CayleyCertificate& cert);
CayleyCertificate read_certificate(const std::string& path);

}  // namespace cayley2
