#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley2/cayley_graph.hpp"

namespace cayley2 {

// Degree-diameter ceiling: 1 + d((d-1)^k - 1)/(d-2) for d > 2, 2k+1 for
// d = 2.  Exact integers; throws std::overflow_error when the value does not
// fit, std::invalid_argument when d < 2 or k < 1.
std::uint64_t moore(std::uint64_t d, unsigned k);

// Diameter-2 ceiling for abelian Cayley graphs: floor(d^2/2) + d + 1.
std::uint64_t ac_upper(std::uint64_t d);

// Lattice-covering ceiling for abelian Cayley graphs of even degree 2*delta
// and diameter k: sum over i of 2^i * C(delta,i) * C(k,i).
std::uint64_t df_upper(std::uint64_t delta, std::uint64_t k);

struct BoundRow {
  std::uint64_t d = 0;
  unsigned k = 2;
  std::uint64_t moore_bound = 0;
  std::uint64_t ac_bound = 0;
  std::optional<std::uint64_t> df_bound;    // even degrees only
  std::optional<std::uint64_t> best_order;  // largest certified order at this degree
  std::string construction;                 // provenance of that certificate
};

// One row per degree in [d_lo, d_hi].  Every certificate must have diameter
// at most 2 (std::invalid_argument otherwise); a certified order exceeding
// an upper bound is an implementation bug and throws std::logic_error.
std::vector<BoundRow> table(std::uint64_t d_lo, std::uint64_t d_hi,
                            const std::vector<CayleyCertificate>& certs);

// Tab-separated rendering with a fixed header; absent values print as "-".
std::string table_tsv(const std::vector<BoundRow>& rows);

}  // namespace cayley2
