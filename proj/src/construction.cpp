#include "cayley2/construction.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cayley2/difference_set.hpp"
#include "cayley2/group_ring.hpp"
#include "cayley2/numtheory.hpp"

namespace cayley2 {

namespace {

// Flattens layers + sporadic elements into the final sorted set, dropping a
// produced identity (recorded) and insisting on symmetry.
void assemble(GeneratingSpec& s) {
  const auto h_order = s.aux->order();
  std::vector<std::uint32_t> all;
  for (const auto& [subset, h] : s.layers) {
    if (h >= h_order) {
      throw std::out_of_range("assemble: layer tag outside the auxiliary group");
    }
    for (const auto g : subset) {
      if (g >= s.base->order()) {
        throw std::out_of_range("assemble: layer element outside the base group");
      }
      all.push_back(static_cast<std::uint32_t>(std::uint64_t{g} * h_order + h));
    }
  }
  all.insert(all.end(), s.sporadic.begin(), s.sporadic.end());
  for (const auto x : all) {
    if (x >= s.group->order()) {
      throw std::out_of_range("assemble: element outside the product group");
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  const auto e = s.group->identity();
  const auto it = std::lower_bound(all.begin(), all.end(), e);
  if (it != all.end() && *it == e) {
    all.erase(it);
    s.dropped_identity = true;
  }
  for (const auto x : all) {
    if (!std::binary_search(all.begin(), all.end(), s.group->inv(x))) {
      throw std::logic_error("assemble: generating set is not symmetric");
    }
  }
  s.set = std::move(all);
}

std::vector<std::uint32_t> inverse_set(const GroupPtr& g,
                                       const std::vector<std::uint32_t>& set) {
  std::vector<std::uint32_t> out;
  out.reserve(set.size());
  for (const auto x : set) out.push_back(g->inv(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CoveringConfig literal_cover_config() {
  CoveringConfig c;
  c.group = abelian_group({5, 5});
  c.psi = {5};                             // (1,0)
  c.lambdas = {{5, 20}, {1, 4}, {2, 3}};   // {(1,0),(4,0)} collides with Psi
  return c;
}

CoveringConfig corrected_cover_config() {
  CoveringConfig c;
  c.group = abelian_group({5, 5});
  c.psi = {5};                             // (1,0)
  c.lambdas = {{10, 15}, {1, 4}, {2, 3}};  // {(2,0),(3,0)}, {(0,1),(0,4)}, {(0,2),(0,3)}
  return c;
}

GeneratingSpec build_rds4_graph(unsigned m, std::uint64_t max_order) {
  if (m == 0) throw std::invalid_argument("build_rds4_graph: m must be >= 1");
  if (m % 2 == 0) {
    const auto check = check_double_cover(m);
    throw std::invalid_argument(
        "build_rds4_graph: the double-cover identity D*D + D^(-1)*D^(-1) = 2G "
        "fails for even m=" +
        std::to_string(m) + "; the defect has " +
        std::to_string(check.defect.support().size()) + " nonzero terms");
  }

  const auto rds = twisted_rds(m, max_order);
  const auto q = static_cast<std::uint32_t>(rds.claim.k);  // 2^m
  const auto& forbidden = rds.subgroups[0].elements;

  GeneratingSpec s;
  s.base = rds.group;
  s.aux = cyclic_group(4);
  s.group = direct_product(s.base, s.aux, max_order);
  s.layers = {{rds.set, 1}, {inverse_set(s.base, rds.set), 3}, {forbidden, 2}};
  s.provenance = "rds4 m=" + std::to_string(m);
  s.claimed_degree = 3 * std::uint64_t{q};
  assemble(s);
  if (s.dropped_identity || s.set.size() != s.claimed_degree) {
    throw std::logic_error("build_rds4_graph: expected an identity-free set of size 3q");
  }

  // The diameter-2 driving identity, exact: S*S = 2q.e + (q-2)(N,0) + 2(G,Z4).
  const auto S = GroupRingElement::from_subset(s.group, s.set);
  GroupRingElement n0(s.group);
  for (const auto n : forbidden) n0.set_coeff(n * 4, 1);
  const auto rhs =
      GroupRingElement::singleton(s.group, s.group->identity(), 2 * std::int64_t{q}) +
      n0.scaled(std::int64_t{q} - 2) +
      GroupRingElement::whole_group(s.group).scaled(2);
  if (!(S * S == rhs)) {
    throw std::logic_error("build_rds4_graph: the product identity for S*S failed");
  }
  return s;
}

GeneratingSpec build_neofield_graph(std::uint64_t q, const CoveringConfig& config,
                                    std::uint64_t max_order) {
  const auto gds = neofield_gds(q);
  if (!config.group || config.group->order() != 25 || config.lambdas.size() != 3) {
    throw std::invalid_argument(
        "build_neofield_graph: covering config must live on a group of order 25 "
        "with three blocks");
  }
  const auto cover = check_cover(config);
  if (!cover.covered) {
    std::string msg =
        "build_neofield_graph: covering configuration fails; uncovered H indices:";
    for (const auto u : cover.uncovered) msg += " " + std::to_string(u);
    throw std::invalid_argument(msg);
  }

  const auto f = make_field(q);
  const auto un = static_cast<std::uint32_t>(q - 1);
  const auto pair_index = [un](std::uint32_t a, std::uint32_t b) {
    return (a - 1) * un + (b - 1);
  };
  auto dtil = gds.set;
  dtil.push_back(pair_index(1, 1));
  if (q % 2 == 1) dtil.push_back(pair_index(1, f->neg(1)));
  std::sort(dtil.begin(), dtil.end());

  GeneratingSpec s;
  s.base = gds.group;
  s.aux = config.group;
  s.group = direct_product(s.base, s.aux, max_order);
  for (const auto g : config.psi) {
    s.layers.emplace_back(dtil, g);
    s.layers.emplace_back(inverse_set(s.base, dtil), s.aux->inv(g));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto h : config.lambdas[i]) {
      s.layers.emplace_back(gds.subgroups[i].elements, h);
    }
  }
  s.provenance = "neofield q=" + std::to_string(q);
  s.claimed_degree = (q % 2 == 0) ? 8 * q - 6 : 8 * q - 4;
  assemble(s);
  if (s.set.size() > s.claimed_degree) {
    throw std::logic_error("build_neofield_graph: measured degree exceeds the claim");
  }

  // The augmented set must cover the base group against every exceptional
  // subgroup; this is what makes the (N_i, h) layers fill in G x {h'}.
  const auto whole = GroupRingElement::whole_group(s.base);
  const auto dt = GroupRingElement::from_subset(s.base, dtil);
  const auto dt_inv = dt.inv_image();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto ni = GroupRingElement::from_subset(s.base, gds.subgroups[i].elements);
    if (!GroupRingElement::leq(whole, dt * ni) ||
        !GroupRingElement::leq(whole, dt_inv * ni)) {
      throw std::logic_error("build_neofield_graph: augmented set misses part of G "
                             "against N_" +
                             std::to_string(i + 1));
    }
  }
  return s;
}

GeneratingSpec build_neofield_graph(std::uint64_t q) {
  return build_neofield_graph(q, corrected_cover_config());
}

GeneratingSpec build_dpds_graph(std::uint64_t q, std::uint64_t max_order) {
  if (q < 3) {
    throw std::invalid_argument("build_dpds_graph: q must be a prime power >= 3");
  }
  const auto gds = dpds(q);

  GeneratingSpec s;
  s.base = gds.group;
  s.aux = cyclic_group(6);
  s.group = direct_product(s.base, s.aux, max_order);
  s.layers = {{gds.set, 1},
              {inverse_set(s.base, gds.set), 5},
              {gds.subgroups[0].elements, 0},
              {gds.subgroups[1].elements, 3}};
  s.sporadic = {1, 5};  // (e_G, 1) and (e_G, -1)
  s.provenance = "dpds q=" + std::to_string(q);
  s.claimed_degree = 4 * q - 2;
  assemble(s);
  // The (N_1, 0) layer contributes the identity, which assemble() drops;
  // the loop-free degree then lands exactly on the quoted 4q-2.
  if (!s.dropped_identity || s.set.size() != s.claimed_degree) {
    throw std::logic_error("build_dpds_graph: expected degree 4q-2 after the "
                           "identity drop");
  }
  return s;
}

GeneratingSpec pad_to_degree(const GeneratingSpec& spec, std::uint64_t d) {
  const auto v = spec.group->order();
  if (d < spec.set.size() || d > v - 1) {
    throw std::out_of_range("pad_to_degree: target degree must lie in [|S|, order-1]");
  }
  if (d == spec.set.size()) return spec;

  GeneratingSpec s = spec;
  std::vector<char> in(v, 0);
  for (const auto x : s.set) in[x] = 1;
  const auto e = spec.group->identity();

  std::vector<std::uint32_t> involutions;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t x = 0; x < v; ++x) {
    if (x == e || in[x]) continue;
    const auto xi = spec.group->inv(x);
    if (xi == x) {
      involutions.push_back(x);
    } else if (x < xi) {
      pairs.emplace_back(x, xi);
    }
  }

  std::uint64_t deficit = d - s.set.size();
  std::size_t next_inv = 0, next_pair = 0;
  std::vector<std::uint32_t> added;
  if (deficit % 2 == 1) {
    if (involutions.empty()) {
      throw std::runtime_error(
          "pad_to_degree: odd deficit and no involution available");
    }
    added.push_back(involutions[next_inv++]);
    --deficit;
  }
  while (deficit > 0) {
    if (next_inv + 1 < involutions.size()) {
      added.push_back(involutions[next_inv++]);
      added.push_back(involutions[next_inv++]);
    } else if (next_pair < pairs.size()) {
      added.push_back(pairs[next_pair].first);
      added.push_back(pairs[next_pair].second);
      ++next_pair;
    } else {
      throw std::runtime_error(
          "pad_to_degree: not enough elements to reach the target degree");
    }
    deficit -= 2;
  }

  s.set.insert(s.set.end(), added.begin(), added.end());
  std::sort(s.set.begin(), s.set.end());
  s.sporadic.insert(s.sporadic.end(), added.begin(), added.end());
  s.provenance += " padded to d=" + std::to_string(d);
  return s;
}

GeneratingSpec best_for_degree(std::uint64_t d) {
  if (d < 6) throw std::invalid_argument("best_for_degree: d must be >= 6");

  struct Candidate {
    std::uint64_t order;
    bool twisted;
    std::uint64_t param;  // m or q
  };
  std::optional<Candidate> best;
  const auto consider = [&best](std::uint64_t order, bool twisted, std::uint64_t p) {
    if (!best || order > best->order) best = Candidate{order, twisted, p};
  };

  for (unsigned m = 1;; m += 2) {
    const auto q = ipow(2, m);
    const auto degree = 3 * q;
    if (degree > d) break;
    const auto order = 4 * q * q;
    if (order > kDefaultMaxGroupOrder) break;
    if (d > order - 1) continue;  // no room to pad
    consider(order, true, m);
  }
  for (const auto q : prime_powers_upto(d / 8 + 2)) {
    if (q < 3) continue;
    const auto degree = (q % 2 == 0) ? 8 * q - 8 : 8 * q - 6;  // measured, not claimed
    if (degree > d) continue;
    const auto order = 25 * (q - 1) * (q - 1);
    if (order > kDefaultMaxGroupOrder || d > order - 1) continue;
    consider(order, false, q);
  }
  if (!best) {
    throw std::runtime_error("best_for_degree: no base construction fits degree " +
                             std::to_string(d));
  }
  auto spec = best->twisted ? build_rds4_graph(static_cast<unsigned>(best->param))
                            : build_neofield_graph(best->param);
  return pad_to_degree(spec, d);
}

CayleyCertificate certify_spec(const GeneratingSpec& spec) {
  return certify(spec.group, spec.set, spec.provenance, spec.claimed_degree);
}

}  // namespace cayley2
