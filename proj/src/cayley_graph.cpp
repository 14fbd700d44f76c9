#include "cayley2/cayley_graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cayley2/bounds.hpp"
#include "cayley2/group_ring.hpp"

namespace cayley2 {

namespace {

void validate_generators(const FiniteGroup& g, const std::vector<std::uint32_t>& s) {
  const auto e = g.identity();
  std::vector<char> seen(g.order(), 0);
  for (const auto x : s) {
    if (x >= g.order()) {
      throw std::out_of_range("generator index outside the group");
    }
    if (x == e) {
      throw std::invalid_argument("generating set contains the identity");
    }
    if (seen[x]) {
      throw std::invalid_argument("generating set contains a duplicate");
    }
    seen[x] = 1;
  }
  for (const auto x : s) {
    if (!seen[g.inv(x)]) {
      throw std::invalid_argument("generating set is not symmetric");
    }
  }
}

}  // namespace

BfsResult bfs_from_identity(const FiniteGroup& g,
                            const std::vector<std::uint32_t>& s) {
  validate_generators(g, s);
  const auto n = g.order();
  std::vector<char> visited(n, 0);
  std::vector<std::uint32_t> frontier{g.identity()}, next;
  visited[g.identity()] = 1;

  BfsResult r;
  r.reached = 1;
  while (!frontier.empty()) {
    next.clear();
    for (const auto u : frontier) {
      for (const auto x : s) {
        const auto v = g.op(u, x);
        if (!visited[v]) {
          visited[v] = 1;
          next.push_back(v);
        }
      }
    }
    if (!next.empty()) {
      ++r.eccentricity;
      r.reached += next.size();
    }
    frontier.swap(next);
  }
  r.connected = (r.reached == n);
  return r;
}

unsigned diameter_bfs(const FiniteGroup& g, const std::vector<std::uint32_t>& s) {
  const auto r = bfs_from_identity(g, s);
  if (!r.connected) {
    throw std::runtime_error("diameter_bfs: generating set reaches only " +
                             std::to_string(r.reached) + " of " +
                             std::to_string(g.order()) + " vertices");
  }
  return r.eccentricity;
}

int diameter_groupring(GroupPtr g, const std::vector<std::uint32_t>& s) {
  validate_generators(*g, s);
  if (g->order() == 1) return 0;
  const auto e = GroupRingElement::singleton(g, g->identity());
  const auto S = GroupRingElement::from_subset(g, s);
  if ((e + S).covers_group().covered) return 1;
  if ((e + S + S * S).covers_group().covered) return 2;
  return kDiameterMoreThanTwo;
}

unsigned all_pairs_diameter(const FiniteGroup& g,
                            const std::vector<std::uint32_t>& s) {
  const auto n = g.order();
  if (n > 2000) {
    throw std::length_error("all_pairs_diameter: group order exceeds 2000");
  }
  validate_generators(g, s);

  unsigned diameter = 0;
  std::vector<char> visited(n);
  std::vector<std::uint32_t> frontier, next;
  for (std::uint32_t src = 0; src < n; ++src) {
    std::fill(visited.begin(), visited.end(), 0);
    frontier.assign(1, src);
    visited[src] = 1;
    std::uint64_t reached = 1;
    unsigned ecc = 0;
    while (!frontier.empty()) {
      next.clear();
      for (const auto u : frontier) {
        for (const auto x : s) {
          const auto v = g.op(u, x);
          if (!visited[v]) {
            visited[v] = 1;
            next.push_back(v);
          }
        }
      }
      if (!next.empty()) {
        ++ecc;
        reached += next.size();
      }
      frontier.swap(next);
    }
    if (reached != n) {
      throw std::runtime_error("all_pairs_diameter: graph is disconnected");
    }
    diameter = std::max(diameter, ecc);
  }
  return diameter;
}

CayleyCertificate certify(GroupPtr g, const std::vector<std::uint32_t>& s,
                          const std::string& provenance,
                          std::uint64_t claimed_degree) {
  const auto diam = diameter_bfs(*g, s);
  const auto ring = diameter_groupring(g, s);
  const int bfs_class = diam <= 2 ? static_cast<int>(diam) : kDiameterMoreThanTwo;
  if (bfs_class != ring) {
    throw std::logic_error("certify: BFS diameter " + std::to_string(diam) +
                           " disagrees with the group-ring decision " +
                           std::to_string(ring));
  }
  if (diam <= 2 && diam >= 1) {
    const auto v = g->order();
    const auto d = static_cast<std::uint64_t>(s.size());
    if (v > moore(d, diam)) {
      throw std::logic_error("certify: order exceeds the degree-diameter ceiling");
    }
    // Every group this library constructs is abelian (cyclic pieces, additive
    // and unit groups of fields, and the twisted family, which is abelian in
    // characteristic 2), so the tighter abelian-Cayley ceiling must also hold.
    if (diam == 2 && v > ac_upper(d)) {
      throw std::logic_error("certify: order exceeds the abelian diameter-2 ceiling");
    }
  }

  CayleyCertificate cert;
  cert.group = g->describe();
  cert.generators = s;
  std::sort(cert.generators.begin(), cert.generators.end());
  cert.order = g->order();
  cert.degree = s.size();
  cert.diameter = diam;
  cert.provenance = provenance;
  cert.methods = "bfs,groupring";
  cert.claimed_degree = claimed_degree;
  return cert;
}

std::string edges_text(const FiniteGroup& g, const std::vector<std::uint32_t>& s) {
  validate_generators(g, s);
  std::string out;
  std::vector<std::uint32_t> nbrs;
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    nbrs.clear();
    for (const auto x : s) {
      const auto v = g.op(u, x);
      if (v > u) nbrs.push_back(v);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (const auto v : nbrs) {
      out += std::to_string(u);
      out += ' ';
      out += std::to_string(v);
      out += '\n';
    }
  }
  return out;
}

namespace {

std::string join_generators(const std::vector<std::uint32_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

void require_verified(const CayleyCertificate& cert, const char* what) {
  if (cert.methods.empty()) {
    throw std::invalid_argument(std::string(what) +
                                ": refusing to export an unverified certificate");
  }
}

}  // namespace

std::string certificate_text(const CayleyCertificate& cert) {
  std::string out;
  out += "group: " + cert.group + "\n";
  out += "generators: " + join_generators(cert.generators) + "\n";
  out += "order: " + std::to_string(cert.order) + "\n";
  out += "degree: " + std::to_string(cert.degree) + "\n";
  out += "diameter: " + std::to_string(cert.diameter) + "\n";
  out += "provenance: " + cert.provenance + "\n";
  out += "methods: " + cert.methods + "\n";
  out += "claimed_degree: " + std::to_string(cert.claimed_degree) + "\n";
  return out;
}

void write_certificate(const CayleyCertificate& cert, const std::string& path) {
  require_verified(cert, "write_certificate");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_certificate: cannot open " + path);
  f << certificate_text(cert);
  if (!f) throw std::runtime_error("write_certificate: write failed for " + path);
}

void export_edges(const CayleyCertificate& cert, const std::string& path) {
  require_verified(cert, "export_edges");
  const auto g = parse_group(cert.group);
  if (g->order() != cert.order) {
    throw std::logic_error("export_edges: certificate order does not match its group");
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("export_edges: cannot open " + path);
  f << edges_text(*g, cert.generators);
  if (!f) throw std::runtime_error("export_edges: write failed for " + path);
}

CayleyCertificate read_certificate(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_certificate: cannot open " + path);

  CayleyCertificate cert;
  std::string line;
  const auto take = [&](const char* key) {
    if (!std::getline(f, line)) {
      throw std::runtime_error("read_certificate: malformed certificate (missing " +
                               std::string(key) + ")");
    }
    const std::string prefix = std::string(key) + ": ";
    if (line.rfind(prefix, 0) != 0) {
      throw std::runtime_error("read_certificate: malformed certificate (expected " +
                               std::string(key) + ")");
    }
    return line.substr(prefix.size());
  };
  const auto as_u64 = [](const std::string& v) {
    std::size_t pos = 0;
    const auto out = std::stoull(v, &pos);
    if (pos != v.size()) {
      throw std::runtime_error("read_certificate: malformed certificate (bad number)");
    }
    return out;
  };

  cert.group = take("group");
  const auto gens = take("generators");
  std::stringstream ss(gens);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) {
      cert.generators.push_back(static_cast<std::uint32_t>(as_u64(tok)));
    }
  }
  cert.order = as_u64(take("order"));
  cert.degree = as_u64(take("degree"));
  cert.diameter = static_cast<unsigned>(as_u64(take("diameter")));
  cert.provenance = take("provenance");
  cert.methods = take("methods");
  cert.claimed_degree = as_u64(take("claimed_degree"));
  if (cert.degree != cert.generators.size()) {
    throw std::runtime_error(
        "read_certificate: malformed certificate (degree != generator count)");
  }
  return cert;
}

}  // namespace cayley2
