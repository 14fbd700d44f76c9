#include "cayley2/difference_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayley2/numtheory.hpp"

namespace cayley2 {

namespace {

// zone[g]: 0 off every exceptional subgroup, i >= 1 inside subgroup i (1-based).
// The identity gets zone 0 but is special-cased by callers.
std::vector<std::uint32_t> zone_map(const GdsDescriptor& d) {
  std::vector<std::uint32_t> zone(d.group->order(), 0);
  for (std::size_t i = 0; i < d.subgroups.size(); ++i) {
    for (const auto g : d.subgroups[i].elements) {
      if (g == d.group->identity()) continue;
      if (zone[g] != 0) {
        throw std::invalid_argument(
            "verify_gds: exceptional subgroups intersect beyond the identity");
      }
      zone[g] = static_cast<std::uint32_t>(i + 1);
    }
  }
  return zone;
}

void validate_descriptor(const GdsDescriptor& d) {
  if (!d.group) throw std::invalid_argument("verify_gds: null group");
  if (d.claim.v != d.group->order()) {
    throw std::invalid_argument("verify_gds: claimed v differs from the group order");
  }
  if (d.claim.k != d.set.size()) {
    throw std::invalid_argument("verify_gds: claimed k differs from |D|");
  }
  if (!std::is_sorted(d.set.begin(), d.set.end()) ||
      std::adjacent_find(d.set.begin(), d.set.end()) != d.set.end()) {
    throw std::invalid_argument("verify_gds: set must be sorted and duplicate-free");
  }
  for (const auto g : d.set) {
    if (g >= d.group->order()) {
      throw std::out_of_range("verify_gds: set element out of range");
    }
  }
  if (d.claim.exceptional.size() != d.subgroups.size()) {
    throw std::invalid_argument(
        "verify_gds: claimed subgroup count differs from the descriptor");
  }
  for (std::size_t i = 0; i < d.subgroups.size(); ++i) {
    if (!same_group(*d.subgroups[i].parent, *d.group)) {
      throw std::invalid_argument("verify_gds: subgroup parent mismatch");
    }
    if (d.subgroups[i].order() != d.claim.exceptional[i].first) {
      throw std::invalid_argument("verify_gds: claimed n_i differs from |N_i|");
    }
  }
}

// Difference multiset by direct enumeration of ordered pairs d1 != d2.
std::vector<std::int64_t> enumerate_differences(const GdsDescriptor& d) {
  std::vector<std::int64_t> cnt(d.group->order(), 0);
  for (const auto a : d.set) {
    for (const auto b : d.set) {
      if (a == b) continue;
      ++cnt[d.group->op(a, d.group->inv(b))];
    }
  }
  return cnt;
}

GroupRingElement subgroup_sum(const Subgroup& s) {
  return GroupRingElement::from_subset(s.parent, s.elements);
}

}  // namespace

std::string GdsReport::to_text() const {
  std::string out;
  out += std::string("ok: ") + (ok ? "yes" : "no") + "\n";
  out += "measured_lambda: ";
  out += measured_lambda ? std::to_string(*measured_lambda) : std::string("-");
  out += "\n";
  for (std::size_t i = 0; i < measured_exceptional.size(); ++i) {
    out += "measured_lambda_" + std::to_string(i + 1) + ": ";
    out += measured_exceptional[i] ? std::to_string(*measured_exceptional[i])
                                   : std::string("-");
    out += "\n";
  }
  for (const auto& w : witnesses) {
    out += "witness: element " + std::to_string(w.element) + " measured " +
           std::to_string(w.measured) + " expected " + std::to_string(w.expected) +
           "\n";
  }
  for (const auto& [label, elems] : deficiencies) {
    out += "deficiency " + label + " (size " + std::to_string(elems.size()) + "):";
    for (const auto g : elems) out += " " + std::to_string(g);
    out += "\n";
  }
  for (const auto& f : failures) out += "failure: " + f + "\n";
  return out;
}

GdsReport verify_gds(const GdsDescriptor& d) {
  validate_descriptor(d);
  const auto zone = zone_map(d);
  const auto& g = *d.group;
  const auto e = g.identity();

  const auto D = GroupRingElement::from_subset(d.group, d.set);
  const auto conv = D * D.inv_image();
  const auto enumerated = enumerate_differences(d);

  // The two routes must agree: the convolution additionally counts the k
  // diagonal pairs d1 == d2, all landing on the identity.
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const std::int64_t expect_conv =
        enumerated[i] + (i == e ? std::int64_t{d.claim.k} : 0);
    if (conv.coeff(i) != expect_conv) {
      throw std::logic_error("verify_gds: convolution and pair enumeration disagree");
    }
  }

  GdsReport r;
  r.measured_exceptional.assign(d.subgroups.size(), std::nullopt);

  std::optional<std::int64_t> generic;
  bool generic_mixed = false;
  std::vector<std::optional<std::int64_t>> per_zone(d.subgroups.size());
  std::vector<bool> zone_mixed(d.subgroups.size(), false);

  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const std::int64_t measured = conv.coeff(i);
    std::int64_t expected;
    if (i == e) {
      expected = d.claim.k;
    } else if (zone[i] > 0) {
      expected = d.claim.exceptional[zone[i] - 1].second;
      auto& cell = per_zone[zone[i] - 1];
      if (!cell) {
        cell = measured;
      } else if (*cell != measured) {
        zone_mixed[zone[i] - 1] = true;
      }
    } else {
      expected = d.claim.lambda;
      if (!generic) {
        generic = measured;
      } else if (*generic != measured) {
        generic_mixed = true;
      }
    }
    if (measured != expected) {
      r.witnesses.push_back({i, measured, expected});
    }
  }

  if (generic && !generic_mixed) r.measured_lambda = generic;
  for (std::size_t i = 0; i < per_zone.size(); ++i) {
    if (per_zone[i] && !zone_mixed[i]) r.measured_exceptional[i] = per_zone[i];
  }
  r.ok = r.witnesses.empty();
  return r;
}

namespace {

// Checks P == G - M for 0/1-valued P; returns the zero set through `m` and
// false when some coefficient exceeds 1.
bool is_partial_cover(const GroupRingElement& p, std::vector<std::uint32_t>* m) {
  m->clear();
  const auto v = p.group()->order();
  for (std::uint32_t i = 0; i < v; ++i) {
    const auto c = p.coeff(i);
    if (c < 0 || c > 1) return false;
    if (c == 0) m->push_back(i);
  }
  return true;
}

std::uint64_t derive_type_n(const GdsDescriptor& d, DesignType type) {
  const auto& ex = d.claim.exceptional;
  switch (type) {
    case DesignType::planar:
      return d.claim.k - static_cast<std::uint64_t>(d.claim.lambda);
    case DesignType::relative:
    case DesignType::affine:
      return d.claim.k;
    case DesignType::direct_product:
      if (ex[0].first != ex[1].first + 1) {
        throw std::invalid_argument(
            "check_type_equation: direct-product type expects |N1| = |N2| + 1");
      }
      return ex[0].first;
    case DesignType::neofield:
      if (ex[0].first != ex[1].first || ex[1].first != ex[2].first) {
        throw std::invalid_argument(
            "check_type_equation: neofield type expects equal subgroup orders");
      }
      return ex[0].first + 1;
  }
  throw std::logic_error("check_type_equation: unknown type");
}

unsigned expected_r(DesignType type) {
  switch (type) {
    case DesignType::planar:
      return 0;
    case DesignType::relative:
    case DesignType::affine:
      return 1;
    case DesignType::direct_product:
      return 2;
    case DesignType::neofield:
      return 3;
  }
  throw std::logic_error("check_type_equation: unknown type");
}

}  // namespace

GdsReport check_type_equation(const GdsDescriptor& d, DesignType type) {
  validate_descriptor(d);
  if (d.subgroups.size() != expected_r(type)) {
    throw std::invalid_argument(
        "check_type_equation: subgroup count does not match the design type");
  }
  if (type == DesignType::planar) {
    if (d.claim.lambda < 1 || d.claim.k < d.claim.lambda) {
      throw std::invalid_argument(
          "check_type_equation: planar type requires 1 <= lambda <= k");
    }
  } else {
    if (d.claim.lambda != 1) {
      throw std::invalid_argument("check_type_equation: this type requires lambda = 1");
    }
    for (const auto& [n_i, l_i] : d.claim.exceptional) {
      if (l_i != 0) {
        throw std::invalid_argument("check_type_equation: this type requires lambda_i = 0");
      }
    }
  }

  GdsReport r = verify_gds(d);
  const std::uint64_t n = derive_type_n(d, type);
  const auto& g = d.group;
  const auto e = g->identity();

  const auto D = GroupRingElement::from_subset(g, d.set);
  const auto Dinv = D.inv_image();
  const auto G = GroupRingElement::whole_group(g);

  // The displayed equation: D*D^(-1) = n.e + lambda.G - sum N_i.
  {
    auto rhs = G.scaled(d.claim.lambda) +
               GroupRingElement::singleton(g, e, static_cast<std::int64_t>(n));
    for (const auto& s : d.subgroups) rhs -= subgroup_sum(s);
    if (!(D * Dinv == rhs)) {
      r.failures.push_back("displayed difference equation does not hold");
    }
  }

  auto check_exact_cover = [&](const GroupRingElement& p, const std::string& label) {
    if (!(p == G)) r.failures.push_back(label + " != G");
  };
  auto check_deficient_cover = [&](const GroupRingElement& p, const std::string& label) {
    std::vector<std::uint32_t> m;
    if (!is_partial_cover(p, &m)) {
      r.failures.push_back(label + " has a coefficient outside {0,1}");
      return;
    }
    r.deficiencies.emplace_back(label, std::move(m));
  };

  switch (type) {
    case DesignType::planar:
      break;
    case DesignType::relative: {
      const auto N = subgroup_sum(d.subgroups[0]);
      check_exact_cover(D * N, "D*N");
      check_exact_cover(Dinv * N, "D^(-1)*N");
      break;
    }
    case DesignType::affine: {
      const auto N = subgroup_sum(d.subgroups[0]);
      check_deficient_cover(D * N, "D*N");
      check_deficient_cover(Dinv * N, "D^(-1)*N");
      break;
    }
    case DesignType::direct_product: {
      const auto N1 = subgroup_sum(d.subgroups[0]);
      const auto N2 = subgroup_sum(d.subgroups[1]);
      check_exact_cover(D * N1, "D*N1");
      check_exact_cover(Dinv * N1, "D^(-1)*N1");
      if (!(D * N2 == G - N2)) r.failures.push_back("D*N2 != G - N2");
      if (!(Dinv * N2 == G - N2)) r.failures.push_back("D^(-1)*N2 != G - N2");
      check_exact_cover(N1 * N2, "N1*N2");
      break;
    }
    case DesignType::neofield: {
      for (std::size_t i = 0; i < 3; ++i) {
        const auto Ni = subgroup_sum(d.subgroups[i]);
        const auto tag = std::to_string(i + 1);
        check_deficient_cover(D * Ni, "D*N" + tag);
        check_deficient_cover(Dinv * Ni, "D^(-1)*N" + tag);
        for (std::size_t j = i + 1; j < 3; ++j) {
          const auto Nj = subgroup_sum(d.subgroups[j]);
          check_exact_cover(Ni * Nj, "N" + tag + "*N" + std::to_string(j + 1));
        }
      }
      break;
    }
  }

  r.ok = r.ok && r.failures.empty();
  return r;
}

GdsDescriptor neofield_gds(std::uint64_t q) {
  if (q < 3) throw std::invalid_argument("neofield_gds: q must be a prime power >= 3");
  const auto f = make_field(q);
  const auto u = unit_group(f);
  const auto g = direct_product(u, u);
  const std::uint32_t un = static_cast<std::uint32_t>(q - 1);

  // Field index (a, b), both nonzero, sits at (a-1)*(q-1) + (b-1).
  const auto pair_index = [un](std::uint32_t a, std::uint32_t b) {
    return (a - 1) * un + (b - 1);
  };

  GdsDescriptor d;
  d.group = g;
  for (std::uint32_t x = 2; x < q; ++x) {
    const std::uint32_t y = f->sub(1, x);  // nonzero because x != 1
    d.set.push_back(pair_index(x, y));
  }
  std::sort(d.set.begin(), d.set.end());

  std::vector<std::uint32_t> axis1, axis2, diag;
  for (std::uint32_t a = 1; a < q; ++a) {
    axis1.push_back(pair_index(a, 1));
    axis2.push_back(pair_index(1, a));
    diag.push_back(pair_index(a, a));
  }
  d.subgroups.emplace_back(g, std::move(axis1));
  d.subgroups.emplace_back(g, std::move(axis2));
  d.subgroups.emplace_back(g, std::move(diag));

  d.claim.v = static_cast<std::uint64_t>(un) * un;
  d.claim.k = static_cast<std::uint32_t>(q - 2);
  d.claim.lambda = 1;
  d.claim.exceptional = {{q - 1, 0}, {q - 1, 0}, {q - 1, 0}};
  return d;
}

GdsDescriptor twisted_rds(unsigned m, std::uint64_t max_order) {
  const auto g = twisted_group(m, max_order);
  const std::uint32_t q = static_cast<std::uint32_t>(ipow(2, m));

  GdsDescriptor d;
  d.group = g;
  for (std::uint32_t x = 0; x < q; ++x) d.set.push_back(x * q);  // (x, 0)
  std::sort(d.set.begin(), d.set.end());

  std::vector<std::uint32_t> n;
  for (std::uint32_t b = 0; b < q; ++b) n.push_back(b);  // (0, b)
  d.subgroups.emplace_back(g, std::move(n));

  d.claim.v = std::uint64_t{q} * q;
  d.claim.k = q;
  d.claim.lambda = 1;
  d.claim.exceptional = {{q, 0}};
  return d;
}

GdsDescriptor quadratic_rds(std::uint64_t q) {
  const auto f = make_field(q);
  if (f->characteristic() == 2) {
    throw std::invalid_argument("quadratic_rds: q must be odd");
  }
  const auto a = additive_group(f);
  const auto g = direct_product(a, a);
  const std::uint32_t qq = static_cast<std::uint32_t>(q);

  GdsDescriptor d;
  d.group = g;
  for (std::uint32_t x = 0; x < qq; ++x) {
    d.set.push_back(x * qq + f->mul(x, x));  // (x, x^2)
  }
  std::sort(d.set.begin(), d.set.end());

  std::vector<std::uint32_t> n;
  for (std::uint32_t b = 0; b < qq; ++b) n.push_back(b);  // (0, b)
  d.subgroups.emplace_back(g, std::move(n));

  d.claim.v = q * q;
  d.claim.k = qq;
  d.claim.lambda = 1;
  d.claim.exceptional = {{q, 0}};
  return d;
}

GdsDescriptor dpds(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("dpds: q must be a prime power >= 2");
  const auto f = make_field(q);
  const auto g = direct_product(additive_group(f), unit_group(f));
  const std::uint32_t un = static_cast<std::uint32_t>(q - 1);

  GdsDescriptor d;
  d.group = g;
  for (std::uint32_t x = 1; x < q; ++x) {
    d.set.push_back(x * un + (x - 1));  // (x, x), second coordinate as unit index
  }
  std::sort(d.set.begin(), d.set.end());

  std::vector<std::uint32_t> n1, n2;
  for (std::uint32_t x = 0; x < q; ++x) n1.push_back(x * un);  // (x, 1)
  for (std::uint32_t j = 0; j < un; ++j) n2.push_back(j);      // (0, u)
  d.subgroups.emplace_back(g, std::move(n1));
  d.subgroups.emplace_back(g, std::move(n2));

  d.claim.v = q * (q - 1);
  d.claim.k = un;
  d.claim.lambda = 1;
  d.claim.exceptional = {{q, 0}, {q - 1, 0}};
  return d;
}

DoubleCoverCheck check_double_cover(unsigned m) {
  const auto d = twisted_rds(m);
  const auto D = GroupRingElement::from_subset(d.group, d.set);
  const auto Dinv = D.inv_image();
  auto defect = D * D + Dinv * Dinv - GroupRingElement::whole_group(d.group).scaled(2);
  DoubleCoverCheck out{defect.is_zero(), std::move(defect)};
  return out;
}

}  // namespace cayley2
