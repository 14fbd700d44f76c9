#include "cayley2/covering.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cayley2/numtheory.hpp"

namespace cayley2 {

namespace {

void validate_config(const CoveringConfig& c) {
  if (!c.group) throw std::invalid_argument("check_cover: null group");
  const auto n = c.group->order();
  if (c.psi.empty()) {
    throw std::invalid_argument("check_cover: Psi must be nonempty");
  }
  const auto validate_set = [n](const std::vector<std::uint32_t>& set,
                                const std::string& label) {
    std::vector<char> seen(n, 0);
    for (const auto h : set) {
      if (h >= n) {
        throw std::out_of_range("check_cover: " + label + " element out of range");
      }
      if (seen[h]) {
        throw std::invalid_argument("check_cover: " + label + " has duplicates");
      }
      seen[h] = 1;
    }
  };
  validate_set(c.psi, "Psi");
  for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
    const auto label = "Lambda_" + std::to_string(i + 1);
    const auto& block = c.lambdas[i];
    validate_set(block, label);
    for (const auto h : block) {
      const auto hinv = c.group->inv(h);
      if (std::find(block.begin(), block.end(), hinv) == block.end()) {
        throw std::invalid_argument("check_cover: " + label + " is not inverse-closed");
      }
    }
  }
}

}  // namespace

unsigned config_size(const CoveringConfig& c) {
  std::size_t s = 2 * c.psi.size();
  for (const auto& block : c.lambdas) s += block.size();
  return static_cast<unsigned>(s);
}

GroupRingElement cover_sum(const CoveringConfig& c) {
  validate_config(c);
  const auto psi = GroupRingElement::from_subset(c.group, c.psi);
  const auto psi_inv = psi.inv_image();

  std::vector<GroupRingElement> blocks;
  blocks.reserve(c.lambdas.size());
  for (const auto& l : c.lambdas) {
    blocks.push_back(GroupRingElement::from_subset(c.group, l));
  }

  auto sum = psi * psi_inv;
  for (const auto& b : blocks) {
    sum += psi * b;
    sum += psi_inv * b;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i != j) sum += blocks[i] * blocks[j];
    }
  }
  return sum;
}

CoverResult check_cover(const CoveringConfig& c) {
  return cover_sum(c).covers_group();
}

namespace {

// Partitions of `total` into nonincreasing parts, each <= maxpart.
void partitions_desc(unsigned total, unsigned maxpart,
                     std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(total, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_desc(total - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> abelian_factorizations(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("abelian_factorizations: n must be >= 1");
  if (n == 1) return {{1}};

  std::vector<std::pair<std::uint64_t, unsigned>> pf;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    unsigned a = 0;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    pf.emplace_back(p, a);
  }
  if (m > 1) pf.emplace_back(m, 1);

  std::vector<std::vector<std::vector<unsigned>>> parts(pf.size());
  for (std::size_t i = 0; i < pf.size(); ++i) {
    std::vector<unsigned> cur;
    partitions_desc(pf[i].second, pf[i].second, cur, parts[i]);
  }

  // One abelian group per choice of partition of each prime exponent; the
  // invariant factors come from aligning the partitions largest-to-largest.
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::size_t> pick(pf.size(), 0);
  while (true) {
    std::size_t t = 0;
    for (std::size_t i = 0; i < pf.size(); ++i) {
      t = std::max(t, parts[i][pick[i]].size());
    }
    std::vector<std::uint64_t> chain(t, 1);
    for (std::size_t i = 0; i < pf.size(); ++i) {
      const auto& part = parts[i][pick[i]];
      for (std::size_t j = 0; j < part.size(); ++j) {
        chain[j] *= ipow(pf[i].first, part[j]);
      }
    }
    std::reverse(chain.begin(), chain.end());
    out.push_back(std::move(chain));

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == parts[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr abelian_group(const std::vector<std::uint64_t>& factors,
                       std::uint64_t max_order) {
  if (factors.empty()) {
    throw std::invalid_argument("abelian_group: empty factor list");
  }
  if (factors.size() == 1 && factors[0] == 1) return cyclic_group(1, max_order);
  GroupPtr g;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw std::invalid_argument("abelian_group: factors must be >= 2");
    }
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0) {
      throw std::invalid_argument("abelian_group: each factor must divide the next");
    }
    auto c = cyclic_group(factors[i], max_order);
    g = g ? direct_product(std::move(g), std::move(c), max_order) : std::move(c);
  }
  return g;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? UINT64_MAX : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

// Multisets of size k drawn from `options` distinct items.
std::uint64_t tuple_count(std::size_t options, unsigned k) {
  try {
    return binomial(static_cast<unsigned>(options + k - 1), k);
  } catch (const std::overflow_error&) {
    return UINT64_MAX;
  }
}

// Per-group precomputation shared by all (H, Psi) jobs of that group: full
// operation/inverse tables (the search groups are tiny) and the candidate
// Lambda blocks, i.e. all inverse-closed subsets of size <= max_theta,
// assembled from negation orbits and sorted lexicographically.
struct GroupCtx {
  GroupPtr group;
  std::vector<std::uint64_t> factors;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> op;
  std::vector<std::uint32_t> inv;
  std::vector<std::vector<std::uint32_t>> options;
  std::vector<std::vector<std::uint32_t>> psis;
};

GroupCtx make_ctx(std::vector<std::uint64_t> factors, const SearchLimits& limits) {
  GroupCtx ctx;
  ctx.group = abelian_group(factors);
  ctx.factors = std::move(factors);
  ctx.n = static_cast<std::uint32_t>(ctx.group->order());

  ctx.op.resize(std::size_t{ctx.n} * ctx.n);
  ctx.inv.resize(ctx.n);
  for (std::uint32_t a = 0; a < ctx.n; ++a) {
    ctx.inv[a] = ctx.group->inv(a);
    for (std::uint32_t b = 0; b < ctx.n; ++b) {
      ctx.op[std::size_t{a} * ctx.n + b] = ctx.group->op(a, b);
    }
  }

  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t h = 0; h < ctx.n; ++h) {
    if (h > ctx.inv[h]) continue;
    if (h == ctx.inv[h]) {
      orbits.push_back({h});
    } else {
      orbits.push_back({h, ctx.inv[h]});
    }
  }

  std::vector<std::uint32_t> cur;
  const std::function<void(std::size_t, unsigned)> pick_orbits =
      [&](std::size_t start, unsigned budget) {
        auto sorted = cur;
        std::sort(sorted.begin(), sorted.end());
        ctx.options.push_back(std::move(sorted));
        for (std::size_t i = start; i < orbits.size(); ++i) {
          if (orbits[i].size() > budget) continue;
          cur.insert(cur.end(), orbits[i].begin(), orbits[i].end());
          pick_orbits(i + 1, budget - static_cast<unsigned>(orbits[i].size()));
          cur.resize(cur.size() - orbits[i].size());
        }
      };
  pick_orbits(0, limits.max_theta);
  std::sort(ctx.options.begin(), ctx.options.end());

  std::vector<std::uint32_t> set;
  const std::function<void(std::uint32_t)> pick_psi = [&](std::uint32_t start) {
    for (std::uint32_t h = start; h < ctx.n; ++h) {
      set.push_back(h);
      ctx.psis.push_back(set);
      if (set.size() < limits.max_psi) pick_psi(h + 1);
      set.pop_back();
    }
  };
  if (limits.max_psi > 0) pick_psi(0);
  return ctx;
}

bool hit_less(const SearchHit& a, const SearchHit& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.invariant_factors != b.invariant_factors) return a.invariant_factors < b.invariant_factors;
  if (a.config.psi != b.config.psi) return a.config.psi < b.config.psi;
  return a.config.lambdas < b.config.lambdas;
}

void sort_and_truncate(std::vector<SearchHit>& hits, std::size_t keep) {
  std::stable_sort(hits.begin(), hits.end(), hit_less);
  if (hits.size() > keep) hits.resize(keep);
}

// Scans every canonical Lambda tuple for one fixed (H, Psi).  Uses a stamped
// scratch buffer instead of group-ring arithmetic; survivors are re-verified
// through check_cover by the caller.
std::vector<SearchHit> run_job(const GroupCtx& ctx, std::size_t psi_idx,
                               const SearchLimits& limits) {
  const auto& psi = ctx.psis[psi_idx];
  const std::uint32_t n = ctx.n;
  const auto op = [&](std::uint32_t a, std::uint32_t b) {
    return ctx.op[std::size_t{a} * n + b];
  };

  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::uint32_t covered = 0;
  const auto mark = [&](std::uint32_t x) {
    if (stamp[x] != epoch) {
      stamp[x] = epoch;
      ++covered;
    }
  };

  // Elements contributed by Psi*Psi^(-1) — shared by every tuple.
  std::vector<std::uint32_t> base;
  for (const auto a : psi) {
    for (const auto b : psi) base.push_back(op(a, ctx.inv[b]));
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  // Elements contributed by Psi*Lambda + Psi^(-1)*Lambda for each candidate
  // block — also tuple-independent.
  std::vector<std::vector<std::uint32_t>> with_psi(ctx.options.size());
  for (std::size_t o = 0; o < ctx.options.size(); ++o) {
    auto& v = with_psi[o];
    for (const auto a : psi) {
      for (const auto l : ctx.options[o]) {
        v.push_back(op(a, l));
        v.push_back(op(ctx.inv[a], l));
      }
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  const auto psi_sz = static_cast<std::uint64_t>(psi.size());
  std::vector<SearchHit> out;
  std::vector<std::size_t> idx(limits.k, 0);

  const std::function<void(unsigned, std::size_t)> scan = [&](unsigned block,
                                                              std::size_t min_opt) {
    if (block == limits.k) {
      std::uint64_t total = 0, squares = 0;
      for (const auto o : idx) {
        const auto t = static_cast<std::uint64_t>(ctx.options[o].size());
        total += t;
        squares += t * t;
      }
      // Coefficient mass of the covering sum; below n it cannot cover.
      const std::uint64_t mass =
          psi_sz * psi_sz + 2 * psi_sz * total + (total * total - squares);
      if (mass < n) return;

      if (++epoch == 0) {
        std::fill(stamp.begin(), stamp.end(), 0);
        epoch = 1;
      }
      covered = 0;
      for (const auto x : base) mark(x);
      for (const auto o : idx) {
        for (const auto x : with_psi[o]) mark(x);
      }
      for (unsigned i = 0; i < limits.k && covered < n; ++i) {
        for (unsigned j = i + 1; j < limits.k; ++j) {
          for (const auto a : ctx.options[idx[i]]) {
            for (const auto b : ctx.options[idx[j]]) mark(op(a, b));
          }
        }
      }
      if (covered != n) return;

      SearchHit hit;
      hit.config.group = ctx.group;
      hit.config.psi = psi;
      for (const auto o : idx) hit.config.lambdas.push_back(ctx.options[o]);
      hit.invariant_factors = ctx.factors;
      hit.s = config_size(hit.config);
      hit.score = boost::rational<long long>(
          static_cast<long long>(n),
          static_cast<long long>(hit.s) * static_cast<long long>(hit.s));
      out.push_back(std::move(hit));
      if (out.size() > 4 * limits.max_results + 16) {
        sort_and_truncate(out, limits.max_results);
      }
      return;
    }
    for (std::size_t o = min_opt; o < ctx.options.size(); ++o) {
      idx[block] = o;
      scan(block + 1, o);
    }
  };
  scan(0, 0);

  sort_and_truncate(out, limits.max_results);
  return out;
}

}  // namespace

std::vector<SearchHit> search_cover(const SearchLimits& limits) {
  if (limits.max_order == 0) {
    throw std::invalid_argument("search_cover: max_order must be >= 1");
  }
  if (limits.max_psi == 0) {
    throw std::invalid_argument("search_cover: max_psi must be >= 1");
  }

  std::vector<GroupCtx> ctxs;
  for (std::uint64_t n = 1; n <= limits.max_order; ++n) {
    for (auto& chain : abelian_factorizations(n)) {
      ctxs.push_back(make_ctx(std::move(chain), limits));
    }
  }

  std::uint64_t estimated = 0;
  for (const auto& ctx : ctxs) {
    estimated = sat_add(
        estimated, sat_mul(ctx.psis.size(), tuple_count(ctx.options.size(), limits.k)));
  }
  if (estimated > limits.max_configs) {
    throw std::length_error(
        "search_cover: estimated " + std::to_string(estimated) +
        " configurations exceed the limit of " + std::to_string(limits.max_configs));
  }

  struct Job {
    std::size_t ctx;
    std::size_t psi;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < ctxs.size(); ++c) {
    for (std::size_t p = 0; p < ctxs[c].psis.size(); ++p) jobs.push_back({c, p});
  }

  // Fixed job list + slot-per-job results keep the merge independent of
  // thread scheduling.
  std::vector<std::vector<SearchHit>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto worker = [&] {
    try {
      while (true) {
        const auto i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        results[i] = run_job(ctxs[jobs[i].ctx], jobs[i].psi, limits);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };

  unsigned nthreads = limits.threads ? limits.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(
      std::min<std::size_t>(nthreads, std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<SearchHit> all;
  for (auto& r : results) {
    all.insert(all.end(), std::make_move_iterator(r.begin()),
               std::make_move_iterator(r.end()));
  }
  sort_and_truncate(all, limits.max_results);

  for (const auto& hit : all) {
    if (!check_cover(hit.config).covered) {
      throw std::logic_error(
          "search_cover: fast scan and group-ring verification disagree");
    }
  }
  return all;
}

namespace {

std::string join_indices(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_factors(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string search_hits_tsv(const std::vector<SearchHit>& hits, unsigned k) {
  std::string out = "H\tpsi";
  for (unsigned i = 1; i <= k; ++i) out += "\tlambda_" + std::to_string(i);
  out += "\ts\tscore\n";
  for (const auto& h : hits) {
    out += join_factors(h.invariant_factors);
    out += "\t" + join_indices(h.config.psi);
    for (unsigned i = 0; i < k; ++i) {
      out += "\t";
      if (i < h.config.lambdas.size()) out += join_indices(h.config.lambdas[i]);
    }
    out += "\t" + std::to_string(h.s);
    out += "\t" + std::to_string(h.score.numerator()) + "/" +
           std::to_string(h.score.denominator()) + "\n";
  }
  return out;
}

boost::rational<long long> tau_bound(unsigned s) {
  if (s == 0) throw std::invalid_argument("tau_bound: s must be >= 1");
  const long long ss = static_cast<long long>(s);
  const long long a = 4 * ss - 1;
  return {a * a + 40, 40 * ss * ss};
}

boost::rational<long long> tau_exhaustive(unsigned s) {
  if (s < 2 || s > 64) {
    throw std::invalid_argument("tau_exhaustive: s must lie in [2, 64]");
  }
  const long long ss = static_cast<long long>(s);
  boost::rational<long long> best{0};
  for (long long psi = 1; 2 * psi <= ss; ++psi) {
    const long long theta = ss - 2 * psi;
    const long long num = 1 + psi * (psi - 1) + psi * (psi + 1) / 2 + 2 * psi * theta;
    best = std::max(best, boost::rational<long long>(num, ss * ss));
  }
  // The integer maximum sits under the real-relaxation envelope by
  // construction; a violation means the formulas drifted apart.
  if (best > tau_bound(s)) {
    throw std::logic_error("tau_exhaustive: exceeded the closed-form bound");
  }
  return best;
}

}  // namespace cayley2
