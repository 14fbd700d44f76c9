#include "cayley2/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayley2/numtheory.hpp"

namespace cayley2 {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* ctx) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error(std::string(ctx) + ": product overflows");
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* ctx) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error(std::string(ctx) + ": sum overflows");
  }
  return r;
}

}  // namespace

std::uint64_t moore(std::uint64_t d, unsigned k) {
  if (d < 2 || k < 1) {
    throw std::invalid_argument("moore: requires d >= 2 and k >= 1");
  }
  if (d == 2) return 2 * std::uint64_t{k} + 1;
  // (d-1)^k - 1 is divisible by d-2 since d-1 == 1 (mod d-2).
  const auto geometric = (ipow(d - 1, k) - 1) / (d - 2);
  return checked_add(1, checked_mul(d, geometric, "moore"), "moore");
}

std::uint64_t ac_upper(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("ac_upper: requires d >= 1");
  const auto half = checked_mul(d, d, "ac_upper") / 2;
  return checked_add(half, d + 1, "ac_upper");
}

std::uint64_t df_upper(std::uint64_t delta, std::uint64_t k) {
  if (delta < 1 || k < 1) {
    throw std::invalid_argument("df_upper: requires delta >= 1 and k >= 1");
  }
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= std::min(delta, k); ++i) {
    const auto term = checked_mul(
        ipow(2, static_cast<unsigned>(i)),
        checked_mul(binomial(delta, i), binomial(k, i), "df_upper"), "df_upper");
    total = checked_add(total, term, "df_upper");
  }
  return total;
}

std::vector<BoundRow> table(std::uint64_t d_lo, std::uint64_t d_hi,
                            const std::vector<CayleyCertificate>& certs) {
  if (d_lo < 2 || d_lo > d_hi) {
    throw std::invalid_argument("table: requires 2 <= d_lo <= d_hi");
  }
  for (const auto& c : certs) {
    if (c.diameter > 2) {
      throw std::invalid_argument(
          "table: certificate with diameter > 2 is not a diameter-2 lower bound");
    }
  }

  std::vector<BoundRow> rows;
  rows.reserve(d_hi - d_lo + 1);
  for (std::uint64_t d = d_lo; d <= d_hi; ++d) {
    BoundRow row;
    row.d = d;
    row.moore_bound = moore(d, 2);
    row.ac_bound = ac_upper(d);
    if (d % 2 == 0) row.df_bound = df_upper(d / 2, 2);
    for (const auto& c : certs) {
      if (c.degree != d) continue;
      if (!row.best_order || c.order > *row.best_order) {
        row.best_order = c.order;
        row.construction = c.provenance;
      }
    }
    if (row.ac_bound > row.moore_bound) {
      throw std::logic_error("table: abelian ceiling exceeds the Moore ceiling");
    }
    if (row.best_order) {
      if (*row.best_order > row.ac_bound ||
          (row.df_bound && *row.best_order > *row.df_bound)) {
        throw std::logic_error("table: certified order at degree " +
                               std::to_string(d) + " exceeds an upper bound");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_tsv(const std::vector<BoundRow>& rows) {
  std::string out = "d\tk\tmoore\tac_upper\tdf_upper\tbest_order\tconstruction\n";
  for (const auto& r : rows) {
    out += std::to_string(r.d);
    out += '\t';
    out += std::to_string(r.k);
    out += '\t';
    out += std::to_string(r.moore_bound);
    out += '\t';
    out += std::to_string(r.ac_bound);
    out += '\t';
    out += r.df_bound ? std::to_string(*r.df_bound) : std::string("-");
    out += '\t';
    out += r.best_order ? std::to_string(*r.best_order) : std::string("-");
    out += '\t';
    out += r.construction.empty() ? std::string("-") : r.construction;
    out += '\n';
  }
  return out;
}

}  // namespace cayley2
