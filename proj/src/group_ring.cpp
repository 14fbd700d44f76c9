#include "cayley2/group_ring.hpp"

#include <stdexcept>

namespace cayley2 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("GroupRingElement: coefficient overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("GroupRingElement: coefficient overflow");
  }
  return r;
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("GroupRingElement: null group");
  coeff_.assign(group_->order(), 0);
}

GroupRingElement GroupRingElement::from_subset(
    GroupPtr group, std::span<const std::uint32_t> indices) {
  GroupRingElement e(std::move(group));
  for (const auto i : indices) {
    if (i >= e.coeff_.size()) {
      throw std::out_of_range("from_subset: element index out of range");
    }
    e.coeff_[i] = checked_add(e.coeff_[i], 1);
  }
  return e;
}

GroupRingElement GroupRingElement::whole_group(GroupPtr group) {
  GroupRingElement e(std::move(group));
  std::fill(e.coeff_.begin(), e.coeff_.end(), 1);
  return e;
}

GroupRingElement GroupRingElement::singleton(GroupPtr group, std::uint32_t g,
                                             std::int64_t coeff) {
  GroupRingElement e(std::move(group));
  if (g >= e.coeff_.size()) {
    throw std::out_of_range("singleton: element index out of range");
  }
  e.coeff_[g] = coeff;
  return e;
}

std::int64_t GroupRingElement::coeff(std::uint32_t g) const {
  if (g >= coeff_.size()) throw std::out_of_range("coeff: index out of range");
  return coeff_[g];
}

void GroupRingElement::set_coeff(std::uint32_t g, std::int64_t c) {
  if (g >= coeff_.size()) throw std::out_of_range("set_coeff: index out of range");
  coeff_[g] = c;
}

void GroupRingElement::check_same_group(const GroupRingElement& o) const {
  if (!same_group(*group_, *o.group_)) {
    throw std::invalid_argument("GroupRingElement: operands live in different groups");
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  check_same_group(o);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    coeff_[i] = checked_add(coeff_[i], o.coeff_[i]);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  check_same_group(o);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    coeff_[i] = checked_add(coeff_[i], checked_mul(o.coeff_[i], -1));
  }
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.check_same_group(b);
  GroupRingElement out(a.group_);
  const auto sa = a.support();
  const auto sb = b.support();
  const auto& g = *a.group_;
  for (const auto& [i, ci] : sa) {
    for (const auto& [j, cj] : sb) {
      const auto k = g.op(i, j);
      out.coeff_[k] = checked_add(out.coeff_[k], checked_mul(ci, cj));
    }
  }
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return same_group(*group_, *o.group_) && coeff_ == o.coeff_;
}

GroupRingElement GroupRingElement::scaled(std::int64_t c) const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    out.coeff_[i] = checked_mul(coeff_[i], c);
  }
  return out;
}

GroupRingElement GroupRingElement::inv_image() const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] != 0) {
      out.coeff_[group_->inv(static_cast<std::uint32_t>(i))] = coeff_[i];
    }
  }
  return out;
}

GroupRingElement GroupRingElement::power_image(std::int64_t t) const {
  GroupRingElement out(group_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] != 0) {
      const auto k = group_->pow(static_cast<std::uint32_t>(i), t);
      out.coeff_[k] = checked_add(out.coeff_[k], coeff_[i]);
    }
  }
  return out;
}

std::int64_t GroupRingElement::aug() const {
  std::int64_t s = 0;
  for (const auto c : coeff_) s = checked_add(s, c);
  return s;
}

bool GroupRingElement::is_zero() const {
  for (const auto c : coeff_) {
    if (c != 0) return false;
  }
  return true;
}

bool GroupRingElement::leq(const GroupRingElement& a, const GroupRingElement& b) {
  a.check_same_group(b);
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
    if (a.coeff_[i] > b.coeff_[i]) return false;
  }
  return true;
}

CoverResult GroupRingElement::covers_group() const {
  CoverResult r;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] < 1) r.uncovered.push_back(static_cast<std::uint32_t>(i));
  }
  r.covered = r.uncovered.empty();
  return r;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> GroupRingElement::support()
    const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> s;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] != 0) s.emplace_back(static_cast<std::uint32_t>(i), coeff_[i]);
  }
  return s;
}

std::string GroupRingElement::to_text() const {
  std::string out;
  for (const auto& [i, c] : support()) {
    out += std::to_string(i);
    out += ":";
    out += std::to_string(c);
    out += "\n";
  }
  return out;
}

}  // namespace cayley2
