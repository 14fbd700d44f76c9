#include "cayley2/group.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "cayley2/numtheory.hpp"

namespace cayley2 {

FiniteGroup::FiniteGroup(GroupKind kind, std::uint64_t order,
                         std::string descriptor)
    : kind_(kind), order_(order), descriptor_(std::move(descriptor)) {
  if (order_ == 0) throw std::invalid_argument("FiniteGroup: empty carrier");
}

void FiniteGroup::check_index(std::uint32_t a) const {
  if (a >= order_) {
    throw std::out_of_range("FiniteGroup(" + descriptor_ +
                            "): element index out of range");
  }
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, std::int64_t t) const {
  check_index(a);
  if (t < 0) {
    if (t == INT64_MIN) throw std::invalid_argument("FiniteGroup: exponent out of range");
    return pow(inv(a), -t);
  }
  std::uint32_t acc = identity();
  std::uint32_t base = a;
  std::uint64_t n = static_cast<std::uint64_t>(t);
  while (n > 0) {
    if (n & 1) acc = op(acc, base);
    base = op(base, base);
    n >>= 1;
  }
  return acc;
}

std::string FiniteGroup::element_name(std::uint32_t a) const {
  const auto parts = name_parts(a);
  if (parts.size() == 1) return parts[0];
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

namespace {

void check_guard(std::uint64_t order, std::uint64_t max_order,
                 const char* what) {
  if (order > max_order) {
    throw std::length_error(std::string(what) +
                            ": order exceeds the size guard (" +
                            std::to_string(max_order) + ")");
  }
}

class CyclicGroup final : public FiniteGroup {
 public:
  explicit CyclicGroup(std::uint64_t n)
      : FiniteGroup(GroupKind::cyclic, n, "z" + std::to_string(n)), n_(n) {}

  std::uint32_t op(std::uint32_t a, std::uint32_t b) const override {
    check_index(a);
    check_index(b);
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= n_ ? s - n_ : s);
  }

  std::uint32_t inv(std::uint32_t a) const override {
    check_index(a);
    return a == 0 ? 0 : static_cast<std::uint32_t>(n_ - a);
  }

  std::vector<std::string> name_parts(std::uint32_t a) const override {
    return {std::to_string(a)};
  }

 private:
  std::uint64_t n_;
};

class ProductGroup final : public FiniteGroup {
 public:
  ProductGroup(GroupPtr a, GroupPtr b)
      : FiniteGroup(GroupKind::product, a->order() * b->order(),
                    a->describe() + "x" + b->describe()),
        left_(std::move(a)),
        right_(std::move(b)),
        rn_(right_->order()) {}

  std::uint32_t op(std::uint32_t a, std::uint32_t b) const override {
    check_index(a);
    check_index(b);
    const std::uint32_t a1 = static_cast<std::uint32_t>(a / rn_);
    const std::uint32_t a2 = static_cast<std::uint32_t>(a % rn_);
    const std::uint32_t b1 = static_cast<std::uint32_t>(b / rn_);
    const std::uint32_t b2 = static_cast<std::uint32_t>(b % rn_);
    return static_cast<std::uint32_t>(std::uint64_t{left_->op(a1, b1)} * rn_ +
                                      right_->op(a2, b2));
  }

  std::uint32_t inv(std::uint32_t a) const override {
    check_index(a);
    const std::uint32_t a1 = static_cast<std::uint32_t>(a / rn_);
    const std::uint32_t a2 = static_cast<std::uint32_t>(a % rn_);
    return static_cast<std::uint32_t>(std::uint64_t{left_->inv(a1)} * rn_ +
                                      right_->inv(a2));
  }

  std::vector<std::string> name_parts(std::uint32_t a) const override {
    auto parts = left_->name_parts(static_cast<std::uint32_t>(a / rn_));
    auto rhs = right_->name_parts(static_cast<std::uint32_t>(a % rn_));
    parts.insert(parts.end(), rhs.begin(), rhs.end());
    return parts;
  }

 private:
  GroupPtr left_;
  GroupPtr right_;
  std::uint64_t rn_;
};

class AdditiveGroup final : public FiniteGroup {
 public:
  explicit AdditiveGroup(std::shared_ptr<const FiniteField> f)
      : FiniteGroup(GroupKind::additive, f->order(),
                    "add" + std::to_string(f->order())),
        f_(std::move(f)) {}

  std::uint32_t op(std::uint32_t a, std::uint32_t b) const override {
    check_index(a);
    check_index(b);
    return f_->add(a, b);
  }

  std::uint32_t inv(std::uint32_t a) const override {
    check_index(a);
    return f_->neg(a);
  }

  std::vector<std::string> name_parts(std::uint32_t a) const override {
    return {std::to_string(a)};
  }

 private:
  std::shared_ptr<const FiniteField> f_;
};

// Nonzero field elements under multiplication. Group index i stands for
// field element i+1, so the identity (field 1) sits at index 0.
class UnitGroup final : public FiniteGroup {
 public:
  explicit UnitGroup(std::shared_ptr<const FiniteField> f)
      : FiniteGroup(GroupKind::unit, f->order() - 1,
                    "unit" + std::to_string(f->order())),
        f_(std::move(f)) {}

  std::uint32_t op(std::uint32_t a, std::uint32_t b) const override {
    check_index(a);
    check_index(b);
    return f_->mul(a + 1, b + 1) - 1;
  }

  std::uint32_t inv(std::uint32_t a) const override {
    check_index(a);
    return f_->inv(a + 1) - 1;
  }

  std::vector<std::string> name_parts(std::uint32_t a) const override {
    return {std::to_string(a + 1)};
  }

 private:
  std::shared_ptr<const FiniteField> f_;
};

// GF(2^m) x GF(2^m) with (a,b)(c,d) = (a+c, b+d+a*c). Isomorphic to Z4^m;
// inverses are (a, b+a^2) and the involutions are exactly {(0,b)}.
class TwistedGroup final : public FiniteGroup {
 public:
  explicit TwistedGroup(std::shared_ptr<const FiniteField> f, unsigned m)
      : FiniteGroup(GroupKind::twisted, f->order() * f->order(),
                    "tw" + std::to_string(m)),
        f_(std::move(f)),
        q_(static_cast<std::uint32_t>(f_->order())) {}

  std::uint32_t op(std::uint32_t x, std::uint32_t y) const override {
    check_index(x);
    check_index(y);
    const std::uint32_t a = x / q_, b = x % q_;
    const std::uint32_t c = y / q_, d = y % q_;
    const std::uint32_t first = f_->add(a, c);
    const std::uint32_t second = f_->add(f_->add(b, d), f_->mul(a, c));
    return first * q_ + second;
  }

  std::uint32_t inv(std::uint32_t x) const override {
    check_index(x);
    const std::uint32_t a = x / q_, b = x % q_;
    return a * q_ + f_->add(b, f_->mul(a, a));
  }

  std::vector<std::string> name_parts(std::uint32_t x) const override {
    return {std::to_string(x / q_), std::to_string(x % q_)};
  }

 private:
  std::shared_ptr<const FiniteField> f_;
  std::uint32_t q_;
};

}  // namespace

GroupPtr cyclic_group(std::uint64_t n, std::uint64_t max_order) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order must be >= 1");
  check_guard(n, max_order, "cyclic_group");
  return std::make_shared<CyclicGroup>(n);
}

GroupPtr direct_product(GroupPtr a, GroupPtr b, std::uint64_t max_order) {
  if (!a || !b) throw std::invalid_argument("direct_product: null factor");
  if (a->order() > max_order / b->order()) {
    throw std::length_error("direct_product: order exceeds the size guard (" +
                            std::to_string(max_order) + ")");
  }
  return std::make_shared<ProductGroup>(std::move(a), std::move(b));
}

GroupPtr additive_group(std::shared_ptr<const FiniteField> f,
                        std::uint64_t max_order) {
  if (!f) throw std::invalid_argument("additive_group: null field");
  check_guard(f->order(), max_order, "additive_group");
  return std::make_shared<AdditiveGroup>(std::move(f));
}

GroupPtr unit_group(std::shared_ptr<const FiniteField> f) {
  if (!f) throw std::invalid_argument("unit_group: null field");
  return std::make_shared<UnitGroup>(std::move(f));
}

GroupPtr twisted_group(unsigned m, std::uint64_t max_order) {
  if (m == 0) throw std::invalid_argument("twisted_group: m must be >= 1");
  const std::uint64_t q = ipow(2, m);
  check_guard(q * q, max_order, "twisted_group");
  return std::make_shared<TwistedGroup>(make_field(q), m);
}

namespace {

std::uint64_t parse_number(std::string_view s) {
  std::uint64_t value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || s.empty()) {
    throw std::invalid_argument("parse_group: bad number '" + std::string(s) + "'");
  }
  return value;
}

GroupPtr parse_atom(std::string_view atom, std::uint64_t max_order) {
  if (atom.starts_with("z")) return cyclic_group(parse_number(atom.substr(1)), max_order);
  if (atom.starts_with("add")) {
    auto f = make_field(parse_number(atom.substr(3)));
    return additive_group(std::move(f), max_order);
  }
  if (atom.starts_with("unit")) {
    auto f = make_field(parse_number(atom.substr(4)));
    return unit_group(std::move(f));
  }
  if (atom.starts_with("tw")) {
    const std::uint64_t m = parse_number(atom.substr(2));
    if (m > 32) throw std::invalid_argument("parse_group: tw parameter too large");
    return twisted_group(static_cast<unsigned>(m), max_order);
  }
  throw std::invalid_argument("parse_group: unknown atom '" + std::string(atom) + "'");
}

}  // namespace

GroupPtr parse_group(std::string_view descriptor, std::uint64_t max_order) {
  if (descriptor.empty()) throw std::invalid_argument("parse_group: empty descriptor");
  GroupPtr acc;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= descriptor.size(); ++i) {
    if (i == descriptor.size() || descriptor[i] == 'x') {
      auto atom = parse_atom(descriptor.substr(start, i - start), max_order);
      acc = acc ? direct_product(std::move(acc), std::move(atom), max_order)
                : std::move(atom);
      start = i + 1;
    }
  }
  return acc;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return &a == &b || a.describe() == b.describe();
}

Subgroup::Subgroup(GroupPtr parent_in, std::vector<std::uint32_t> elements_in)
    : parent(std::move(parent_in)), elements(std::move(elements_in)) {
  if (!parent) throw std::invalid_argument("Subgroup: null parent");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != parent->identity()) {
    throw std::invalid_argument("Subgroup: must contain the identity");
  }
  for (const auto e : elements) {
    if (e >= parent->order()) throw std::out_of_range("Subgroup: index out of range");
    if (!contains(parent->inv(e))) {
      throw std::invalid_argument("Subgroup: not closed under inverse");
    }
    for (const auto f : elements) {
      if (!contains(parent->op(e, f))) {
        throw std::invalid_argument("Subgroup: not closed under the operation");
      }
    }
  }
}

bool Subgroup::contains(std::uint32_t a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

}  // namespace cayley2
