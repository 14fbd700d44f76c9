#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cayley2/field.hpp"

namespace cayley2 {

// Default size guard for group construction; override per call where a
// factory takes max_order.
inline constexpr std::uint64_t kDefaultMaxGroupOrder = 1u << 22;

enum class GroupKind { cyclic, product, additive, unit, twisted };

// A finite abelian group on indices 0..order-1 with identity at index 0,
// realized by formula (no stored multiplication tables). Construction
// happens through the factory functions below; instances are immutable and
// safe to share across threads.
//
// Descriptor grammar (describe() emits it, parse_group reads it):
//   z<n>     cyclic of order n
//   add<q>   additive group of GF(q), element index = field index
//   unit<q>  multiplicative group of GF(q), index i <-> field element i+1
//   tw<m>    GF(2^m) x GF(2^m) under (a,b)(c,d) = (a+c, b+d+a*c),
//            index = a_index * 2^m + b_index
//   AxB      direct product, index = i * |B| + j  (left associative)
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  std::uint64_t order() const { return order_; }
  GroupKind kind() const { return kind_; }
  std::uint32_t identity() const { return 0; }

  virtual std::uint32_t op(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t inv(std::uint32_t a) const = 0;

  // a^t by binary exponentiation; t may be negative.
  std::uint32_t pow(std::uint32_t a, std::int64_t t) const;

  const std::string& describe() const { return descriptor_; }
  std::string element_name(std::uint32_t a) const;

  // Tuple components of an element, used by element_name; products flatten
  // their factors' parts. Public so product groups can query their factors.
  virtual std::vector<std::string> name_parts(std::uint32_t a) const = 0;

 protected:
  FiniteGroup(GroupKind kind, std::uint64_t order, std::string descriptor);
  void check_index(std::uint32_t a) const;

  GroupKind kind_;
  std::uint64_t order_;
  std::string descriptor_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic_group(std::uint64_t n,
                      std::uint64_t max_order = kDefaultMaxGroupOrder);
GroupPtr direct_product(GroupPtr a, GroupPtr b,
                        std::uint64_t max_order = kDefaultMaxGroupOrder);
GroupPtr additive_group(std::shared_ptr<const FiniteField> f,
                        std::uint64_t max_order = kDefaultMaxGroupOrder);
GroupPtr unit_group(std::shared_ptr<const FiniteField> f);
GroupPtr twisted_group(unsigned m,
                       std::uint64_t max_order = kDefaultMaxGroupOrder);

// Parses the descriptor grammar above. Throws std::invalid_argument on
// malformed input, std::length_error when the size guard trips.
GroupPtr parse_group(std::string_view descriptor,
                     std::uint64_t max_order = kDefaultMaxGroupOrder);

// True when both sides index the same realized group (same descriptor).
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// An explicit subgroup: sorted element indices, checked on construction
// (contains the identity, closed under op and inv).
struct Subgroup {
  GroupPtr parent;
  std::vector<std::uint32_t> elements;

  Subgroup(GroupPtr parent, std::vector<std::uint32_t> elements);
  std::uint64_t order() const { return elements.size(); }
  bool contains(std::uint32_t a) const;
};

}  // namespace cayley2
