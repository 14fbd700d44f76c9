#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cayley2/group.hpp"

namespace cayley2 {

struct CoverResult {
  bool covered = false;
  std::vector<std::uint32_t> uncovered;  // indices with coefficient < 1
};

// An element of the integer group ring Z[G]: a dense coefficient vector
// indexed by group element. All arithmetic is exact in signed 64-bit and
// throws std::overflow_error instead of wrapping.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group);  // zero element

  // Indicator sum of a multiset of element indices (duplicates accumulate).
  static GroupRingElement from_subset(GroupPtr group,
                                      std::span<const std::uint32_t> indices);
  // Sum of every group element with coefficient 1 (the element "G").
  static GroupRingElement whole_group(GroupPtr group);
  // coeff * g as a ring element.
  static GroupRingElement singleton(GroupPtr group, std::uint32_t g,
                                    std::int64_t coeff = 1);

  const GroupPtr& group() const { return group_; }
  std::int64_t coeff(std::uint32_t g) const;
  void set_coeff(std::uint32_t g, std::int64_t c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  // Convolution product: coefficient of g is sum over h of a_h * b_{h^-1 g}.
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  bool operator==(const GroupRingElement& o) const;

  GroupRingElement scaled(std::int64_t c) const;
  // Coefficients transported along g -> g^-1.
  GroupRingElement inv_image() const;
  // Coefficients transported along g -> g^t (accumulating on collisions).
  GroupRingElement power_image(std::int64_t t) const;

  // Augmentation: sum of all coefficients.
  std::int64_t aug() const;
  bool is_zero() const;
  // Coefficientwise a <= b.
  static bool leq(const GroupRingElement& a, const GroupRingElement& b);
  // Does every group element have coefficient >= 1?
  CoverResult covers_group() const;

  // Nonzero entries as sorted (index, coefficient) pairs.
  std::vector<std::pair<std::uint32_t, std::int64_t>> support() const;
  // "index:coefficient" lines for nonzero entries, ascending index.
  std::string to_text() const;

 private:
  void check_same_group(const GroupRingElement& o) const;

  GroupPtr group_;
  std::vector<std::int64_t> coeff_;
};

}  // namespace cayley2
