#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "toda/rational.hpp"

namespace toda {

// An integer partition (Young diagram): non-increasing positive parts.
// The empty partition is allowed and stands for the constant monomial.
class Partition {
 public:
  Partition() = default;

  // Sorts the given parts into canonical non-increasing order.
  // Throws DomainError if any part is < 1.
  explicit Partition(std::vector<int> parts);

  // Accepts "3,2,1" or "[3,2,1]" in any order; "[]" is the empty partition.
  // Throws ParseError naming the offending token.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;            // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;  // "[3,2,1]", "[]"

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Order of the row-permutation automorphism group: product of factorials
// of the part multiplicities.
Integer sigma(const Partition& p);

// Product of all parts (1 for the empty partition).
Integer rho(const Partition& p);

// Number of permutations in S_d with cycle type p: d!/(rho*sigma).
Integer class_size(const Partition& p);

// All partitions of d, descending-lexicographic ([d] first, [1^d] last).
// d = 0 yields just the empty partition.
std::vector<Partition> enumerate_partitions(int d);

}  // namespace toda
