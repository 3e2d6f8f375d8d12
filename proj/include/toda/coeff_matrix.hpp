#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace toda {

// An ordered 2 x m matrix of columns (s_j | r_j) indexing the monomial
// d0^{r_1}(f^{s_1}) ... d0^{r_m}(f^{s_m}).  Column order is significant:
// matrices with permuted columns are distinct objects.
struct CoeffMatrix {
  std::vector<int> s;  // s_j >= 1
  std::vector<int> r;  // r_j >= 0; r_j >= 1 whenever m >= 2

  int cols() const { return static_cast<int>(s.size()); }
  bool valid() const;
  std::string to_string() const;  // "(s1,s2|r1,r2)"

  friend auto operator<=>(const CoeffMatrix&, const CoeffMatrix&) = default;
};

// All ordered matrices with sum(s) = s_total, sum(r) = r_total, s_j >= 1,
// and r_j >= 1 whenever m >= 2.  The single m = 1 matrix (s_total|r_total)
// is always present.  Order: by m ascending, then lexicographic in s, then
// in r.
std::vector<CoeffMatrix> enumerate_coeff_matrices(int s_total, int r_total);

// All compositions of `total` into exactly `parts` parts, each >= min_part,
// in lexicographic order.
void for_each_composition(int total, int parts, int min_part,
                          const std::function<void(const std::vector<int>&)>& fn);

// All compositions of `total` into any number of parts >= 1 (2^{total-1}
// of them), lexicographic by length-then-content of the recursion order.
void for_each_composition_any_length(int total,
                                     const std::function<void(const std::vector<int>&)>& fn);

// An assignment of the positions {0..v-1} of a value sequence to m ordered
// blocks; block j holds sizes[j] >= 1 positions whose values sum to s_j.
struct TypedSetPartition {
  std::vector<int> block_of;  // position -> block index
  std::vector<int> sizes;     // n_j
};

// All position assignments of `values` into blocks with prescribed sums `s`
// and prescribed sizes `n`.  Positions are distinguishable even when values
// repeat.  Deterministic order (positions assigned left to right, blocks
// tried in order).
std::vector<TypedSetPartition> typed_set_partitions(std::span<const int> values,
                                                    std::span<const int> s,
                                                    std::span<const int> n);

// Number of such assignments, without materializing them.
long long typed_set_partition_count(std::span<const int> values,
                                    std::span<const int> s,
                                    std::span<const int> n);

}  // namespace toda
