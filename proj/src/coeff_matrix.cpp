#include "toda/coeff_matrix.hpp"

#include <numeric>

#include "toda/errors.hpp"

namespace toda {

bool CoeffMatrix::valid() const {
  if (s.size() != r.size() || s.empty()) return false;
  for (int v : s)
    if (v < 1) return false;
  for (int v : r) {
    if (v < 0) return false;
    if (cols() >= 2 && v < 1) return false;
  }
  return true;
}

std::string CoeffMatrix::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '|';
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r[i]);
  }
  out += ')';
  return out;
}

void for_each_composition(int total, int parts, int min_part,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (parts <= 0) {
    if (total == 0 && parts == 0) fn({});
    return;
  }
  std::vector<int> current(parts);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      if (remaining >= min_part) {
        current[pos] = remaining;
        fn(current);
      }
      return;
    }
    int tail = parts - pos - 1;
    for (int v = min_part; remaining - v >= tail * min_part; ++v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

void for_each_composition_any_length(int total,
                                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      fn(current);
      return;
    }
    for (int v = 1; v <= remaining; ++v) {
      current.push_back(v);
      self(self, remaining - v);
      current.pop_back();
    }
  };
  rec(rec, total);
}

std::vector<CoeffMatrix> enumerate_coeff_matrices(int s_total, int r_total) {
  if (s_total < 1) throw DomainError("coefficient matrices need s_total >= 1");
  if (r_total < 0) throw DomainError("coefficient matrices need r_total >= 0");
  std::vector<CoeffMatrix> out;
  for (int m = 1; m <= s_total; ++m) {
    int r_min = (m == 1) ? 0 : 1;
    if (r_total < m * r_min) continue;
    for_each_composition(s_total, m, 1, [&](const std::vector<int>& sc) {
      for_each_composition(r_total, m, r_min, [&](const std::vector<int>& rc) {
        out.push_back(CoeffMatrix{sc, rc});
      });
    });
  }
  return out;
}

namespace {

// Shared backtracker: assigns positions left to right; each block must end
// exactly at its prescribed (sum, size).
template <typename OnComplete>
void walk_typed_partitions(std::span<const int> values, std::span<const int> s,
                           std::span<const int> n, OnComplete&& on_complete) {
  const int v = static_cast<int>(values.size());
  const int m = static_cast<int>(s.size());
  if (m != static_cast<int>(n.size())) {
    throw DomainError("typed set partitions: s and n must have equal length");
  }
  int total_n = 0, total_s = 0, total_v = 0;
  for (int x : n) total_n += x;
  for (int x : s) total_s += x;
  for (int x : values) total_v += x;
  for (int x : n)
    if (x < 1) return;
  if (total_n != v || total_s != total_v) return;

  std::vector<int> block_of(v);
  std::vector<int> sum_left(s.begin(), s.end());
  std::vector<int> size_left(n.begin(), n.end());
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == v) {
      on_complete(block_of);
      return;
    }
    int value = values[pos];
    for (int b = 0; b < m; ++b) {
      if (size_left[b] < 1 || sum_left[b] < value) continue;
      // A block that becomes full must have consumed its sum exactly.
      if (size_left[b] == 1 && sum_left[b] != value) continue;
      // A block with room left must keep at least 1 per remaining slot.
      if (size_left[b] > 1 && sum_left[b] - value < size_left[b] - 1) continue;
      block_of[pos] = b;
      sum_left[b] -= value;
      --size_left[b];
      self(self, pos + 1);
      sum_left[b] += value;
      ++size_left[b];
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<TypedSetPartition> typed_set_partitions(std::span<const int> values,
                                                    std::span<const int> s,
                                                    std::span<const int> n) {
  std::vector<TypedSetPartition> out;
  walk_typed_partitions(values, s, n, [&](const std::vector<int>& block_of) {
    out.push_back(TypedSetPartition{block_of, std::vector<int>(n.begin(), n.end())});
  });
  return out;
}

long long typed_set_partition_count(std::span<const int> values,
                                    std::span<const int> s,
                                    std::span<const int> n) {
  long long count = 0;
  walk_typed_partitions(values, s, n, [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace toda
