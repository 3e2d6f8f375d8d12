#include "toda/coefficients.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "toda/errors.hpp"

namespace toda {

namespace {

int sum_of(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

long long p_count(int i, int j, std::span<const int> r) {
  if (i < 1 || j < 1) return 0;
  if (sum_of(r) != i + j) return 0;
  // Count solutions of sum(x_t) = i with 1 <= x_t <= r_t - 1; the j-sequence
  // is then forced as j_t = r_t - x_t.
  std::vector<long long> ways(i + 1, 0);
  ways[0] = 1;
  for (int rt : r) {
    if (rt < 2) return 0;
    std::vector<long long> next(i + 1, 0);
    for (int partial = 0; partial <= i; ++partial) {
      if (!ways[partial]) continue;
      for (int x = 1; x <= rt - 1 && partial + x <= i; ++x) {
        next[partial + x] += ways[partial];
      }
    }
    ways.swap(next);
  }
  return ways[i];
}

Rational t_pair(int i, int j, std::span<const int> p, CoefficientCache& cache) {
  const int m = static_cast<int>(p.size());
  if (m == 0 || sum_of(p) != i + j) return 0;
  TKey key{{i, j}, std::vector<int>(p.begin(), p.end()), std::vector<int>(m, 1)};
  if (auto hit = cache.lookup_t(key)) return *hit;

  Rational total = 0;
  const int sign = (m % 2 == 0) ? -1 : 1;  // (-1)^{m+1}
  for_each_composition_any_length(m, [&](const std::vector<int>& n) {
    const int k = static_cast<int>(n.size());
    std::vector<int> block_sums(k);
    int pos = 0;
    for (int t = 0; t < k; ++t) {
      int s = 0;
      for (int u = 0; u < n[t]; ++u) s += p[pos++];
      block_sums[t] = s;
    }
    long long count = p_count(i, j, block_sums);
    if (!count) return;
    Integer denom = k;
    for (int nt : n) denom *= factorial(nt);
    total += Rational(Integer(sign) * count, denom);
  });

  cache.store_t(key, total);
  return total;
}

Rational t_multi(std::span<const int> idx, std::span<const int> s,
                 std::span<const int> ell, CoefficientCache& cache) {
  const int k = static_cast<int>(idx.size());
  const int m = static_cast<int>(s.size());
  if (k < 1 || m < 1) return 0;
  if (static_cast<int>(ell.size()) != m) {
    throw DomainError("t_multi: s and ell must have equal length");
  }
  if (sum_of(s) != sum_of(idx)) return 0;
  if (sum_of(ell) != m + k - 2) return 0;
  if (k == 1) {
    // Single index: nonzero only on the matrix ((i)|(0)).
    return (m == 1 && ell[0] == 0) ? 1 : 0;
  }
  for (int l : ell)
    if (l < 1) return 0;
  if (k == 2) {
    // sum(ell) = m with every entry >= 1 forces all labels to be 1.
    return t_pair(idx[0], idx[1], s, cache);
  }

  TKey key{std::vector<int>(idx.begin(), idx.end()),
           std::vector<int>(s.begin(), s.end()),
           std::vector<int>(ell.begin(), ell.end())};
  if (auto hit = cache.lookup_t(key)) return *hit;

  const int last = idx[k - 1];
  std::span<const int> head = idx.first(k - 1);
  Rational total = 0;
  for (int lo = 0; lo < m; ++lo) {
    int merged_s = 0, merged_ell = 0;
    for (int hi = lo; hi < m; ++hi) {
      merged_s += s[hi];
      merged_ell += ell[hi] - 1;
      if (merged_s - last <= 0 || merged_ell <= 0) continue;

      Rational inner = t_pair(merged_s - last, last, s.subspan(lo, hi - lo + 1), cache);
      if (inner == 0) continue;

      std::vector<int> new_s, new_ell;
      new_s.reserve(m - (hi - lo));
      new_ell.reserve(m - (hi - lo));
      new_s.insert(new_s.end(), s.begin(), s.begin() + lo);
      new_ell.insert(new_ell.end(), ell.begin(), ell.begin() + lo);
      new_s.push_back(merged_s - last);
      new_ell.push_back(merged_ell);
      new_s.insert(new_s.end(), s.begin() + hi + 1, s.end());
      new_ell.insert(new_ell.end(), ell.begin() + hi + 1, ell.end());

      Rational rec = t_multi(head, new_s, new_ell, cache);
      if (rec == 0) continue;

      Integer multinomial = factorial(merged_ell);
      for (int t = lo; t <= hi; ++t) multinomial /= factorial(ell[t] - 1);
      total += Rational(multinomial) * rec * inner;
    }
  }

  cache.store_t(key, total);
  return total;
}

Rational n_tilde(std::span<const int> idx, std::span<const int> bar,
                 const CoeffMatrix& matrix, CoefficientCache& cache) {
  const int k = static_cast<int>(idx.size());
  const int kbar = static_cast<int>(bar.size());
  const int m = matrix.cols();
  if (k < 1 || kbar < 1 || m < 1) return 0;
  if (sum_of(idx) != sum_of(bar)) return 0;
  if (sum_of(idx) != sum_of(matrix.s)) return 0;
  if (sum_of(matrix.r) != k + kbar - 2) return 0;
  if (m > kbar) return 0;  // blocks are nonempty

  Rational total = 0;
  for_each_composition(kbar, m, 1, [&](const std::vector<int>& n) {
    std::vector<int> ell(m);
    for (int j = 0; j < m; ++j) ell[j] = matrix.r[j] - n[j] + 1;
    Rational t = t_multi(idx, matrix.s, ell, cache);
    if (t == 0) return;
    long long count = typed_set_partition_count(bar, matrix.s, n);
    if (!count) return;
    total += Rational(count) * t;
  });
  if (total == 0) return 0;

  Integer num = 1, den = 1;
  for (int v : idx) num *= v;
  for (int v : bar) num *= v;
  for (int v : matrix.s) den *= v;
  return Rational(num, den) * total;
}

Rational n_coeff(const Partition& delta, const Partition& delta_bar,
                 const CoeffMatrix& matrix, CoefficientCache& cache) {
  if (delta.weight() != delta_bar.weight()) {
    throw DomainError("n_coeff: diagrams must have equal weight (" +
                      delta.to_string() + " vs " + delta_bar.to_string() + ")");
  }
  NKey key{delta.parts(), delta_bar.parts(), matrix.s, matrix.r};
  if (auto hit = cache.lookup_n(key)) return *hit;
  Rational nt = n_tilde(delta.parts(), delta_bar.parts(), matrix, cache);
  Rational value = nt / Rational(sigma(delta) * sigma(delta_bar));
  cache.store_n(key, value);
  return value;
}

}  // namespace toda
