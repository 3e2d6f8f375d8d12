#include "toda/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "toda/errors.hpp"

namespace toda {

Partition cycle_type(const Perm& p) {
  const int d = static_cast<int>(p.size());
  std::vector<bool> seen(d, false);
  std::vector<int> lengths;
  for (int start = 0; start < d; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Perm class_representative(const Partition& type) {
  Perm p(type.weight());
  int base = 0;
  for (int len : type.parts()) {
    for (int i = 0; i < len; ++i) p[base + i] = base + (i + 1) % len;
    base += len;
  }
  return p;
}

bool is_transitive(std::span<const Perm> gens, int d) {
  if (d <= 0) return false;
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : gens) {
    for (int x = 0; x < d; ++x) {
      int a = find(x), b = find(g[x]);
      if (a != b) parent[a] = b;
    }
  }
  int root = find(0);
  for (int x = 1; x < d; ++x) {
    if (find(x) != root) return false;
  }
  return true;
}

namespace {

// DFS state for one worker.  The running product r = alpha . tau_1 ... tau_j
// (tau applied first under composition (f.g)(x) = f(g(x))) is maintained by
// O(1) swaps: appending (a b) on the right swaps r[a] and r[b].  Appending a
// transposition splits a cycle of r when a and b share one, else merges two.
struct Dfs {
  int d = 0;
  int l = 0;
  int target_cycles = 0;
  std::vector<int> target_count;           // cycle-length histogram of delta_bar
  std::vector<std::pair<int, int>> trans;  // all (a < b)
  const Partition* alpha_type = nullptr;

  Perm r;
  std::vector<int> path;  // chosen transposition indices
  int ncyc = 0;
  Integer transitive_count = 0;
  Integer match_count = 0;
  unsigned long long visited = 0;

  // Scratch for leaf checks.
  std::vector<bool> seen;
  std::vector<int> hist;
  std::vector<int> parent;

  void init(const Partition& delta, const Partition& delta_bar) {
    d = delta.weight();
    l = delta.length() + delta_bar.length() - 2;
    target_cycles = delta_bar.length();
    target_count.assign(d + 1, 0);
    for (int len : delta_bar.parts()) ++target_count[len];
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) trans.emplace_back(a, b);
    alpha_type = &delta;
    r = class_representative(delta);
    ncyc = delta.length();
    seen.assign(d, false);
    hist.assign(d + 1, 0);
    parent.assign(d, 0);
  }

  bool same_cycle(int a, int b) const {
    for (int x = r[a]; x != a; x = r[x]) {
      if (x == b) return true;
    }
    return false;
  }

  bool leaf_type_matches() {
    std::fill(seen.begin(), seen.end(), false);
    std::fill(hist.begin(), hist.end(), 0);
    for (int start = 0; start < d; ++start) {
      if (seen[start]) continue;
      int len = 0;
      for (int x = start; !seen[x]; x = r[x]) {
        seen[x] = true;
        ++len;
      }
      ++hist[len];
    }
    return hist == target_count;
  }

  bool leaf_transitive() {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[a] = b;
    };
    int base = 0;
    for (int len : alpha_type->parts()) {
      for (int i = 1; i < len; ++i) unite(base, base + i);
      base += len;
    }
    for (int t : path) unite(trans[t].first, trans[t].second);
    int root = find(0);
    for (int x = 1; x < d; ++x) {
      if (find(x) != root) return false;
    }
    return true;
  }

  void leaf() {
    if (ncyc != target_cycles || !leaf_type_matches()) return;
    ++match_count;
    if (leaf_transitive()) ++transitive_count;
  }

  bool prunable(int depth) const {
    int remaining = l - depth;
    int dist = ncyc - target_cycles;
    if (dist < 0) dist = -dist;
    // Each transposition changes the cycle count by exactly one.
    return dist > remaining || ((remaining - dist) & 1);
  }

  void descend(int depth) {
    ++visited;
    if (depth == l) {
      leaf();
      return;
    }
    if (prunable(depth)) return;
    for (int t = 0; t < static_cast<int>(trans.size()); ++t) {
      step(t, depth);
    }
  }

  // Same as descend(0) but exploring only a stride of the first-level
  // branches; visits the same node set as the serial walk when the per-
  // worker counts are combined.
  void descend_root_strided(int start, int stride) {
    ++visited;
    if (l == 0) {
      leaf();
      return;
    }
    if (prunable(0)) return;
    for (int t = start; t < static_cast<int>(trans.size()); t += stride) {
      step(t, 0);
    }
  }

  void step(int t, int depth) {
    auto [a, b] = trans[t];
    int delta_cycles = same_cycle(a, b) ? 1 : -1;
    std::swap(r[a], r[b]);
    ncyc += delta_cycles;
    path.push_back(t);
    descend(depth + 1);
    path.pop_back();
    ncyc -= delta_cycles;
    std::swap(r[a], r[b]);
  }
};

}  // namespace

OracleResult oracle_hurwitz_genus0(const Partition& delta, const Partition& delta_bar,
                                   const Integer& budget, int jobs) {
  if (delta.empty() || delta_bar.empty()) {
    throw DomainError("oracle needs nonempty ramification profiles");
  }
  if (delta.weight() != delta_bar.weight()) {
    throw DomainError("oracle: weight mismatch between " + delta.to_string() + " and " +
                      delta_bar.to_string());
  }
  const int d = delta.weight();
  const int l = delta.length() + delta_bar.length() - 2;
  const Integer n_trans = Integer(d) * (d - 1) / 2;
  const Integer estimate = int_pow(n_trans, l);
  if (estimate > budget) {
    throw BudgetError("oracle work estimate " + estimate.str() + " exceeds budget " +
                      budget.str() + " for " + delta.to_string() + "|" +
                      delta_bar.to_string());
  }

  jobs = std::max(1, jobs);
  Integer transitive_total = 0, match_total = 0;
  unsigned long long visited_total = 0;

  if (l == 0 || jobs == 1) {
    Dfs dfs;
    dfs.init(delta, delta_bar);
    dfs.descend(0);
    transitive_total = dfs.transitive_count;
    match_total = dfs.match_count;
    visited_total = dfs.visited;
  } else {
    // Split the forest by the first transposition, round robin.
    std::vector<Dfs> workers(jobs);
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
      workers[w].init(delta, delta_bar);
      threads.emplace_back([&workers, w, jobs]() {
        workers[w].descend_root_strided(w, jobs);
      });
    }
    for (auto& t : threads) t.join();
    for (int w = 0; w < jobs; ++w) {
      transitive_total += workers[w].transitive_count;
      match_total += workers[w].match_count;
      visited_total += workers[w].visited;
    }
    visited_total -= jobs - 1;  // the root was counted once per worker
  }

  OracleResult result;
  result.rep_tuple_count = transitive_total;
  result.rep_match_count = match_total;
  result.tuple_count = transitive_total * class_size(delta);
  result.value = Rational(result.tuple_count, factorial(d));
  result.visited_nodes = visited_total;
  return result;
}

}  // namespace toda
