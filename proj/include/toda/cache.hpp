#pragma once

#include <cstddef>
#include <filesystem>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "toda/coeff_matrix.hpp"
#include "toda/partition.hpp"
#include "toda/rational.hpp"

namespace toda {

// Key of a T coefficient: ordered index list plus the column matrix with
// l-labels.  Stored only after full evaluation.
struct TKey {
  std::vector<int> idx;
  std::vector<int> s;
  std::vector<int> ell;

  friend bool operator==(const TKey&, const TKey&) = default;
};

// Key of an N coefficient: the two diagrams and the (s|r) matrix.
struct NKey {
  std::vector<int> delta;
  std::vector<int> delta_bar;
  std::vector<int> s;
  std::vector<int> r;

  friend bool operator==(const NKey&, const NKey&) = default;
};

struct VecIntHash {
  size_t operator()(const std::vector<int>& v) const;
};

struct TKeyHash {
  size_t operator()(const TKey& k) const;
};

struct NKeyHash {
  size_t operator()(const NKey& k) const;
};

// Memoization store for the T and N coefficients.  Thread safe: concurrent
// lookups and insertions are serialized internally, and since every value
// is a pure function of its key, racing recomputations are harmless.
//
// Persists to a line-oriented text file whose header carries the formula
// version; loading refuses any other version.
class CoefficientCache {
 public:
  CoefficientCache() = default;
  CoefficientCache(const CoefficientCache& other);
  CoefficientCache& operator=(const CoefficientCache&) = delete;

  std::optional<Rational> lookup_t(const TKey& key) const;
  void store_t(const TKey& key, const Rational& value);
  std::optional<Rational> lookup_n(const NKey& key) const;
  void store_n(const NKey& key, const Rational& value);

  size_t size() const;
  void clear();

  // Deterministic (sorted) text dump; bit-exact round trip.
  void save(const std::filesystem::path& file) const;
  void load(const std::filesystem::path& file);  // throws CacheError

 private:
  mutable std::mutex mu_;
  std::unordered_map<TKey, Rational, TKeyHash> t_;
  std::unordered_map<NKey, Rational, NKeyHash> n_;
};

}  // namespace toda
