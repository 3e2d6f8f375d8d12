#include "toda/cache.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "toda/errors.hpp"
#include "toda/version.hpp"

namespace toda {

namespace {

size_t hash_combine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out.empty() ? std::string("-") : out;
}

std::vector<int> split_ints(const std::string& text) {
  if (text == "-") return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw CacheError("corrupt cache field '" + text + "'");
    }
  }
  return out;
}

}  // namespace

size_t VecIntHash::operator()(const std::vector<int>& v) const {
  size_t h = 0x811c9dc5u;
  for (int x : v) h = hash_combine(h, static_cast<size_t>(x) + 1315423911u);
  return hash_combine(h, v.size());
}

size_t TKeyHash::operator()(const TKey& k) const {
  VecIntHash vh;
  return hash_combine(hash_combine(vh(k.idx), vh(k.s)), vh(k.ell));
}

size_t NKeyHash::operator()(const NKey& k) const {
  VecIntHash vh;
  return hash_combine(hash_combine(vh(k.delta), vh(k.delta_bar)),
                      hash_combine(vh(k.s), vh(k.r)));
}

CoefficientCache::CoefficientCache(const CoefficientCache& other) {
  std::lock_guard lock(other.mu_);
  t_ = other.t_;
  n_ = other.n_;
}

std::optional<Rational> CoefficientCache::lookup_t(const TKey& key) const {
  std::lock_guard lock(mu_);
  auto it = t_.find(key);
  if (it == t_.end()) return std::nullopt;
  return it->second;
}

void CoefficientCache::store_t(const TKey& key, const Rational& value) {
  std::lock_guard lock(mu_);
  t_.emplace(key, value);
}

std::optional<Rational> CoefficientCache::lookup_n(const NKey& key) const {
  std::lock_guard lock(mu_);
  auto it = n_.find(key);
  if (it == n_.end()) return std::nullopt;
  return it->second;
}

void CoefficientCache::store_n(const NKey& key, const Rational& value) {
  std::lock_guard lock(mu_);
  n_.emplace(key, value);
}

size_t CoefficientCache::size() const {
  std::lock_guard lock(mu_);
  return t_.size() + n_.size();
}

void CoefficientCache::clear() {
  std::lock_guard lock(mu_);
  t_.clear();
  n_.clear();
}

void CoefficientCache::save(const std::filesystem::path& file) const {
  std::map<std::string, std::string> lines;
  {
    std::lock_guard lock(mu_);
    for (const auto& [k, v] : t_) {
      lines["T " + join_ints(k.idx) + " " + join_ints(k.s) + " " + join_ints(k.ell)] =
          rat_str(v);
    }
    for (const auto& [k, v] : n_) {
      lines["N " + join_ints(k.delta) + " " + join_ints(k.delta_bar) + " " +
            join_ints(k.s) + " " + join_ints(k.r)] = rat_str(v);
    }
  }
  std::ofstream out(file);
  if (!out) throw CacheError("cannot write cache file " + file.string());
  out << "toda-coeff-cache " << kFormulaVersion << "\n";
  for (const auto& [key, value] : lines) out << key << " " << value << "\n";
}

void CoefficientCache::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw CacheError("cannot read cache file " + file.string());
  std::string header_tag, header_version;
  in >> header_tag >> header_version;
  if (header_tag != "toda-coeff-cache" || header_version != kFormulaVersion) {
    throw CacheError("cache version mismatch in " + file.string() + " (found '" +
                     header_tag + " " + header_version + "', need 'toda-coeff-cache " +
                     kFormulaVersion + "')");
  }
  std::lock_guard lock(mu_);
  std::string kind;
  while (in >> kind) {
    if (kind == "T") {
      std::string idx, s, ell, value;
      if (!(in >> idx >> s >> ell >> value)) throw CacheError("truncated cache line");
      t_[TKey{split_ints(idx), split_ints(s), split_ints(ell)}] = parse_rational(value);
    } else if (kind == "N") {
      std::string d, db, s, r, value;
      if (!(in >> d >> db >> s >> r >> value)) throw CacheError("truncated cache line");
      n_[NKey{split_ints(d), split_ints(db), split_ints(s), split_ints(r)}] =
          parse_rational(value);
    } else {
      throw CacheError("unknown cache record kind '" + kind + "'");
    }
  }
}

}  // namespace toda
