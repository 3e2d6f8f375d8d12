#include "toda/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "toda/errors.hpp"

namespace toda {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw DomainError("partition parts must be positive, got " + std::to_string(p));
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
    if (body.empty()) return Partition();
  } else if (body.empty()) {
    throw ParseError("empty partition text (use \"[]\" for the empty partition)");
  }

  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string_view tok = trim(body.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw ParseError("invalid partition part '" + std::string(tok) + "'");
    }
    if (value < 1) {
      throw ParseError("partition parts must be positive, got '" + std::string(tok) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Integer sigma(const Partition& p) {
  Integer result = 1;
  const auto& parts = p.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    result *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return result;
}

Integer rho(const Partition& p) {
  Integer result = 1;
  for (int part : p.parts()) result *= part;
  return result;
}

Integer class_size(const Partition& p) {
  return factorial(p.weight()) / (rho(p) * sigma(p));
}

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw DomainError("cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> current;
  // Non-increasing parts, largest first: descending lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(d, d == 0 ? 1 : d);
  return out;
}

}  // namespace toda
