#include "toda/hurwitz.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "toda/coefficients.hpp"
#include "toda/errors.hpp"
#include "toda/oracle.hpp"

namespace toda {

namespace {

void require_valid_pair(const Partition& delta, const Partition& delta_bar) {
  if (delta.empty() || delta_bar.empty()) {
    throw DomainError("Hurwitz numbers need nonempty ramification profiles");
  }
  if (delta.weight() != delta_bar.weight()) {
    throw DomainError("weight mismatch: " + delta.to_string() + " has weight " +
                      std::to_string(delta.weight()) + ", " + delta_bar.to_string() +
                      " has weight " + std::to_string(delta_bar.weight()));
  }
}

// H for polynomials-with-one-critical-value shapes: other side a single row.
Rational closed_form_single_row(const Partition& other, int n) {
  int len = other.length();
  return Rational(factorial(len - 1), sigma(other)) *
         rational_pow(Rational(n), len - 2);
}

// H for two rows against two rows.
Rational closed_form_two_row(const Partition& a, const Partition& b) {
  int d = a.weight();
  int mn = std::min(std::min(a.parts()[0], a.parts()[1]),
                    std::min(b.parts()[0], b.parts()[1]));
  int dup_a = a.parts()[0] == a.parts()[1] ? 2 : 1;
  int dup_b = b.parts()[0] == b.parts()[1] ? 2 : 1;
  return Rational(2 * (d - mn), dup_a * dup_b);
}

// H against [1^d] (and, with one part replaced by 2, against [2,1^{d-2}]):
// (d+n-2)!/sigma(other) * prod(k_i^{k_i}/k_i!) * d^{n-3}.
Rational closed_form_unramified(const Partition& other) {
  int d = other.weight();
  int n = other.length();
  Rational prod = Rational(factorial(d + n - 2), sigma(other));
  for (int part : other.parts()) {
    prod *= Rational(int_pow(part, part), factorial(part));
  }
  return prod * rational_pow(Rational(d), n - 3);
}

bool is_one_column(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v == 1; });
}

bool is_almost_one_column(const Partition& p) {
  if (p.weight() < 2 || p.parts()[0] != 2) return false;
  return std::all_of(p.parts().begin() + 1, p.parts().end(),
                     [](int v) { return v == 1; });
}

}  // namespace

Rational n_weighted_sum(const Partition& delta, const Partition& delta_bar,
                        CoefficientCache& cache) {
  require_valid_pair(delta, delta_bar);
  const int d = delta.weight();
  const int r_total = delta.length() + delta_bar.length() - 2;
  Rational sum = 0;
  for (const CoeffMatrix& matrix : enumerate_coeff_matrices(d, r_total)) {
    Rational n = n_coeff(delta, delta_bar, matrix, cache);
    if (n == 0) continue;
    Integer weight = 1;
    for (int j = 0; j < matrix.cols(); ++j) weight *= int_pow(matrix.s[j], matrix.r[j]);
    sum += Rational(weight) * n;
  }
  return sum;
}

Rational hurwitz_genus0(const Partition& delta, const Partition& delta_bar,
                        CoefficientCache& cache) {
  require_valid_pair(delta, delta_bar);
  const int l = delta.length() + delta_bar.length() - 2;
  Rational h = Rational(factorial(l), rho(delta) * rho(delta_bar)) *
               n_weighted_sum(delta, delta_bar, cache);
  if (h <= 0) {
    throw std::logic_error("positivity violated for " + delta.to_string() + "|" +
                           delta_bar.to_string());
  }
  return h;
}

std::optional<Rational> hurwitz_closed_form(const Partition& delta,
                                            const Partition& delta_bar) {
  require_valid_pair(delta, delta_bar);
  std::vector<Rational> values;

  if (delta.length() == 2 && delta_bar.length() == 2) {
    values.push_back(closed_form_two_row(delta, delta_bar));
  }
  if (delta_bar.length() == 1) values.push_back(closed_form_single_row(delta, delta_bar.parts()[0]));
  if (delta.length() == 1) values.push_back(closed_form_single_row(delta_bar, delta.parts()[0]));
  if (is_one_column(delta) || is_almost_one_column(delta)) {
    values.push_back(closed_form_unramified(delta_bar));
  }
  if (is_one_column(delta_bar) || is_almost_one_column(delta_bar)) {
    values.push_back(closed_form_unramified(delta));
  }

  if (values.empty()) return std::nullopt;
  for (const Rational& v : values) {
    if (v != values.front()) {
      throw std::logic_error("closed forms disagree for " + delta.to_string() + "|" +
                             delta_bar.to_string() + ": " + rat_str(values.front()) +
                             " vs " + rat_str(v));
    }
  }
  return values.front();
}

std::vector<HurwitzRecord> hurwitz_table(int d_max, const TableOptions& options,
                                         CoefficientCache& cache) {
  if (d_max < 1) throw DomainError("table needs d_max >= 1");

  std::vector<std::pair<Partition, Partition>> pairs;
  for (int d = 1; d <= d_max; ++d) {
    auto parts = enumerate_partitions(d);
    for (const auto& a : parts)
      for (const auto& b : parts) pairs.emplace_back(a, b);
  }

  std::vector<HurwitzRecord> records(pairs.size());
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&](size_t start, size_t stride) {
    try {
      for (size_t i = start; i < pairs.size(); i += stride) {
        const auto& [a, b] = pairs[i];
        HurwitzRecord rec;
        rec.delta = a;
        rec.delta_bar = b;
        rec.d = a.weight();
        rec.l = a.length() + b.length() - 2;
        rec.value = hurwitz_genus0(a, b, cache);
        rec.method = "theorem31";
        rec.closed_form = hurwitz_closed_form(a, b);
        if (options.with_oracle) {
          try {
            rec.oracle = oracle_hurwitz_genus0(a, b, options.oracle_budget).value;
          } catch (const BudgetError&) {
            rec.oracle_error = "budget_exceeded";
          }
        }
        records[i] = std::move(rec);
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t, jobs);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return records;
}

}  // namespace toda
