// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion.  Exact arithmetic everywhere; every
// comparison is equality of rationals or of whole output strings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "toda/coefficients.hpp"
#include "toda/format.hpp"
#include "toda/hurwitz.hpp"
#include "toda/oracle.hpp"
#include "toda/series.hpp"

using namespace toda;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), seconds, detail.empty() ? "" : ("  " + detail).c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, name, pass, detail, seconds);
}

// 1. Oracle equivalence for every pair with d <= 5, exact.
bool oracle_equivalence(std::string& detail) {
  CoefficientCache cache;
  int pairs = 0;
  for (int d = 1; d <= 5; ++d) {
    auto partitions = enumerate_partitions(d);
    for (const auto& a : partitions) {
      for (const auto& b : partitions) {
        ++pairs;
        Rational formula = hurwitz_genus0(a, b, cache);
        Rational oracle = oracle_hurwitz_genus0(a, b).value;
        if (formula != oracle) {
          detail = a.to_string() + "|" + b.to_string() + ": formula " +
                   rat_str(formula) + " vs oracle " + rat_str(oracle);
          return false;
        }
      }
    }
  }
  detail = std::to_string(pairs) + " pairs";
  return true;
}

// 2. Closed-form suites.
bool closed_form_suites(std::string& detail) {
  CoefficientCache cache;

  // Single-row side, |Delta| <= 8.
  for (int n = 1; n <= 8; ++n) {
    Partition row({n});
    for (const auto& delta : enumerate_partitions(n)) {
      Rational expected = Rational(factorial(delta.length() - 1), sigma(delta)) *
                          rational_pow(Rational(n), delta.length() - 2);
      if (hurwitz_genus0(delta, row, cache) != expected ||
          hurwitz_genus0(row, delta, cache) != expected) {
        detail = "single-row failed at " + delta.to_string();
        return false;
      }
    }
  }

  // Two rows against two rows, d <= 10.
  for (int d = 2; d <= 10; ++d) {
    for (int i1 = d / 2 + d % 2; i1 < d; ++i1) {
      for (int b1 = d / 2 + d % 2; b1 < d; ++b1) {
        Partition a({i1, d - i1}), b({b1, d - b1});
        int mn = std::min({i1, d - i1, b1, d - b1});
        Rational expected = Rational(
            2 * (d - mn), (i1 == d - i1 ? 2 : 1) * (b1 == d - b1 ? 2 : 1));
        if (hurwitz_genus0(a, b, cache) != expected) {
          detail = "two-row failed at " + a.to_string() + "|" + b.to_string();
          return false;
        }
      }
    }
  }

  // Unramified and near-unramified sides, d <= 7.
  for (int d = 1; d <= 7; ++d) {
    std::vector<Partition> specials;
    specials.push_back(Partition(std::vector<int>(d, 1)));
    if (d >= 2) {
      std::vector<int> parts{2};
      for (int i = 0; i < d - 2; ++i) parts.push_back(1);
      specials.push_back(Partition(parts));
    }
    for (const auto& special : specials) {
      for (const auto& other : enumerate_partitions(d)) {
        int n = other.length();
        Rational expected = Rational(factorial(d + n - 2), sigma(other));
        for (int part : other.parts()) {
          expected *= Rational(int_pow(part, part), factorial(part));
        }
        expected *= rational_pow(Rational(d), n - 3);
        if (hurwitz_genus0(special, other, cache) != expected) {
          detail = "branched-cover count failed at " + special.to_string() + "|" +
                   other.to_string();
          return false;
        }
      }
    }
  }

  // Single row against every diagram of its weight, n <= 8.
  for (int n = 1; n <= 8; ++n) {
    for (const auto& delta : enumerate_partitions(n)) {
      Rational expected = Rational(factorial(delta.length() - 1), sigma(delta)) *
                          rational_pow(Rational(n), delta.length() - 2);
      if (hurwitz_genus0(Partition({n}), delta, cache) != expected) {
        detail = "row-vs-diagram failed at [n]=" + std::to_string(n) + ", " +
                 delta.to_string();
        return false;
      }
    }
  }
  return true;
}

// 3. Pinned values.
bool pinned_values(std::string& detail) {
  CoefficientCache cache;
  struct Pin {
    const char* a;
    const char* b;
    Rational expected;
  };
  const Pin pins[] = {{"[2,1]", "[2,1]", Rational(4)},
                      {"[1,1]", "[2]", Rational(1, 2)},
                      {"[3]", "[3]", Rational(1, 3)},
                      {"[2,2]", "[2,2]", Rational(1)},
                      {"[1,1,1]", "[3]", Rational(1)}};
  for (const auto& pin : pins) {
    Rational got =
        hurwitz_genus0(Partition::parse(pin.a), Partition::parse(pin.b), cache);
    if (got != pin.expected) {
      detail = std::string(pin.a) + "|" + pin.b + " = " + rat_str(got) +
               ", expected " + rat_str(pin.expected);
      return false;
    }
  }
  return true;
}

// 4. Symmetry and positivity for d <= 7.
bool symmetry_positivity(std::string& detail) {
  CoefficientCache cache;
  for (int d = 1; d <= 7; ++d) {
    auto partitions = enumerate_partitions(d);
    for (size_t i = 0; i < partitions.size(); ++i) {
      for (size_t j = 0; j < partitions.size(); ++j) {
        const auto& a = partitions[i];
        const auto& b = partitions[j];
        Rational sum = n_weighted_sum(a, b, cache);
        if (sum <= 0) {
          detail = "weighted sum not positive at " + a.to_string() + "|" + b.to_string();
          return false;
        }
        if (j < i) continue;  // symmetry once per unordered pair
        if (hurwitz_genus0(a, b, cache) != hurwitz_genus0(b, a, cache)) {
          detail = "asymmetric at " + a.to_string() + "|" + b.to_string();
          return false;
        }
      }
    }
  }
  return true;
}

// 5. Coefficient closed forms.
bool coefficient_closed_forms(std::string& detail) {
  CoefficientCache cache;
  for (int total = 2; total <= 12; ++total) {
    for (int i = 1; i < total; ++i) {
      for (int s1 = 1; s1 < total; ++s1) {
        int mn = std::min(std::min(i, total - i), std::min(s1, total - s1));
        if (t_pair(i, total - i, std::vector<int>{s1, total - s1}, cache) !=
            Rational(-mn, 2)) {
          detail = "t_pair failed at i=" + std::to_string(i) +
                   ", s1=" + std::to_string(s1) + ", total=" + std::to_string(total);
          return false;
        }
      }
    }
  }
  bool ok = true;
  for (int k = 1; k <= 5 && ok; ++k) {
    for (int total = k; total <= 8 && ok; ++total) {
      for_each_composition(total, k, 1, [&](const std::vector<int>& idx) {
        for (int s = 1; s <= 8; ++s) {
          for (int ell = 0; ell <= 8; ++ell) {
            Rational expected = (s == total && ell == k - 1) ? 1 : 0;
            if (t_multi(idx, std::vector<int>{s}, std::vector<int>{ell}, cache) !=
                expected) {
              ok = false;
              detail = "t_multi single-column failed at k=" + std::to_string(k);
            }
          }
        }
      });
    }
  }
  return ok;
}

// 6. Series identities.
bool series_identities(std::string& detail) {
  CoefficientCache cache;
  {
    BackgroundAlgebra algebra(BackgroundFamily::hurwitz());
    auto series = expand_tau(algebra, 5, cache);
    std::vector<CheckReport> reports{check_mixed_derivatives(series, algebra),
                                     check_toda_equation(series, algebra, 3),
                                     check_cut_and_join(series, algebra),
                                     check_homogeneity(series, algebra)};
    for (const auto& report : reports) {
      if (const CheckItem* failure = report.first_failure()) {
        detail = report.name + ": " + failure->identity + " " + failure->detail;
        return false;
      }
    }
  }
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    BackgroundAlgebra algebra(BackgroundFamily::homogeneous(alpha));
    auto series = expand_tau(algebra, 3, cache);
    auto report = check_homogeneity(series, algebra);
    if (const CheckItem* failure = report.first_failure()) {
      detail = "alpha=" + rat_pretty(alpha) + ": " + failure->detail;
      return false;
    }
  }
  return true;
}

// 7. Byte-identical table output across worker counts and cache states.
bool determinism(std::string& detail) {
  auto render = [](int jobs, CoefficientCache& cache) {
    TableOptions opts;
    opts.with_oracle = true;
    opts.jobs = jobs;
    auto records = hurwitz_table(5, opts, cache);
    return format_records(records, OutputFormat::json) +
           format_records(records, OutputFormat::csv);
  };

  CoefficientCache cold1, cold8;
  std::string serial_cold = render(1, cold1);
  std::string parallel_cold = render(8, cold8);
  std::string serial_warm = render(1, cold1);   // cache now warm
  std::string parallel_warm = render(8, cold8);

  if (serial_cold != parallel_cold) {
    detail = "worker count changed the output";
    return false;
  }
  if (serial_cold != serial_warm || parallel_cold != parallel_warm) {
    detail = "cache state changed the output";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "oracle equivalence for all pairs up to weight 5", oracle_equivalence);
  criterion(2, "closed-form suites", closed_form_suites);
  criterion(3, "pinned values", pinned_values);
  criterion(4, "symmetry and positivity up to weight 7", symmetry_positivity);
  criterion(5, "coefficient closed forms", coefficient_closed_forms);
  criterion(6, "series identities", series_identities);
  criterion(7, "deterministic table output", determinism);

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
