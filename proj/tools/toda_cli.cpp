// Command-line front end: exact genus-0 double Hurwitz numbers, the
// universal coefficients behind them, a brute-force factorization oracle,
// and formal identity checks on truncated expansions.
//
// Exit codes: 0 ok, 2 usage or domain error, 3 oracle budget exceeded,
// 4 cross-check disagreement, 5 identity failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "toda/cache.hpp"
#include "toda/coefficients.hpp"
#include "toda/errors.hpp"
#include "toda/format.hpp"
#include "toda/hurwitz.hpp"
#include "toda/oracle.hpp"
#include "toda/series.hpp"
#include "toda/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitIdentity = 5;

struct CliOptions {
  std::string format = "pretty";
  std::string cache_path;
  int jobs = 1;
};

toda::OutputFormat output_format(const CliOptions& opts) {
  return toda::parse_output_format(opts.format);
}

int run_hurwitz(const CliOptions& opts, const std::string& delta_text,
                const std::string& delta_bar_text, bool verify, long long budget,
                toda::CoefficientCache& cache) {
  auto delta = toda::Partition::parse(delta_text);
  auto delta_bar = toda::Partition::parse(delta_bar_text);

  toda::HurwitzRecord rec;
  rec.delta = delta;
  rec.delta_bar = delta_bar;
  rec.d = delta.weight();
  rec.l = delta.length() + delta_bar.length() - 2;
  rec.value = toda::hurwitz_genus0(delta, delta_bar, cache);
  rec.method = "theorem31";
  rec.closed_form = toda::hurwitz_closed_form(delta, delta_bar);

  if (verify) {
    rec.oracle =
        toda::oracle_hurwitz_genus0(delta, delta_bar, toda::Integer(budget), opts.jobs)
            .value;
  }
  std::cout << toda::format_records({rec}, output_format(opts));

  if (verify) {
    if (rec.closed_form && *rec.closed_form != rec.value) {
      std::cerr << "disagreement: closed form " << toda::rat_str(*rec.closed_form)
                << " vs " << toda::rat_str(rec.value) << "\n";
      return kExitDisagreement;
    }
    if (*rec.oracle != rec.value) {
      std::cerr << "disagreement: oracle " << toda::rat_str(*rec.oracle) << " vs "
                << toda::rat_str(rec.value) << "\n";
      return kExitDisagreement;
    }
  }
  return kExitOk;
}

int run_table(const CliOptions& opts, int d_max, bool verify, long long budget,
              toda::CoefficientCache& cache) {
  toda::TableOptions topts;
  topts.with_oracle = verify;
  topts.oracle_budget = toda::Integer(budget);
  topts.jobs = opts.jobs;
  auto records = toda::hurwitz_table(d_max, topts, cache);
  std::cout << toda::format_records(records, output_format(opts));
  if (verify) {
    for (const auto& rec : records) {
      if (rec.oracle && *rec.oracle != rec.value) {
        std::cerr << "disagreement at " << rec.delta.to_string() << "|"
                  << rec.delta_bar.to_string() << ": oracle "
                  << toda::rat_str(*rec.oracle) << " vs " << toda::rat_str(rec.value)
                  << "\n";
        return kExitDisagreement;
      }
    }
  }
  return kExitOk;
}

int run_coeff(const CliOptions& opts, const std::string& delta_text,
              const std::string& delta_bar_text, toda::CoefficientCache& cache) {
  auto delta = toda::Partition::parse(delta_text);
  auto delta_bar = toda::Partition::parse(delta_bar_text);
  if (delta.empty() || delta_bar.empty()) {
    throw toda::DomainError("coefficient listing needs nonempty diagrams");
  }
  if (delta.weight() != delta_bar.weight()) {
    throw toda::DomainError("weight mismatch between " + delta.to_string() + " and " +
                            delta_bar.to_string());
  }
  toda::CoeffListing listing;
  listing.delta = delta;
  listing.delta_bar = delta_bar;
  int r_total = delta.length() + delta_bar.length() - 2;
  for (const auto& matrix : toda::enumerate_coeff_matrices(delta.weight(), r_total)) {
    toda::Rational n = toda::n_coeff(delta, delta_bar, matrix, cache);
    if (n != 0) listing.coefficients.emplace_back(matrix, n);
  }
  listing.weighted_sum = toda::n_weighted_sum(delta, delta_bar, cache);
  listing.hurwitz = toda::hurwitz_genus0(delta, delta_bar, cache);
  std::cout << toda::format_coeff_listing(listing, output_format(opts));
  return kExitOk;
}

int run_oracle(const CliOptions& opts, const std::string& delta_text,
               const std::string& delta_bar_text, long long budget) {
  auto delta = toda::Partition::parse(delta_text);
  auto delta_bar = toda::Partition::parse(delta_bar_text);
  auto result =
      toda::oracle_hurwitz_genus0(delta, delta_bar, toda::Integer(budget), opts.jobs);
  std::cout << toda::format_oracle_result(delta, delta_bar, result, output_format(opts));
  return kExitOk;
}

int run_series_check(const CliOptions& opts, const std::string& family_name,
                     const std::string& alpha_text, int depth, int toda_depth,
                     const std::string& export_path, toda::CoefficientCache& cache) {
  toda::BackgroundFamily family;
  if (family_name == "hurwitz") {
    family = toda::BackgroundFamily::hurwitz();
  } else if (family_name == "homogeneous") {
    family = toda::BackgroundFamily::homogeneous(toda::parse_rational(alpha_text));
  } else {
    throw toda::ParseError("unknown family '" + family_name +
                           "' (hurwitz, homogeneous)");
  }
  if (depth < 0) throw toda::DomainError("depth must be >= 0");

  toda::BackgroundAlgebra algebra(family);
  auto series = toda::expand_tau(algebra, depth, cache);

  std::vector<toda::CheckReport> reports;
  reports.push_back(toda::check_mixed_derivatives(series, algebra));
  reports.push_back(toda::check_homogeneity(series, algebra));
  if (family.kind == toda::FamilyKind::hurwitz) {
    reports.push_back(toda::check_cut_and_join(series, algebra));
    if (depth >= 1) {
      int td = toda_depth >= 0 ? toda_depth : depth - 1;
      reports.push_back(toda::check_toda_equation(series, algebra, td));
    }
  }

  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw toda::DomainError("cannot write " + export_path);
    out << toda::series_to_json(series, family);
  }

  std::cout << toda::format_reports(reports, output_format(opts));
  for (const auto& report : reports) {
    if (const toda::CheckItem* failure = report.first_failure()) {
      std::cerr << "identity failure in " << report.name << ": " << failure->identity
                << (failure->detail.empty() ? "" : " (" + failure->detail + ")")
                << "\n";
      return kExitIdentity;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus-0 double Hurwitz numbers via universal"
               " dispersionless-lattice coefficients"};
  app.require_subcommand(0, 1);

  CliOptions opts;
  bool show_version = false;
  app.add_option("--format", opts.format, "Output format: json, csv, pretty")
      ->capture_default_str();
  app.add_option("--cache", opts.cache_path, "Coefficient cache file to load/update");
  app.add_option("--jobs", opts.jobs, "Worker threads for table/oracle")
      ->capture_default_str();
  app.add_flag("--version", show_version, "Print version and exit");

  std::string delta_text, delta_bar_text;
  long long budget = 500000000;
  bool verify = false;
  int d_max = 1;
  std::string family_name, alpha_text = "1", export_path;
  int depth = 3, toda_depth = -1;

  auto* cmd_hurwitz = app.add_subcommand("hurwitz", "One double Hurwitz number");
  cmd_hurwitz->fallthrough();
  cmd_hurwitz->add_option("delta", delta_text, "Ramification over 0, e.g. [2,1]")
      ->required();
  cmd_hurwitz->add_option("delta_bar", delta_bar_text, "Ramification over infinity")
      ->required();
  cmd_hurwitz->add_flag("--verify", verify,
                        "Cross-check against closed forms and the oracle");
  cmd_hurwitz->add_option("--budget", budget, "Oracle step budget")
      ->capture_default_str();

  auto* cmd_table = app.add_subcommand("table", "All pairs up to a weight");
  cmd_table->fallthrough();
  cmd_table->add_option("d_max", d_max, "Maximum weight")->required();
  cmd_table->add_flag("--verify", verify, "Add oracle columns where feasible");
  cmd_table->add_option("--budget", budget, "Oracle step budget")
      ->capture_default_str();

  auto* cmd_coeff = app.add_subcommand("coeff", "Universal N coefficients of a pair");
  cmd_coeff->fallthrough();
  cmd_coeff->add_option("delta", delta_text)->required();
  cmd_coeff->add_option("delta_bar", delta_bar_text)->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "Brute-force factorization count");
  cmd_oracle->fallthrough();
  cmd_oracle->add_option("delta", delta_text)->required();
  cmd_oracle->add_option("delta_bar", delta_bar_text)->required();
  cmd_oracle->add_option("--budget", budget, "Step budget")->capture_default_str();

  auto* cmd_series = app.add_subcommand("series-check",
                                        "Verify formal identities on the expansion");
  cmd_series->fallthrough();
  cmd_series->add_option("family", family_name, "hurwitz or homogeneous")->required();
  cmd_series->add_option("--alpha", alpha_text, "Homogeneous exponent (rational)")
      ->capture_default_str();
  cmd_series->add_option("--depth", depth, "Per-side weight bound")
      ->capture_default_str();
  cmd_series->add_option("--toda-depth", toda_depth,
                         "Depth of the lattice-equation check (default: depth-1)");
  cmd_series->add_option("--export", export_path, "Write the expansion as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (show_version) {
    std::cout << "toda " << toda::kVersion << " (coefficient formulas v"
              << toda::kFormulaVersion << ")\n";
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }

  toda::CoefficientCache cache;
  try {
    if (!opts.cache_path.empty() && std::filesystem::exists(opts.cache_path)) {
      cache.load(opts.cache_path);
    }

    int code = kExitOk;
    if (cmd_hurwitz->parsed()) {
      code = run_hurwitz(opts, delta_text, delta_bar_text, verify, budget, cache);
    } else if (cmd_table->parsed()) {
      code = run_table(opts, d_max, verify, budget, cache);
    } else if (cmd_coeff->parsed()) {
      code = run_coeff(opts, delta_text, delta_bar_text, cache);
    } else if (cmd_oracle->parsed()) {
      code = run_oracle(opts, delta_text, delta_bar_text, budget);
    } else if (cmd_series->parsed()) {
      code = run_series_check(opts, family_name, alpha_text, depth, toda_depth,
                              export_path, cache);
    }

    if (code == kExitOk && !opts.cache_path.empty()) {
      cache.save(opts.cache_path);
    }
    return code;
  } catch (const toda::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const toda::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const toda::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const toda::CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
