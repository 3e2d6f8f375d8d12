#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toda/coeff_matrix.hpp"
#include "toda/hurwitz.hpp"
#include "toda/oracle.hpp"
#include "toda/series.hpp"

namespace toda {

enum class OutputFormat { json, csv, pretty };

OutputFormat parse_output_format(const std::string& name);  // throws ParseError

// Hurwitz records.  JSON schema per record:
// {"delta":[..],"delta_bar":[..],"d":int,"l":int,
//  "value":{"num":str,"den":str},"method":str,
//  "closed_form":{..}?, "oracle":{..}?, "oracle_error":str?}
// CSV renders rationals as "num/den".
std::string format_records(const std::vector<HurwitzRecord>& records,
                           OutputFormat format);

// N-coefficient listing for one pair.
struct CoeffListing {
  Partition delta;
  Partition delta_bar;
  std::vector<std::pair<CoeffMatrix, Rational>> coefficients;  // nonzero only
  Rational weighted_sum;
  Rational hurwitz;
};
std::string format_coeff_listing(const CoeffListing& listing, OutputFormat format);

std::string format_oracle_result(const Partition& delta, const Partition& delta_bar,
                                 const OracleResult& result, OutputFormat format);

std::string format_reports(const std::vector<CheckReport>& reports,
                           OutputFormat format);

// Series export: one entry per stored time monomial, each coefficient
// monomial as {"q_pow","exp_coeff_d","beta_pow","rational", ...extras}.
std::string series_to_json(const TruncatedSeries& series,
                           const BackgroundFamily& family);

}  // namespace toda
