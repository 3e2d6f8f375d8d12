#include "toda/format.hpp"

#include <json.hpp>

#include <sstream>

#include "toda/errors.hpp"
#include "toda/version.hpp"

namespace toda {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& q) {
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

json partition_to_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

std::string csv_quote(const std::string& field) {
  if (field.find(',') == std::string::npos && field.find('"') == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json record_to_json(const HurwitzRecord& rec) {
  json j{{"delta", partition_to_json(rec.delta)},
         {"delta_bar", partition_to_json(rec.delta_bar)},
         {"d", rec.d},
         {"l", rec.l},
         {"value", rational_to_json(rec.value)},
         {"method", rec.method}};
  if (rec.closed_form) j["closed_form"] = rational_to_json(*rec.closed_form);
  if (rec.oracle) j["oracle"] = rational_to_json(*rec.oracle);
  if (rec.oracle_error) j["oracle_error"] = *rec.oracle_error;
  return j;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "pretty") return OutputFormat::pretty;
  throw ParseError("unknown output format '" + name + "' (json, csv, pretty)");
}

std::string format_records(const std::vector<HurwitzRecord>& records,
                           OutputFormat format) {
  if (format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(record_to_json(rec));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "delta,delta_bar,d,l,value,method,closed_form,oracle\n";
    for (const auto& rec : records) {
      out << csv_quote(rec.delta.to_string()) << ','
          << csv_quote(rec.delta_bar.to_string()) << ',' << rec.d << ',' << rec.l << ','
          << rat_str(rec.value) << ',' << rec.method << ','
          << (rec.closed_form ? rat_str(*rec.closed_form) : "") << ','
          << (rec.oracle ? rat_str(*rec.oracle)
                         : rec.oracle_error ? *rec.oracle_error : "")
          << '\n';
    }
    return out.str();
  }
  for (const auto& rec : records) {
    out << "H0(" << rec.delta.to_string() << " | " << rec.delta_bar.to_string()
        << ") = " << rat_pretty(rec.value) << "   [d=" << rec.d << ", l=" << rec.l
        << "]";
    if (rec.closed_form) out << "  closed_form=" << rat_pretty(*rec.closed_form);
    if (rec.oracle) out << "  oracle=" << rat_pretty(*rec.oracle);
    if (rec.oracle_error) out << "  oracle=(" << *rec.oracle_error << ")";
    out << '\n';
  }
  return out.str();
}

std::string format_coeff_listing(const CoeffListing& listing, OutputFormat format) {
  if (format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& [matrix, value] : listing.coefficients) {
      json s = json::array(), r = json::array();
      for (int v : matrix.s) s.push_back(v);
      for (int v : matrix.r) r.push_back(v);
      arr.push_back(json{{"s", s}, {"r", r}, {"value", rational_to_json(value)}});
    }
    json j{{"delta", partition_to_json(listing.delta)},
           {"delta_bar", partition_to_json(listing.delta_bar)},
           {"coefficients", arr},
           {"weighted_sum", rational_to_json(listing.weighted_sum)},
           {"hurwitz", rational_to_json(listing.hurwitz)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "s,r,value\n";
    for (const auto& [matrix, value] : listing.coefficients) {
      std::string s, r;
      for (size_t i = 0; i < matrix.s.size(); ++i) {
        if (i) s += ' ', r += ' ';
        s += std::to_string(matrix.s[i]);
        r += std::to_string(matrix.r[i]);
      }
      out << s << ',' << r << ',' << rat_str(value) << '\n';
    }
    return out.str();
  }
  out << "N coefficients for " << listing.delta.to_string() << " | "
      << listing.delta_bar.to_string() << ":\n";
  for (const auto& [matrix, value] : listing.coefficients) {
    out << "  N" << matrix.to_string() << " = " << rat_pretty(value) << '\n';
  }
  out << "weighted sum = " << rat_pretty(listing.weighted_sum) << '\n';
  out << "H0 = " << rat_pretty(listing.hurwitz) << '\n';
  return out.str();
}

std::string format_oracle_result(const Partition& delta, const Partition& delta_bar,
                                 const OracleResult& result, OutputFormat format) {
  if (format == OutputFormat::json) {
    json j{{"delta", partition_to_json(delta)},
           {"delta_bar", partition_to_json(delta_bar)},
           {"value", rational_to_json(result.value)},
           {"tuple_count", result.tuple_count.str()},
           {"rep_tuple_count", result.rep_tuple_count.str()},
           {"rep_match_count", result.rep_match_count.str()},
           {"visited_nodes", result.visited_nodes}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "delta,delta_bar,value,tuple_count,rep_tuple_count,rep_match_count\n"
        << csv_quote(delta.to_string()) << ',' << csv_quote(delta_bar.to_string()) << ','
        << rat_str(result.value) << ',' << result.tuple_count.str() << ','
        << result.rep_tuple_count.str() << ',' << result.rep_match_count.str() << '\n';
    return out.str();
  }
  out << "oracle H0(" << delta.to_string() << " | " << delta_bar.to_string()
      << ") = " << rat_pretty(result.value) << "  (" << result.tuple_count.str()
      << " transitive tuples, " << result.rep_match_count.str()
      << " type matches per representative, " << result.visited_nodes
      << " nodes)\n";
  return out.str();
}

std::string format_reports(const std::vector<CheckReport>& reports,
                           OutputFormat format) {
  if (format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& report : reports) {
      json items = json::array();
      for (const auto& item : report.items) {
        json j{{"identity", item.identity}, {"pass", item.pass}};
        if (!item.detail.empty()) j["detail"] = item.detail;
        items.push_back(j);
      }
      arr.push_back(json{{"check", report.name},
                         {"pass", report.pass()},
                         {"items", items}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "check,identity,pass,detail\n";
    for (const auto& report : reports) {
      for (const auto& item : report.items) {
        out << report.name << ',' << csv_quote(item.identity) << ','
            << (item.pass ? "pass" : "FAIL") << ',' << csv_quote(item.detail) << '\n';
      }
    }
    return out.str();
  }
  for (const auto& report : reports) {
    out << report.name << ": " << (report.pass() ? "PASS" : "FAIL") << " ("
        << report.items.size() << " identities)\n";
    for (const auto& item : report.items) {
      if (!item.pass) {
        out << "  FAIL " << item.identity;
        if (!item.detail.empty()) out << ": " << item.detail;
        out << '\n';
      }
    }
  }
  return out.str();
}

std::string series_to_json(const TruncatedSeries& series,
                           const BackgroundFamily& family) {
  json arr = json::array();
  for (const auto& [key, term] : series.coefficients()) {
    json coeffs = json::array();
    for (const auto& [m, c] : term.terms()) {
      json j{{"q_pow", m.e_pow},
             {"exp_coeff_d", m.e_pow},
             {"beta_pow", m.beta_pow},
             {"rational", rat_str(c)}};
      if (m.t0_pow) j["t0_pow"] = m.t0_pow;
      if (m.logq_pow) j["logq_pow"] = m.logq_pow;
      if (m.u_pow != 0) j["u_pow"] = rat_str(m.u_pow);
      if (m.logu_pow) j["logu_pow"] = m.logu_pow;
      coeffs.push_back(j);
    }
    arr.push_back(json{{"delta", partition_to_json(key.delta)},
                       {"delta_bar", partition_to_json(key.delta_bar)},
                       {"coeff", coeffs}});
  }
  json root{{"family", family.name()},
            {"bound", series.bound()},
            {"formula_version", kFormulaVersion},
            {"terms", arr}};
  if (family.kind == FamilyKind::homogeneous) root["alpha"] = rat_str(family.alpha);
  return root.dump(2) + "\n";
}

}  // namespace toda
