#include <doctest.h>

#include "toda/errors.hpp"
#include "toda/format.hpp"

using namespace toda;

TEST_CASE("rational rendering is decimal free") {
  CHECK(rat_str(Rational(4)) == "4/1");
  CHECK(rat_str(Rational(-1, 2)) == "-1/2");
  CHECK(rat_pretty(Rational(4)) == "4");
  CHECK(rat_pretty(Rational(1, 3)) == "1/3");
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("5") == Rational(5));
}

TEST_CASE("record formats are stable") {
  HurwitzRecord rec;
  rec.delta = Partition({2, 1});
  rec.delta_bar = Partition({2, 1});
  rec.d = 3;
  rec.l = 2;
  rec.value = Rational(4);
  rec.method = "theorem31";
  rec.closed_form = Rational(4);

  std::string csv = format_records({rec}, OutputFormat::csv);
  CHECK(csv ==
        "delta,delta_bar,d,l,value,method,closed_form,oracle\n"
        "\"[2,1]\",\"[2,1]\",3,2,4/1,theorem31,4/1,\n");

  std::string json = format_records({rec}, OutputFormat::json);
  CHECK(json.find("\"num\": \"4\"") != std::string::npos);
  CHECK(json.find("\"den\": \"1\"") != std::string::npos);

  std::string pretty = format_records({rec}, OutputFormat::pretty);
  CHECK(pretty.find("= 4") != std::string::npos);

  // Byte determinism of repeated rendering.
  CHECK(format_records({rec}, OutputFormat::json) == json);
}

TEST_CASE("format names parse") {
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_output_format("xml"), ParseError);
}

TEST_CASE("series export carries the coefficient monomials") {
  CoefficientCache cache;
  BackgroundAlgebra algebra(BackgroundFamily::hurwitz());
  auto series = expand_tau(algebra, 2, cache);
  std::string json = series_to_json(series, algebra.family());
  // The t_2 tbar_2 coefficient 2 Q^2 e^{2 beta t0} shows up with q_pow 2.
  CHECK(json.find("\"q_pow\": 2") != std::string::npos);
  CHECK(json.find("\"exp_coeff_d\": 2") != std::string::npos);
  CHECK(json.find("\"rational\": \"2/1\"") != std::string::npos);
  // The vacuum keeps its t0 and log Q powers.
  CHECK(json.find("\"t0_pow\": 3") != std::string::npos);
  CHECK(json.find("\"logq_pow\": 1") != std::string::npos);
  CHECK(series_to_json(series, algebra.family()) == json);
}
