#include "doctest.h"

#include <cmath>
#include <limits>

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/errors.hpp"
#include "ajoin/io.hpp"

using namespace ajoin;

TEST_CASE("format_number") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(5.63212345678901) == "5.63212345679");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("output format names") {
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format("plain") == OutputFormat::Plain);
  CHECK_THROWS_AS(parse_output_format("xml"), InvalidParameter);
}

TEST_CASE("spectrum serializations") {
  const Spectrum s = Spectrum::from_values({3, 1, 1, 1}, 1e-9);
  const Json j = to_json(s);
  REQUIRE(j["eigenvalues"].size() == 2);
  CHECK(j["eigenvalues"][0]["value"] == 3.0);
  CHECK(j["eigenvalues"][1]["multiplicity"] == 3);
  CHECK(j["eigenvalues"][0]["clause"].is_null());
  CHECK(to_csv(s) == "value\n3\n1\n1\n1\n");
  CHECK(to_plain(s) == "3 x1\n1 x3\n");
}

TEST_CASE("closed-form serializations carry clause tags") {
  const JoinSpec spec(JoinKind::QVertex, complete_graph(4), path_graph(2));
  const auto closed = closed_form_spectrum(spec, AlphaParam(0.5));
  const Json j = to_json(closed);
  std::size_t total = 0;
  for (const auto& e : j["eigenvalues"]) {
    CHECK(e["clause"].get<std::string>().rfind("Cor1.1(b)", 0) == 0);
    total += e["multiplicity"].get<std::size_t>();
  }
  CHECK(total == 12);
  CHECK(to_json(closed).dump() == j.dump());
}

TEST_CASE("graph json") {
  const Json j = to_json(path_graph(3));
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 2);
  CHECK(j["edges"].dump() == "[[0,1],[1,2]]");
}
