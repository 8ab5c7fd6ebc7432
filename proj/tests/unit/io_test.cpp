#include <gtest/gtest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "osc/io.hpp"
#include "osc/lacunar.hpp"
#include "osc/matrix.hpp"
#include "osc/shuffles.hpp"
#include "osc/spectrum.hpp"

using nlohmann::json;
using osc::Rational;

TEST(Io, ElementJsonRoundTrip) {
  osc::AlgebraElement x = osc::somewhere_to_below(4, 2);
  x *= Rational(-3, 7);
  const std::string text = osc::element_json(x);
  EXPECT_EQ(osc::parse_element_json(text), x);
  const json parsed = json::parse(text);
  EXPECT_EQ(parsed["n"], 4);
  EXPECT_EQ(parsed["terms"][0]["num"], "-3");
  EXPECT_EQ(parsed["terms"][0]["den"], "7");
}

TEST(Io, ParseRejectsMalformed) {
  EXPECT_ANY_THROW(osc::parse_element_json("{\"n\": 3}"));
  EXPECT_ANY_THROW(osc::parse_element_json("not json"));
}

TEST(Io, FiltrationJson) {
  const auto rows = osc::filtration_table(osc::LacunarCatalog(4));
  const json parsed = json::parse(osc::filtration_json(4, rows));
  ASSERT_TRUE(parsed.is_object());
  EXPECT_EQ(rows.back().dimension, 24);
  EXPECT_EQ(rows[2].delta, 8);
}

TEST(Io, SpectrumCsvHasOneRowPerSet) {
  const auto report = osc::full_spectrum(osc::WeightVector::constant(4, 1));
  const std::string csv = osc::spectrum_csv(report);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

TEST(Io, MatrixCsvUsesFractions) {
  osc::RationalMatrix m(1, 1);
  m(0, 0) = Rational(2, 1);
  EXPECT_NE(osc::matrix_csv(m, {"1"}).find("2/1"), std::string::npos);
}
