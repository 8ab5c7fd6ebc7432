#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osc/algebra.hpp"
#include "osc/identities.hpp"
#include "osc/lacunar.hpp"
#include "osc/markov.hpp"
#include "osc/matrix.hpp"
#include "osc/polynomial.hpp"
#include "osc/spectrum.hpp"

namespace osc {

// JSON and CSV writers. Every rational goes out as "p/q" and every big
// integer as a decimal string. JSON output is pretty-printed with two-space
// indentation and a trailing newline.

// {"n": 3, "terms": [{"perm": "1,2,3", "num": "1", "den": "1"}, ...]}
std::string element_json(const AlgebraElement& x);
AlgebraElement parse_element_json(std::string_view text);

std::string spectrum_json(const SpectrumReport& report);
std::string spectrum_csv(const SpectrumReport& report);
std::string spectrum_text(const SpectrumReport& report);

// Q_i, Q_i', dim F_i and delta_i for every catalog index; dim F_i is the
// running sum of the deltas.
struct FiltrationRow {
  std::size_t index;
  IndexSubset set;
  IndexSubset non_shadow;
  BigInt dimension;
  BigInt delta;
};
std::vector<FiltrationRow> filtration_table(const LacunarCatalog& catalog);
std::string filtration_json(int n, const std::vector<FiltrationRow>& rows);
std::string filtration_csv(const std::vector<FiltrationRow>& rows);
std::string filtration_text(int n, const std::vector<FiltrationRow>& rows);

// labels name the rows and columns, in order.
std::string matrix_json(const RationalMatrix& m, const std::vector<std::string>& labels);
std::string matrix_csv(const RationalMatrix& m, const std::vector<std::string>& labels);
std::string matrix_text(const RationalMatrix& m, const std::vector<std::string>& labels);

// Coefficient array, constant term first.
std::string polynomial_json(const Polynomial& p);

std::string identity_report_json(const IdentityReport& report);
std::string identity_report_text(const IdentityReport& report);

// With exact_oracle set (random-to-below), the exact expected time and the
// bounds are included; otherwise those fields are null.
std::string simulation_json(const SimulationResult& result, bool exact_oracle);
std::string simulation_text(const SimulationResult& result, bool exact_oracle);

// Plain decimal rendering of a long double.
std::string decimal_string(long double value, int significant_digits = 18);

}  // namespace osc
