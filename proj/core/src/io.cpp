#include "osc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace osc {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json subset_json(const IndexSubset& s) { return s.elements(); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values[k]);
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Left-aligned columns separated by " | ".
std::string render_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += " | ";
      line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]);
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string decimal_string(long double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*Lg", significant_digits, value);
  return buffer;
}

std::string element_json(const AlgebraElement& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : x.terms()) {
    terms.push_back({{"perm", w.to_string()},
                     {"num", to_string(BigInt(c.get_num()))},
                     {"den", to_string(BigInt(c.get_den()))}});
  }
  return dump({{"n", x.degree()}, {"terms", terms}});
}

AlgebraElement parse_element_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("element json: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    AlgebraElement out(n);
    for (const auto& term : j.at("terms")) {
      const Permutation w = Permutation::parse(term.at("perm").get<std::string>());
      if (w.degree() != n) throw std::invalid_argument("element json: term degree mismatch");
      out.add_term(w, parse_rational(term.at("num").get<std::string>() + "/" +
                                     term.at("den").get<std::string>()));
    }
    return out;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("element json: ") + e.what());
  }
}

std::string spectrum_json(const SpectrumReport& report) {
  ordered_json weights = ordered_json::array();
  for (const Rational& w : report.weights.values) weights.push_back(fraction_string(w));
  ordered_json rows = ordered_json::array();
  for (const SpectrumRow& row : report.rows) {
    rows.push_back({{"set", subset_json(row.set)},
                    {"m", row.m},
                    {"eigenvalue", fraction_string(row.eigenvalue)},
                    {"multiplicity", to_string(row.multiplicity)}});
  }
  ordered_json aggregate = ordered_json::array();
  for (const auto& [value, mult] : report.aggregate) {
    aggregate.push_back({{"eigenvalue", fraction_string(value)}, {"multiplicity", to_string(mult)}});
  }
  return dump({{"n", report.n}, {"weights", weights}, {"rows", rows}, {"aggregate", aggregate}});
}

std::string spectrum_csv(const SpectrumReport& report) {
  std::string out = "index,set,m,eigenvalue,multiplicity\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SpectrumRow& row = report.rows[i];
    out += std::to_string(i + 1) + "," + quoted(row.set.to_string()) + "," +
           quoted(join_ints(row.m)) + "," + fraction_string(row.eigenvalue) + "," +
           to_string(row.multiplicity) + "\n";
  }
  return out;
}

std::string spectrum_text(const SpectrumReport& report) {
  std::vector<std::vector<std::string>> cells{{"i", "Q_i", "m", "g_i", "delta_i"}};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SpectrumRow& row = report.rows[i];
    cells.push_back({std::to_string(i + 1), row.set.to_string(), "(" + join_ints(row.m) + ")",
                     display_string(row.eigenvalue), to_string(row.multiplicity)});
  }
  std::string out = "n = " + std::to_string(report.n) + "\n" + render_table(cells) + "\n";
  std::vector<std::vector<std::string>> agg{{"eigenvalue", "multiplicity"}};
  for (const auto& [value, mult] : report.aggregate) {
    agg.push_back({display_string(value), to_string(mult)});
  }
  return out + render_table(agg);
}

std::vector<FiltrationRow> filtration_table(const LacunarCatalog& catalog) {
  std::vector<FiltrationRow> rows;
  BigInt running = 0;
  for (std::size_t i = 1; i <= catalog.size(); ++i) {
    BigInt d = delta(i, catalog);
    running += d;
    rows.push_back({i, catalog.set(i), catalog.non_shadow_of(i), running, std::move(d)});
  }
  return rows;
}

std::string filtration_json(int n, const std::vector<FiltrationRow>& rows) {
  ordered_json out_rows = ordered_json::array();
  for (const FiltrationRow& row : rows) {
    out_rows.push_back({{"i", row.index},
                        {"set", subset_json(row.set)},
                        {"non_shadow", subset_json(row.non_shadow)},
                        {"dim", to_string(row.dimension)},
                        {"delta", to_string(row.delta)}});
  }
  return dump({{"n", n}, {"rows", out_rows}});
}

std::string filtration_csv(const std::vector<FiltrationRow>& rows) {
  std::string out = "i,set,non_shadow,dim,delta\n";
  for (const FiltrationRow& row : rows) {
    out += std::to_string(row.index) + "," + quoted(row.set.to_string()) + "," +
           quoted(row.non_shadow.to_string()) + "," + to_string(row.dimension) + "," +
           to_string(row.delta) + "\n";
  }
  return out;
}

std::string filtration_text(int n, const std::vector<FiltrationRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"i"}, {"Q_i"}, {"Q_i'"}, {"dim F_i"}, {"delta_i"}};
  for (const FiltrationRow& row : rows) {
    cells[0].push_back(std::to_string(row.index));
    cells[1].push_back(row.set.to_string());
    cells[2].push_back(row.non_shadow.to_string());
    cells[3].push_back(to_string(row.dimension));
    cells[4].push_back(to_string(row.delta));
  }
  return "n = " + std::to_string(n) + "\n" + render_table(cells);
}

std::string matrix_json(const RationalMatrix& m, const std::vector<std::string>& labels) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (const Rational& v : m.row(r)) row.push_back(fraction_string(v));
    rows.push_back(std::move(row));
  }
  return dump({{"rows", m.rows()}, {"cols", m.cols()}, {"labels", labels}, {"entries", rows}});
}

std::string matrix_csv(const RationalMatrix& m, const std::vector<std::string>& labels) {
  std::string out = "\"\"";
  for (const std::string& label : labels) out += "," + quoted(label);
  out += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += quoted(r < labels.size() ? labels[r] : std::to_string(r + 1));
    for (const Rational& v : m.row(r)) out += "," + fraction_string(v);
    out += "\n";
  }
  return out;
}

std::string matrix_text(const RationalMatrix& m, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  header.insert(header.end(), labels.begin(), labels.end());
  cells.push_back(std::move(header));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row{r < labels.size() ? labels[r] : std::to_string(r + 1)};
    for (const Rational& v : m.row(r)) row.push_back(display_string(v));
    cells.push_back(std::move(row));
  }
  return render_table(cells);
}

std::string polynomial_json(const Polynomial& p) {
  ordered_json coefficients = ordered_json::array();
  for (const Rational& c : p.coefficients()) coefficients.push_back(fraction_string(c));
  return dump({{"degree", p.degree()}, {"coefficients", coefficients}});
}

namespace {

ordered_json check_json(const IdentityCheck& check) {
  ordered_json out{{"name", check.name}, {"params", check.params}, {"passed", check.passed},
                   {"residual_terms", check.residual_terms}};
  out["smallest_residual"] =
      check.smallest_residual ? ordered_json(check.smallest_residual->to_string()) : ordered_json();
  return out;
}

}  // namespace

std::string identity_report_json(const IdentityReport& report) {
  ordered_json checks = ordered_json::array();
  for (const IdentityCheck& check : report.checks) checks.push_back(check_json(check));
  return dump({{"n", report.n},
               {"passed", report.all_passed()},
               {"failures", report.failures()},
               {"checks", checks}});
}

std::string identity_report_text(const IdentityReport& report) {
  std::ostringstream out;
  for (const IdentityCheck& check : report.checks) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << join_ints(check.params)
        << ")";
    if (!check.passed) {
      out << ": " << check.residual_terms << " surviving terms";
      if (check.smallest_residual) out << ", smallest " << check.smallest_residual->to_string();
    }
    out << "\n";
  }
  out << report.checks.size() - report.failures() << "/" << report.checks.size()
      << " checks passed at n = " << report.n << "\n";
  return out.str();
}

namespace {

ordered_json simulation_object(const SimulationResult& result, bool exact_oracle) {
  ordered_json out{{"n", result.n},          {"trials", result.trials}, {"seed", result.seed},
                   {"rng", result.rng},      {"fast", result.fast},     {"mean", result.mean},
                   {"stderr", result.standard_error}};
  out["exact"] = nullptr;
  out["exact_decimal"] = nullptr;
  out["upper_bound"] = nullptr;
  out["conjectured_lower"] = nullptr;
  if (exact_oracle && result.n >= 2) {
    if (result.n <= kExactTauMax) out["exact"] = fraction_string(exact_expected_tau(result.n));
    out["exact_decimal"] = static_cast<double>(expected_tau_extended(result.n));
    const TauBounds b = bounds(result.n);
    out["upper_bound"] = static_cast<double>(b.upper);
    if (b.conjectured_lower) out["conjectured_lower"] = static_cast<double>(*b.conjectured_lower);
  }
  out["histogram"] = result.histogram;
  return out;
}

}  // namespace

std::string simulation_json(const SimulationResult& result, bool exact_oracle) {
  return dump(simulation_object(result, exact_oracle));
}

std::string simulation_text(const SimulationResult& result, bool exact_oracle) {
  const ordered_json j = simulation_object(result, exact_oracle);
  std::ostringstream out;
  out << "n = " << result.n << ", trials = " << result.trials << ", seed = " << result.seed
      << (result.fast ? " (stage sampler)" : " (full deck)") << "\n";
  out << "rng: " << result.rng << "\n";
  out << "mean tau: " << decimal_string(result.mean, 12) << " +/- "
      << decimal_string(result.standard_error, 12) << "\n";
  if (!j["exact_decimal"].is_null()) {
    out << "exact E[tau]: ";
    if (!j["exact"].is_null()) out << j["exact"].get<std::string>() << " = ";
    out << decimal_string(expected_tau_extended(result.n), 12) << "\n";
    out << "upper bound: " << decimal_string(bounds(result.n).upper, 12) << "\n";
    if (const auto lower = bounds(result.n).conjectured_lower) {
      out << "conjectured lower bound: " << decimal_string(*lower, 12) << "\n";
    }
  }
  return out.str();
}

}  // namespace osc
