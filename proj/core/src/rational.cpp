#include "osc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace osc {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  const std::string_view text = trim(raw);
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text, true)) {
    throw std::invalid_argument("malformed rational: '" + std::string(raw) + "'");
  }
  BigInt num = parse_integer(num_text);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, true)) {
      throw std::invalid_argument("malformed rational: '" + std::string(raw) + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(raw) + "'");
    }
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string display_string(const Rational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace osc
