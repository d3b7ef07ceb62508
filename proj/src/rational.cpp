#include "rankfn/rational.hpp"

#include "rankfn/errors.hpp"

#include <cctype>

namespace rankfn {

namespace {

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string quoted = "\"" + std::string(text) + "\"";
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) {
      throw InputError("malformed rational " + quoted);
    }
    return Rational(Integer(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw InputError("malformed rational " + quoted);
  }
  const Integer p(std::string{num});
  const Integer q(std::string{den});
  if (q <= 0) throw InputError("rational " + quoted + " needs a positive denominator");
  if (gcd(p, q) != 1) throw InputError("rational " + quoted + " is not in lowest terms");
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

}  // namespace rankfn
