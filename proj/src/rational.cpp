#include "tropsym/rational.hpp"

#include <cctype>

#include "tropsym/error.hpp"

namespace tropsym {

std::string toString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool isInteger(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class toInteger(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parseRational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!isInteger(num)) {
    throw Error(ErrorCode::kInvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(toInteger(num));
  std::string_view den = text.substr(slash + 1);
  if (!isInteger(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::kInvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = toInteger(den);
  if (d == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(toInteger(num), d);
  r.canonicalize();
  return r;
}

}  // namespace tropsym
