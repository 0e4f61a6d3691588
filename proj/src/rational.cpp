#include "fairdiv/rational.hpp"

#include "fairdiv/error.hpp"

namespace fairdiv {

BigInt floor_rational(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt quot = n / d;
  if (n % d != 0 && n < 0) --quot;
  return quot;
}

namespace {

BigInt parse_big_int(const std::string& text) {
  if (text.empty()) fail(ErrorKind::parse, "empty number");
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) fail(ErrorKind::parse, "bad number '" + text + "'");
  for (size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      fail(ErrorKind::parse, "bad number '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_big_int(text));
  BigInt num = parse_big_int(text.substr(0, slash));
  BigInt den = parse_big_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::parse, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace fairdiv
