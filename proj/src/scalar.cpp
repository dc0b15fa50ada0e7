#include "tenfold/scalar.hpp"

#include <cctype>
#include <ostream>

namespace tenfold {

std::string Rational::str() const {
  std::string s = numerator().str();
  BigInt den = denominator();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

namespace {

BigInt parseInteger(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  std::size_t start = 0;
  if (text[0] == '+' || text[0] == '-') start = 1;
  if (start == text.size())
    throw ParseError("sign without digits in rational '" + std::string(whole) + "'");
  for (std::size_t k = start; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("invalid character in rational '" + std::string(whole) + "'");
  BigInt magnitude{std::string(text.substr(start))};
  return text[0] == '-' ? BigInt(-magnitude) : magnitude;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text, text));
  BigInt num = parseInteger(text.substr(0, slash), text);
  BigInt den = parseInteger(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string GaussianRational::str() const {
  if (im_.isZero()) return re_.str();
  std::string s = re_.str();
  if (im_.sign() >= 0) s += '+';
  s += im_.str();
  s += 'i';
  return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace tenfold
