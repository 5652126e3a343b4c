#include "bitile/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "bitile/error.hpp"

namespace bitile {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::int64_t num = std::stoll(text.substr(0, slash));
      std::int64_t den = std::stoll(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(whole);
    std::int64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(frac[i])))
        throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
      den *= 10;
    }
    std::int64_t num = std::stoll(frac);
    bool neg = !text.empty() && text[0] == '-';
    Rational magnitude = Rational(std::llabs(whole)) + Rational(num, den);
    return neg ? -magnitude : magnitude;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  }
}

std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

}  // namespace bitile
