#include "ambicard/rational.hpp"

#include "ambicard/errors.hpp"

namespace ambicard {

std::string to_string(const Rational& r) {
  std::string out = numer(r).str();
  if (denom(r) != 1) out += "/" + denom(r).str();
  return out;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string_view digits = part;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw InputError("malformed rational '" + std::string(text) + "'");
    if (part.front() == '+') part.remove_prefix(1);
    return Integer(std::string(part));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational pow(const Rational& r, int e) {
  if (e < 0) {
    if (r == 0) throw NotInvertibleError("zero raised to a negative power");
    return pow(Rational(1) / r, -e);
  }
  Rational result(1), base = r;
  for (unsigned k = static_cast<unsigned>(e); k; k >>= 1) {
    if (k & 1) result *= base;
    base *= base;
  }
  return result;
}

}  // namespace ambicard
