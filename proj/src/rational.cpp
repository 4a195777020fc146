#include "psa/rational.hpp"

#include <cctype>
#include <limits>

#include "psa/errors.hpp"

namespace psa {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw DomainError("invalid rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0)
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Rational power(const Rational& base, std::int64_t exponent) {
  if (exponent < 0 && base == 0)
    throw DomainError("zero raised to a negative power");
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1 / base) : base;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1 : static_cast<std::uint64_t>(exponent);
  while (e) {
    if (e & 1)
      result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p())
    throw DomainError("integer " + z.get_str() + " does not fit in a machine word");
  return z.get_si();
}

} // namespace psa
