#include "persist/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "persist/errors.hpp"

namespace persist {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Domain: return "DomainError";
    case Errc::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::DivisionByZeroTheta: return "DivisionByZeroTheta";
    case Errc::Length: return "LengthError";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Unreachable: return "Unreachable";
    case Errc::Parse: return "ParseError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw Error(Errc::Parse, "cannot parse rational: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad(whole);
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) bad(text);
    Integer den(std::string(den_text), 10);
    if (den == 0) bad(text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ev = parse_integer(s.substr(e + 1), text);
    if (!ev.fits_slong_p() || abs(ev) > 100000) bad(text);
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad(text);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(text);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) bad(text);
    digits = std::string(s);
  }
  Rational q{Integer(digits, 10)};
  q *= pow(Rational(10), exponent);
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

Rational pow(const Rational& base, std::int64_t exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exp);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  // Powers of a reduced fraction stay reduced.
  Rational r;
  mpz_set(r.get_num_mpz_t(), num.get_mpz_t());
  mpz_set(r.get_den_mpz_t(), den.get_mpz_t());
  return r;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

}  // namespace persist
