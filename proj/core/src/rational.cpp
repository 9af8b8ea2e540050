#include "geopack/rational.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace geopack {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view e = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!e.empty() && (e[0] == '+' || e[0] == '-')) {
      eneg = e[0] == '-';
      e.remove_prefix(1);
    }
    if (!all_digits(e) || e.size() > 6) throw std::invalid_argument("bad exponent");
    long long v = 0;
    std::from_chars(e.data(), e.data() + e.size(), v);
    exp10 = eneg ? -v : v;
  }
  std::string digits;
  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(s)) throw std::invalid_argument("bad number");
    digits = std::string(s);
  } else {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("bad number");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("bad number");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long long>(fp.size());
  }
  // a leading zero would select octal in the BigInt string constructor
  auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  Rational v{BigInt(digits)};
  BigInt ten(10);
  if (exp10 > 0) v *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(exp10)));
  if (exp10 < 0) v /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-exp10)));
  return negative ? Rational(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  std::string_view p = text.substr(0, slash), q = text.substr(slash + 1);
  Rational num = parse_decimal(p);
  Rational den = parse_decimal(q);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return num / den;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rational r;
  mpq_set_d(r.backend().data(), x);
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational from_decimal_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return parse_decimal(std::string_view(buf, static_cast<size_t>(res.ptr - buf)));
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1, b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

long long floor_ll(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f.convert_to<long long>();
}

long long ceil_ll(const Rational& q) {
  long long f = floor_ll(q);
  return Rational(f) == q ? f : f + 1;
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace geopack
