#include "operforge/rational.hpp"

#include <cctype>

#include "operforge/errors.hpp"

namespace operforge {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool parse_integer_text(const std::string& s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits = s[0] == '+' ? s.substr(1) : s;
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(const std::string& text, const std::string& where) {
  auto slash = text.find('/');
  mpz_class num, den = 1;
  if (slash == std::string::npos) {
    if (!parse_integer_text(text, num))
      throw ParseError(where, "malformed rational \"" + text + "\"");
  } else {
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!parse_integer_text(a, num) || !parse_integer_text(b, den))
      throw ParseError(where, "malformed rational \"" + text + "\"");
    if (den == 0) throw ParseError(where, "zero denominator in \"" + text + "\"");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
  if (a == 0) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
  return y;
}

Vec scaled(const Vec& x, const Rational& a) {
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = a * x[i];
  return y;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

Vec operator-(const Vec& a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
  return c;
}

Rational rational_pow(const Rational& base, int exp) {
  Rational result = 1, b = base;
  if (exp < 0) {
    b = 1 / base;
    exp = -exp;
  }
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

}  // namespace operforge
