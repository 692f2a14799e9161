#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace operforge {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p/q", "p", with optional sign. Throws ParseError on malformed
// text or a zero denominator; `where` is prepended to the message.
Rational parse_rational(const std::string& text, const std::string& where = {});

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Rational& a, const Vec& x);  // y += a*x
Vec scaled(const Vec& x, const Rational& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);

// Compute base^exp for integer exp (exp < 0 requires base != 0).
Rational rational_pow(const Rational& base, int exp);

}  // namespace operforge
