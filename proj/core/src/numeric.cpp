#include "shearer/numeric.hpp"

#include "shearer/errors.hpp"

#include <cctype>

namespace shearer {

BigInt int_pow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

IRoot int_root(const BigInt& x, unsigned e) {
  if (x < 0) throw PreconditionError("int_root: negative radicand");
  if (e == 0) throw PreconditionError("int_root: zeroth root");
  if (x == 0 || x == 1 || e == 1) return {x, true};
  // Newton iteration on y -> ((e-1)y + x / y^(e-1)) / e, floored.
  BigInt y = BigInt(1) << static_cast<unsigned>(msb(x) / e + 1);
  while (true) {
    BigInt yn = ((e - 1) * y + x / int_pow(y, e - 1)) / e;
    if (yn >= y) break;
    y = yn;
  }
  return {y, int_pow(y, e) == x};
}

bool rational_root(const Rational& x, unsigned e, Rational& out) {
  if (x < 0) return false;
  IRoot num = int_root(numerator(x), e);
  if (!num.exact) return false;
  IRoot den = int_root(denominator(x), e);
  if (!den.exact) return false;
  out = Rational(num.root, den.root);
  return true;
}

Rational rational_from_decimal(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  // Fraction form "a/b".
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw ParseError("malformed number '" + text + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else {
      throw ParseError("malformed number '" + text + "'");
    }
  }
  long exponent = 0;
  if (i < text.size()) {  // at 'e'
    exponent = std::stol(text.substr(i + 1));
  }
  if (!seen_digit) throw ParseError("malformed number '" + text + "'");
  Rational r(mantissa, 1);
  long shift = exponent - frac_digits;
  if (shift > 0) r *= Rational(int_pow(10, static_cast<unsigned>(shift)), 1);
  if (shift < 0) r /= Rational(int_pow(10, static_cast<unsigned>(-shift)), 1);
  return neg ? -r : r;
}

std::string rational_to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

}  // namespace shearer
