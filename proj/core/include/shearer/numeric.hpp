#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace shearer {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Backend { Float, Rational };

/// Per-vertex parameter / weight vector.
template <class T>
using Vec = std::vector<T>;

using VecD = Vec<double>;
using VecQ = Vec<Rational>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::Float;
  // Classification tolerance for "this value is a boundary zero".
  static double zero_tol() { return 1e-10; }
  static double from_fraction(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double to_double(double x) { return x; }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::Rational;
  static Rational zero_tol() { return Rational(0); }
  static Rational from_fraction(long long num, long long den) { return Rational(num, den); }
  static double to_double(const Rational& x) { return static_cast<double>(x); }
};

enum class Sign { Negative, Zero, Positive };

template <class T>
Sign classify(const T& x, const T& tol) {
  if (x < -tol) return Sign::Negative;
  if (x > tol) return Sign::Positive;
  return Sign::Zero;
}

BigInt int_pow(BigInt base, unsigned exp);

/// Floor of the e-th root; exact flag reports whether root^e == x.
struct IRoot {
  BigInt root;
  bool exact;
};
IRoot int_root(const BigInt& x, unsigned e);

/// e-th root of a rational when it is again rational.
/// Returns false if numerator or denominator is not a perfect e-th power.
bool rational_root(const Rational& x, unsigned e, Rational& out);

/// Parses a decimal string ("0.75", "-1e-3", "3/4") into an exact rational.
Rational rational_from_decimal(const std::string& text);

std::string rational_to_string(const Rational& x);

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return static_cast<double>(x); }

}  // namespace shearer
