#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace flowcheck {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational number extended with a single point +infinity.
//
// Finite values are kept in lowest terms with a positive denominator.
// Infinity participates in exactly the operations needed for Lebesgue
// exponent arithmetic: reciprocal(inf) = 0, reciprocal(0) = inf, inf
// dominates addition, and inf compares above every finite value.
// Operations whose result would be ambiguous (inf - inf, inf * 0,
// inf / inf) throw std::domain_error instead of guessing.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(long long n) : val_(n) {}  // NOLINT: implicit by design
  ExtRational(long long num, long long den);
  explicit ExtRational(BigRat v) : val_(std::move(v)) {}

  static ExtRational infinity();

  // Accepts "a", "-a", "a/b" with arbitrary-precision integers, or "inf".
  static ExtRational parse(std::string_view text);

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && val_ == 0; }

  const BigRat& value() const;  // throws std::domain_error on infinity
  BigInt numerator() const;
  BigInt denominator() const;

  ExtRational reciprocal() const;
  std::string str() const;
  double to_double() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator/(const ExtRational& a, const ExtRational& b);

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b);
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r);

 private:
  BigRat val_{0};
  bool inf_ = false;
};

// Least integer >= x for finite x.
BigInt ceil_rational(const ExtRational& x);

// Greatest integer <= x for finite x.
BigInt floor_rational(const ExtRational& x);

}  // namespace flowcheck
