#include "flowcheck/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace flowcheck {

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// Lowest terms, positive denominator. The two-integer cpp_rational
// constructor does not canonicalize, so every entry point goes through here.
BigRat canonical(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return BigRat(num, den);
}

}  // namespace

ExtRational::ExtRational(long long num, long long den)
    : val_(canonical(BigInt(num), BigInt(den))) {}

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.inf_ = true;
  return r;
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_token(text))
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    return ExtRational(BigRat(BigInt(std::string(text))));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("rational literal has denominator zero");
  return ExtRational(canonical(BigInt(std::string(num)), d));
}

const BigRat& ExtRational::value() const {
  if (inf_) throw std::domain_error("infinite value has no rational part");
  return val_;
}

BigInt ExtRational::numerator() const { return boost::multiprecision::numerator(value()); }

BigInt ExtRational::denominator() const { return boost::multiprecision::denominator(value()); }

ExtRational ExtRational::reciprocal() const {
  if (inf_) return ExtRational(0);
  if (val_ == 0) return infinity();
  return ExtRational(canonical(boost::multiprecision::denominator(val_),
                               boost::multiprecision::numerator(val_)));
}

std::string ExtRational::str() const {
  if (inf_) return "inf";
  BigInt num = boost::multiprecision::numerator(val_);
  BigInt den = boost::multiprecision::denominator(val_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double ExtRational::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return val_.convert_to<double>();
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) return ExtRational::infinity();
  return ExtRational(a.val_ + b.val_);
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) {
  if (b.inf_) throw std::domain_error("cannot subtract infinity");
  if (a.inf_) return ExtRational::infinity();
  return ExtRational(a.val_ - b.val_);
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) {
    const ExtRational& fin = a.inf_ ? b : a;
    if (fin.inf_) return ExtRational::infinity();  // inf * inf
    if (fin.val_ <= 0) throw std::domain_error("cannot multiply infinity by a nonpositive value");
    return ExtRational::infinity();
  }
  return ExtRational(a.val_ * b.val_);
}

ExtRational operator/(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ && b.inf_) throw std::domain_error("cannot divide infinity by infinity");
  if (b.is_zero() && a.is_zero()) throw std::domain_error("cannot divide zero by zero");
  return a * b.reciprocal();
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.val_ == b.val_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  return a.val_ < b.val_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

BigInt ceil_rational(const ExtRational& x) {
  BigInt num = x.numerator();
  BigInt den = x.denominator();  // positive
  BigInt q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

BigInt floor_rational(const ExtRational& x) {
  BigInt num = x.numerator();
  BigInt den = x.denominator();
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

}  // namespace flowcheck
