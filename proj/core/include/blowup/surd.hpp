#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace blowup {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact element of the ring Q[sqrt(r1), sqrt(r2), ...]:
///   q + sum_r c_r sqrt(r),  radicands r kept square-free.
/// Closed under +, -, *; equality is decidable (map comparison after
/// dropping zero coefficients). The rational part is the r = 1 slot.
class Surd {
public:
  Surd() = default;
  Surd(long long v) { set(1, Rational(v)); }
  explicit Surd(const Rational& q) { set(1, q); }

  static Surd sqrt_of(const BigInt& n);         // sqrt(n), n >= 0
  static Surd inv_sqrt_of(const BigInt& n);     // 1/sqrt(n), n > 0

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd operator+(const Surd& o) const { Surd t(*this); return t += o; }
  Surd operator-(const Surd& o) const { Surd t(*this); return t -= o; }
  Surd operator*(const Surd& o) const;
  Surd operator-() const;
  Surd& operator*=(const Surd& o) { *this = *this * o; return *this; }

  bool operator==(const Surd& o) const { return terms_ == o.terms_; }
  bool operator!=(const Surd& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;

  double to_double() const;
  std::string to_string() const; // e.g. "-136*sqrt(6)", "1/2 + 3*sqrt(70)"

  const std::map<long long, Rational>& terms() const { return terms_; }

private:
  void set(long long radicand, const Rational& c);
  // square-free radicand -> rational coefficient; zero coeffs erased
  std::map<long long, Rational> terms_;
};

inline Surd operator*(const Rational& q, const Surd& s) { return Surd(q) * s; }

/// n = square * radicand with radicand square-free; returns (sqrt(square),
/// radicand).
std::pair<BigInt, long long> square_free_split(const BigInt& n);

} // namespace blowup
