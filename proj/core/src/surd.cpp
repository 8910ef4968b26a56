#include "blowup/surd.hpp"

#include <sstream>
#include <stdexcept>

namespace blowup {

std::pair<BigInt, long long> square_free_split(const BigInt& n) {
  if (n < 0)
    throw std::domain_error("square_free_split: negative radicand");
  BigInt s = 1, rem = n;
  for (BigInt d = 2; d * d <= rem; ++d) {
    while (rem % (d * d) == 0) {
      rem /= d * d;
      s *= d;
    }
  }
  return {s, rem.convert_to<long long>()};
}

void Surd::set(long long radicand, const Rational& c) {
  if (c == 0)
    terms_.erase(radicand);
  else
    terms_[radicand] = c;
}

Surd Surd::sqrt_of(const BigInt& n) {
  Surd out;
  if (n == 0)
    return out;
  auto [s, r] = square_free_split(n);
  out.set(r, Rational(s));
  return out;
}

Surd Surd::inv_sqrt_of(const BigInt& n) {
  if (n <= 0)
    throw std::domain_error("inv_sqrt_of: need n > 0");
  // 1/sqrt(n) = sqrt(n)/n
  auto [s, r] = square_free_split(n);
  Surd out;
  out.set(r, Rational(s, n));
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [r, c] : o.terms_) {
    auto it = terms_.find(r);
    if (it == terms_.end()) {
      terms_[r] = c;
    } else {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [r, c] : o.terms_) {
    auto it = terms_.find(r);
    if (it == terms_.end()) {
      terms_[r] = -c;
    } else {
      it->second -= c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

Surd Surd::operator*(const Surd& o) const {
  Surd out;
  for (const auto& [r1, c1] : terms_) {
    for (const auto& [r2, c2] : o.terms_) {
      const BigInt prod = BigInt(r1) * BigInt(r2);
      auto [s, r] = square_free_split(prod);
      auto it = out.terms_.find(r);
      const Rational add = c1 * c2 * Rational(s);
      if (it == out.terms_.end()) {
        if (add != 0)
          out.terms_[r] = add;
      } else {
        it->second += add;
        if (it->second == 0)
          out.terms_.erase(it);
      }
    }
  }
  return out;
}

Surd Surd::operator-() const {
  Surd out;
  for (const auto& [r, c] : terms_)
    out.terms_[r] = -c;
  return out;
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Surd::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

double Surd::to_double() const {
  double v = 0.0;
  for (const auto& [r, c] : terms_)
    v += c.convert_to<double>() * std::sqrt(static_cast<double>(r));
  return v;
}

std::string Surd::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    if (!first)
      os << (c >= 0 ? " + " : " - ");
    const Rational a = (!first && c < 0) ? Rational(-c) : c;
    if (first && c < 0 && r != 1 && a == -1) {
      // fallthrough: handled below by printing the rational as-is
    }
    if (r == 1) {
      os << a;
    } else {
      if (a == 1) {
        os << "sqrt(" << r << ")";
      } else if (a == -1 && first) {
        os << "-sqrt(" << r << ")";
      } else {
        os << a << "*sqrt(" << r << ")";
      }
    }
    first = false;
  }
  return os.str();
}

} // namespace blowup
