#pragma once

#include "blowup/surd.hpp"

#include <map>
#include <vector>

namespace blowup {

/// Multi-index in dimension n (non-negative integer exponents).
struct MultiIndex {
  std::vector<int> comps;

  explicit MultiIndex(std::vector<int> c = {}) : comps(std::move(c)) {}
  int order() const;
  int dim() const { return static_cast<int>(comps.size()); }
  BigInt factorial() const; // prod comps[i]!

  bool operator==(const MultiIndex& o) const { return comps == o.comps; }
  bool operator!=(const MultiIndex& o) const { return !(*this == o); }
};

/// Graded lexicographic order (total order used for stable enumeration
/// and JSON output).
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// All multi-indices of dimension dim with order <= max_order, graded-lex.
std::vector<MultiIndex> enumerate_multiindices(int dim, int max_order);

/// Multivariate polynomial with exact Surd coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(int dim) : dim_(dim) {}

  static Poly monomial(const MultiIndex& e, const Surd& c);
  static Poly constant(int dim, const Surd& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Surd& c) const;

  Poly derivative(int axis) const;            // d/dy_axis
  Poly derivative(const MultiIndex& a) const; // mixed partial
  Poly laplacian() const;
  Poly laplacian_power(int k) const;          // Lap applied k times
  Poly y_dot_grad() const;                    // sum_i y_i d/dy_i

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  const std::map<std::vector<int>, Surd, GradedLex>& terms() const {
    return terms_;
  }
  void add_term(const std::vector<int>& e, const Surd& c);

  double eval(const std::vector<double>& y) const;
  std::string to_string() const; // monomials in graded-lex order

private:
  int dim_ = 0;
  std::map<std::vector<int>, Surd, GradedLex> terms_;
};

} // namespace blowup
