#include "blowup/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blowup {

int MultiIndex::order() const {
  return std::accumulate(comps.begin(), comps.end(), 0);
}

BigInt MultiIndex::factorial() const {
  BigInt f = 1;
  for (int c : comps)
    for (int k = 2; k <= c; ++k)
      f *= k;
  return f;
}

bool GradedLex::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  const int oa = std::accumulate(a.begin(), a.end(), 0);
  const int ob = std::accumulate(b.begin(), b.end(), 0);
  if (oa != ob)
    return oa < ob;
  return a < b;
}

std::vector<MultiIndex> enumerate_multiindices(int dim, int max_order) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(dim, 0);
  // depth-first enumeration, then stable graded-lex sort
  std::function<void(int, int)> rec = [&](int axis, int left) {
    if (axis == dim - 1) {
      for (int v = 0; v <= left; ++v) {
        cur[axis] = v;
        out.emplace_back(cur);
      }
      cur[axis] = 0;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[axis] = v;
      rec(axis + 1, left - v);
    }
    cur[axis] = 0;
  };
  if (dim > 0)
    rec(0, max_order);
  std::sort(out.begin(), out.end(),
            [](const MultiIndex& a, const MultiIndex& b) {
              return GradedLex{}(a.comps, b.comps);
            });
  return out;
}

Poly Poly::monomial(const MultiIndex& e, const Surd& c) {
  Poly p(e.dim());
  p.add_term(e.comps, c);
  return p;
}

Poly Poly::constant(int dim, const Surd& c) {
  Poly p(dim);
  p.add_term(std::vector<int>(dim, 0), c);
  return p;
}

void Poly::add_term(const std::vector<int>& e, const Surd& c) {
  if (c.is_zero())
    return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out(*this);
  for (const auto& [e, c] : o.terms_)
    out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out(*this);
  for (const auto& [e, c] : o.terms_)
    out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(dim_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

Poly Poly::scaled(const Surd& c) const {
  Poly out(dim_);
  for (const auto& [e, k] : terms_)
    out.add_term(e, k * c);
  return out;
}

Poly Poly::derivative(int axis) const {
  Poly out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0)
      continue;
    std::vector<int> d = e;
    d[axis] -= 1;
    out.add_term(d, c * Surd(e[axis]));
  }
  return out;
}

Poly Poly::derivative(const MultiIndex& a) const {
  Poly out(*this);
  for (int axis = 0; axis < a.dim(); ++axis)
    for (int k = 0; k < a.comps[axis]; ++k)
      out = out.derivative(axis);
  return out;
}

Poly Poly::laplacian() const {
  Poly out(dim_);
  for (int axis = 0; axis < dim_; ++axis)
    out = out + derivative(axis).derivative(axis);
  return out;
}

Poly Poly::laplacian_power(int k) const {
  Poly out(*this);
  for (int i = 0; i < k; ++i)
    out = out.laplacian();
  return out;
}

Poly Poly::y_dot_grad() const {
  Poly out(dim_);
  for (int axis = 0; axis < dim_; ++axis) {
    for (const auto& [e, c] : derivative(axis).terms()) {
      std::vector<int> up = e;
      up[axis] += 1;
      out.add_term(up, c);
    }
  }
  return out;
}

double Poly::eval(const std::vector<double>& y) const {
  if (static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("Poly::eval: dimension mismatch");
  double v = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c.to_double();
    for (int axis = 0; axis < dim_; ++axis)
      m *= std::pow(y[axis], e[axis]);
    v += m;
  }
  return v;
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first)
      os << " + ";
    os << "(" << c.to_string() << ")";
    for (std::size_t axis = 0; axis < e.size(); ++axis) {
      if (e[axis] > 0) {
        os << "*y" << axis;
        if (e[axis] > 1)
          os << "^" << e[axis];
      }
    }
    first = false;
  }
  return os.str();
}

} // namespace blowup
