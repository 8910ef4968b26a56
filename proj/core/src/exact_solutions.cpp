#include "blowup/exact_solutions.hpp"

#include "blowup/exponents.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace blowup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double signed_pow(double w, double p) {
  return std::pow(std::abs(w), p - 1.0) * w;
}

// Exact radial calculus on sums of c * r^j * (B + s r^2)^{-q}. The family
// is closed under d/dr, so Laplacians of the L-N forms stay exact.
struct RadTerm {
  double c;
  int j;
  double q;
};

using RadExpr = std::vector<RadTerm>;

RadExpr deriv(const RadExpr& e, double s) {
  RadExpr out;
  out.reserve(2 * e.size());
  for (const auto& t : e) {
    if (t.j != 0)
      out.push_back({t.c * t.j, t.j - 1, t.q});
    out.push_back({-2.0 * s * t.q * t.c, t.j + 1, t.q + 1.0});
  }
  return out;
}

RadExpr laplacian(const RadExpr& e, double s, double N) {
  const RadExpr d1 = deriv(e, s);
  RadExpr out = deriv(d1, s);
  for (const auto& t : d1)
    out.push_back({t.c * (N - 1.0), t.j - 1, t.q});
  return out;
}

double eval_expr(const RadExpr& e, double B, double s, double r) {
  double v = 0.0;
  for (const auto& t : e)
    v += t.c * std::pow(r, t.j) * std::pow(B + s * r * r, -t.q);
  return v;
}

} // namespace

double ln_B_constant(double N, int m) {
  if (m < 1)
    throw std::domain_error("ln_B_constant: require m >= 1");
  if (!(N > 2.0 * m))
    throw std::domain_error("ln_B_constant: require N > 2m");
  double prod = 1.0;
  for (int k = 0; k < 2 * m; ++k)
    prod *= N + 2.0 * (m - 1) - 2.0 * k;
  return std::pow(prod, 1.0 / m);
}

ClosedFormSolution make_solution(SolutionKind kind,
                                 const SolutionParams& prm) {
  ClosedFormSolution sol;
  sol.kind = kind;
  sol.params = prm;
  const double N = prm.N;

  switch (kind) {
  case SolutionKind::SSS: {
    if (!prm.p)
      throw std::domain_error("SSS: p required");
    const double p = *prm.p;
    const auto sss = sss_constants(p, N);
    if (!sss.sss_exists)
      throw std::domain_error("SSS: D <= 0, no singular solution at (p, N)");
    const double C = *sss.C_star, mu = sss.mu;
    sol.p_effective = p;
    sol.domain_lo = 0.0; // open at 0
    sol.domain_hi = kInf;
    sol.eval = [C, mu](double r) {
      if (!(r > 0.0))
        throw std::domain_error("SSS: radius must be positive");
      return C * std::pow(r, -mu);
    };
    break;
  }
  case SolutionKind::LN2:
  case SolutionKind::LN4:
  case SolutionKind::LN2m: {
    const int m = kind == SolutionKind::LN2   ? 1
                  : kind == SolutionKind::LN4 ? 2
                                              : prm.m;
    if (!(prm.d > 0.0))
      throw std::domain_error("LN: require d > 0");
    const double B = ln_B_constant(N, m); // throws if N <= 2m
    const double alpha = (N - 2.0 * m) / 2.0;
    const double s = std::pow(prm.d, 4.0 / (N - 2.0 * m));
    const double d = prm.d;
    sol.p_effective = (N + 2.0 * m) / (N - 2.0 * m);
    sol.domain_lo = 0.0;
    sol.domain_hi = kInf;
    sol.eval = [d, B, s, alpha](double r) {
      return d * std::pow(B / (B + s * r * r), alpha);
    };
    break;
  }
  case SolutionKind::HJouter: {
    if (!prm.p)
      throw std::domain_error("HJouter: p required");
    const double p = *prm.p;
    if (!(p > 1.0))
      throw std::domain_error("HJouter: require p > 1");
    if (prm.gamma0 == 0.0)
      throw std::domain_error("HJouter: gamma0 must be nonzero");
    const double fstar = std::pow(p - 1.0, -1.0 / (p - 1.0));
    const double cstar = std::pow(p - 1.0, p / (p - 1.0)) / prm.gamma0;
    const double k = cstar * prm.chi;
    sol.p_effective = p;
    sol.domain_lo = 0.0;
    sol.domain_hi = k < 0.0 ? std::pow(-1.0 / k, 0.25) : kInf;
    sol.eval = [fstar, k, p](double r) {
      const double u = 1.0 + k * r * r * r * r;
      if (!(u > 0.0))
        throw std::domain_error("HJouter: outside natural domain");
      return fstar * std::pow(u, -1.0 / (p - 1.0));
    };
    break;
  }
  }
  return sol;
}

ResidualReport residual(const ClosedFormSolution& sol, OperatorKind op,
                        double a, double b, int n) {
  if (!(n >= 2) || !(b > a))
    throw std::domain_error("residual: bad grid");
  const double N = sol.params.N;
  ResidualReport rep;
  rep.grid_lo = a;
  rep.grid_hi = b;
  rep.grid_n = n;

  const auto grid_point = [&](int i) {
    return a + (b - a) * static_cast<double>(i) / (n - 1);
  };

  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = grid_point(i);
    double res = 0.0, w = 0.0;
    switch (sol.kind) {
    case SolutionKind::SSS: {
      const double p = sol.p_effective;
      const double mu = 4.0 / (p - 1.0);
      const double C = sol.eval(1.0); // C_* since r = 1
      // Lap(r^a) = a (a+N-2) r^{a-2} applied twice
      const double a1 = -mu;
      const double l1 = a1 * (a1 + N - 2.0);
      const double a2 = a1 - 2.0;
      const double l2 = a2 * (a2 + N - 2.0);
      const double lap2 = C * l1 * l2 * std::pow(r, a1 - 4.0);
      w = sol.eval(r);
      if (op != OperatorKind::BiharmonicSS)
        throw std::domain_error("residual: SSS pairs with biharmonic_ss");
      res = -lap2 + signed_pow(w, p);
      break;
    }
    case SolutionKind::LN2:
    case SolutionKind::LN4:
    case SolutionKind::LN2m: {
      const int m = sol.kind == SolutionKind::LN2   ? 1
                    : sol.kind == SolutionKind::LN4 ? 2
                                                    : sol.params.m;
      const double B = ln_B_constant(N, m);
      const double alpha = (N - 2.0 * m) / 2.0;
      const double s = std::pow(sol.params.d, 4.0 / (N - 2.0 * m));
      const double scale = sol.params.d * std::pow(B, alpha);
      RadExpr e{{scale, 0, alpha}};
      int mm = m;
      if (op == OperatorKind::LaplaceLN) {
        if (m != 1)
          throw std::domain_error("residual: laplace_LN pairs with LN2");
        mm = 1;
      } else if (op == OperatorKind::BiharmonicSS) {
        if (m != 2)
          throw std::domain_error("residual: biharmonic pairs with LN4");
        mm = 2;
      } else if (op != OperatorKind::Polyharmonic) {
        throw std::domain_error("residual: operator/solution mismatch");
      }
      for (int k = 0; k < mm; ++k)
        e = laplacian(e, s, N);
      const double lapm = eval_expr(e, B, s, r);
      w = sol.eval(r);
      // -(-Lap)^m W + |W|^{p-1} W; sign of the m-fold Laplacian term
      const double sign = (mm % 2 == 0) ? -1.0 : 1.0;
      res = sign * lapm + signed_pow(w, sol.p_effective);
      break;
    }
    case SolutionKind::HJouter: {
      if (op != OperatorKind::HamiltonJacobi)
        throw std::domain_error("residual: HJouter pairs with HJ");
      const double p = sol.p_effective;
      const double fstar = std::pow(p - 1.0, -1.0 / (p - 1.0));
      const double cstar =
          std::pow(p - 1.0, p / (p - 1.0)) / sol.params.gamma0;
      const double k = cstar * sol.params.chi;
      const double u = 1.0 + k * r * r * r * r;
      if (!(u > 0.0))
        continue; // outside natural domain
      w = sol.eval(r);
      const double fprime = fstar * (-1.0 / (p - 1.0)) *
                            std::pow(u, -1.0 / (p - 1.0) - 1.0) * 4.0 * k *
                            r * r * r;
      res = -0.25 * r * fprime - w / (p - 1.0) + signed_pow(w, p);
      break;
    }
    }
    const double denom = std::max(std::pow(std::abs(w), sol.p_effective),
                                  1e-300);
    worst = std::max(worst, std::abs(res) / denom);
  }
  rep.max_residual = worst;
  return rep;
}

double sss_eval(double p, double N, double r) {
  const auto sss = sss_constants(p, N);
  if (!sss.sss_exists)
    throw std::domain_error("sss_eval: D <= 0");
  if (!(r > 0.0))
    throw std::domain_error("sss_eval: require r > 0");
  return *sss.C_star * std::pow(r, -sss.mu);
}

std::string to_string(SolutionKind k) {
  switch (k) {
  case SolutionKind::SSS: return "sss";
  case SolutionKind::LN2: return "ln2";
  case SolutionKind::LN4: return "ln4";
  case SolutionKind::LN2m: return "ln2m";
  case SolutionKind::HJouter: return "hj";
  }
  return "?";
}

std::string to_string(OperatorKind k) {
  switch (k) {
  case OperatorKind::BiharmonicSS: return "biharmonic_ss";
  case OperatorKind::LaplaceLN: return "laplace_LN";
  case OperatorKind::Polyharmonic: return "polyharmonic";
  case OperatorKind::HamiltonJacobi: return "HJ";
  }
  return "?";
}

} // namespace blowup
