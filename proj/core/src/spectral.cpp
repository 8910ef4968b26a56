#include "blowup/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace blowup {

namespace {

BigInt factorial_of(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

} // namespace

Rational eigenvalue(const MultiIndex& beta) {
  return Rational(-beta.order(), 4);
}

HermiteMode eigenfunction_polynomial(const MultiIndex& beta) {
  HermiteMode mode;
  mode.beta = beta;
  mode.lambda = eigenvalue(beta);

  const int dim = beta.dim();
  Poly core = Poly::monomial(beta, Surd(1));
  Poly sum = core;
  const int jmax = beta.order() / 4;
  Rational inv_jfact(1);
  for (int j = 1; j <= jmax; ++j) {
    inv_jfact /= j;
    sum = sum + core.laplacian_power(2 * j).scaled(Surd(inv_jfact));
  }
  mode.poly = sum.scaled(Surd::inv_sqrt_of(beta.factorial()));
  return mode;
}

Rational kernel_moment(const MultiIndex& alpha) {
  int total = 0;
  for (int a : alpha.comps) {
    if (a % 2 != 0)
      return Rational(0);
    total += a;
  }
  if (total % 4 != 0)
    return Rational(0);
  const int k = total / 4;
  // coefficient of xi^alpha in (-1)^k |xi|^{4k}/k! equals
  // (-1)^k (2k)!/(k! prod (alpha_i/2)!), times alpha! from differentiation
  BigInt num = factorial_of(2 * k) * alpha.factorial();
  BigInt den = factorial_of(k);
  for (int a : alpha.comps)
    den *= factorial_of(a / 2);
  Rational m(num, den);
  if (k % 2 != 0)
    m = -m;
  return m;
}

Surd pairing(const Poly& P, const MultiIndex& beta) {
  if (P.dim() != beta.dim())
    throw std::invalid_argument("pairing: dimension mismatch");
  const Poly Q = P.derivative(beta);
  Surd acc;
  for (const auto& [e, c] : Q.terms()) {
    const Rational m = kernel_moment(MultiIndex(e));
    if (m != 0)
      acc += c * Surd(m);
  }
  return acc * Surd::inv_sqrt_of(beta.factorial());
}

double c0_coefficient(double p) {
  if (!(p > 1.0))
    throw std::domain_error("c0_coefficient: require p > 1");
  return 0.5 * p * std::pow(p - 1.0, 1.0 / (p - 1.0));
}

Gamma0 gamma0(const MultiIndex& beta, double p) {
  const HermiteMode mode = eigenfunction_polynomial(beta);
  Gamma0 out;
  out.exact_part = pairing(mode.poly * mode.poly, beta);
  out.value = c0_coefficient(p) * out.exact_part.to_double();
  return out;
}

Poly verify_eigen(const MultiIndex& beta) {
  const HermiteMode mode = eigenfunction_polynomial(beta);
  const Poly& psi = mode.poly;
  const Poly Bstar =
      psi.laplacian_power(2).scaled(Surd(-1)) +
      psi.y_dot_grad().scaled(Surd(Rational(-1, 4)));
  return Bstar - psi.scaled(Surd(mode.lambda));
}

} // namespace blowup
