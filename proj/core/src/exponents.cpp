#include "blowup/exponents.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blowup {

namespace {

void require_domain(double p, double N) {
  if (!(p > 1.0))
    throw std::domain_error("exponents: require p > 1");
  if (!(N >= 1.0))
    throw std::domain_error("exponents: require N >= 1");
}

} // namespace

double phi(double m) { return m * (m - 1.0) * (m - 2.0) * (m - 3.0); }

SssConstants sss_constants(double p, double N) {
  if (!(p > 1.0))
    throw std::domain_error("sss_constants: require p > 1");
  SssConstants out;
  const double mu = 4.0 / (p - 1.0);
  out.mu = mu;
  out.D = mu * (mu + 2.0) *
          ((mu + 1.0) * (mu + 3.0) + (N - 1.0) * (N - 5.0 - 2.0 * mu));
  out.sss_exists = out.D > 0.0;
  if (out.sss_exists)
    out.C_star = std::pow(out.D, 1.0 / (p - 1.0));
  return out;
}

HardyCheck hardy_check(double p, double N) {
  if (!(p > 1.0))
    throw std::domain_error("hardy_check: require p > 1");
  if (!(N > 4.0))
    throw std::domain_error("hardy_check: require N > 4");
  const double cH = std::pow(N * (N - 4.0), 2) / 16.0;
  const double D = sss_constants(p, N).D;
  HardyCheck out;
  out.G = cH - p * D;
  out.passes = out.G >= 0.0;
  return out;
}

ExponentReport critical_exponents(double p, double N) {
  require_domain(p, N);
  ExponentReport r;
  r.p = p;
  r.N = N;
  if (N > 4.0) {
    r.p_S = (N + 4.0) / (N - 4.0);
    r.p_star = N / (N - 4.0);
    r.c_H = std::pow(N * (N - 4.0), 2) / 16.0;
  }
  r.N_p = 4.0 * (p + 1.0) / (p - 1.0);
  const auto sss = sss_constants(p, N);
  r.mu = sss.mu;
  r.D = sss.D;
  r.C_star = sss.C_star;
  r.sss_exists = sss.sss_exists;
  if (r.c_H) {
    r.G = *r.c_H - p * r.D;
    r.hardy_passes = *r.G >= 0.0;
  }
  const double jl_den = N - 4.0 - 2.0 * std::sqrt(N - 1.0);
  if (jl_den > 0.0)
    r.p_JL = 1.0 + 4.0 / jl_den;
  if (N > 10.0)
    r.p_L = 1.0 + 6.0 / (N - 10.0);
  if (N > 11.0)
    r.p_M = 1.0 + 7.0 / (N - 11.0);
  return r;
}

RootSet blowup_char_roots(double p) {
  if (!(p > 1.0))
    throw std::domain_error("blowup_char_roots: require p > 1");
  const double K = p * phi(-4.0 / (p - 1.0));
  // Phi(m) - K = m^4 - 6 m^3 + 11 m^2 - 6 m - K
  const auto roots = quartic_roots(-6.0, 11.0, -6.0, -K);
  return classify_quartic(roots);
}

double hardy_char_poly(double c, double N, double g) {
  return -g * (g - 2.0) * (g + N - 2.0) * (g + N - 4.0) + c;
}

RootSet hardy_char_roots(double c, double N) {
  if (!(N > 4.0))
    throw std::domain_error("hardy_char_roots: require N > 4");
  if (!(c >= 0.0))
    throw std::domain_error("hardy_char_roots: require c >= 0");
  // -H_c(g) = g^4 + (2N-8) g^3 + (N^2-10N+20) g^2 - 2(N-2)(N-4) g - c
  const auto roots =
      quartic_roots(2.0 * N - 8.0, N * N - 10.0 * N + 20.0,
                    -2.0 * (N - 2.0) * (N - 4.0), -c);
  return classify_quartic(roots);
}

Type2Rates type2_rates(double p, double N, int beta_order,
                       std::optional<double> lambda_hat) {
  if (!(N > 4.0))
    throw std::domain_error("type2_rates: require N > 4");
  if (beta_order < 0)
    throw std::domain_error("type2_rates: require |beta| >= 0");
  Type2Rates out;
  out.alpha_beta = (2.0 * beta_order + N - 4.0) / 8.0;
  {
    std::ostringstream os;
    os << "phi(tau) = exp(" << out.alpha_beta << "*tau)";
    out.phi_rate = os.str();
    std::ostringstream os2;
    os2 << "c_beta(tau) = h_beta * tau * exp(-" << out.alpha_beta << "*tau)";
    out.c_beta_rate = os2.str();
  }
  if (lambda_hat) {
    const double pS = (N + 4.0) / (N - 4.0);
    if (!(p > pS))
      throw std::domain_error("type2_rates: rho_beta requires p > p_S");
    if (!(*lambda_hat < 0.0))
      throw std::domain_error("type2_rates: rho_beta requires lambda_hat < 0");
    out.rho_beta = 8.0 * std::abs(*lambda_hat) / ((N - 4.0) * (p - pS));
  }
  return out;
}

std::optional<double> sobolev_exponent_2m(double N, int m) {
  if (N <= 2.0 * m)
    return std::nullopt;
  return (N + 2.0 * m) / (N - 2.0 * m);
}

double ks_critical_exponent(double N, int l) {
  return 1.0 + 2.0 * (4.0 * l - 1.0) / N;
}

std::optional<double> sobolev_exponent_4_sigma(double N, double sigma) {
  if (N <= 2.0 * (sigma + 2.0))
    return std::nullopt;
  return ((sigma + 1.0) * N + 2.0 * (sigma + 2.0)) / (N - 2.0 * (sigma + 2.0));
}

} // namespace blowup
