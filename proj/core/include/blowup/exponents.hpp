#pragma once

#include "blowup/quartic.hpp"

#include <optional>
#include <string>

namespace blowup {

/// Closed-form critical exponents and admissibility constants of the
/// fourth-order equation u_t = -Lap^2 u + |u|^{p-1} u at a point (p, N).
/// N is treated as a continuous parameter. Quantities whose defining
/// formula degenerates (non-positive denominator) are absent, never NaN.
struct ExponentReport {
  double p = 0.0;
  double N = 0.0;
  std::optional<double> p_S;     // (N+4)/(N-4), N > 4
  std::optional<double> p_star;  // N/(N-4),   N > 4
  double N_p = 0.0;              // 4(p+1)/(p-1), inverse of p_S
  double mu = 0.0;               // 4/(p-1)
  double D = 0.0;                // SSS amplitude constant
  std::optional<double> C_star;  // D^{1/(p-1)}, only when D > 0
  std::optional<double> c_H;     // [N(N-4)]^2/16, N > 4
  std::optional<double> G;       // c_H - p D
  std::optional<bool> hardy_passes;
  bool sss_exists = false;       // D > 0

  // second-order reference family (evaluated, not extended to order 4)
  std::optional<double> p_JL;    // 1 + 4/(N-4-2 sqrt(N-1)), N > 10
  std::optional<double> p_L;     // 1 + 6/(N-10),  N > 10
  std::optional<double> p_M;     // 1 + 7/(N-11),  N > 11
};

struct SssConstants {
  double mu = 0.0;
  double D = 0.0;
  std::optional<double> C_star;
  bool sss_exists = false;
};

struct HardyCheck {
  double G = 0.0;
  bool passes = false;
};

struct Type2Rates {
  double alpha_beta = 0.0;                // (2|beta|+N-4)/8
  std::optional<double> rho_beta;         // 8|lhat|/((N-4)(p-p_S)), p > p_S
  std::string phi_rate;                   // resonance pair, symbolic
  std::string c_beta_rate;
};

/// Everything defined at (p, N). Throws std::domain_error for p <= 1 or
/// N < 1.
ExponentReport critical_exponents(double p, double N);

/// mu, D, C_star and the existence flag of the singular stationary
/// solution U = C_* |y|^{-mu}. Throws std::domain_error for p <= 1.
SssConstants sss_constants(double p, double N);

/// Hardy margin G = c_H - p D and its sign test. Requires N > 4.
HardyCheck hardy_check(double p, double N);

/// Phi(m) = m(m-1)(m-2)(m-3).
double phi(double m);

/// Roots m of Phi(m) = p Phi(-4/(p-1)): one real m+ > 3, one real
/// m- < -4/(p-1), and a complex pair with real part 3/2.
RootSet blowup_char_roots(double p);

/// Roots gamma of H_c(gamma) = -gamma(gamma-2)(gamma+N-2)(gamma+N-4)+c = 0.
/// Requires N > 4 and c >= 0.
RootSet hardy_char_roots(double c, double N);

/// Evaluate H_c at gamma (for residual checks).
double hardy_char_poly(double c, double N, double gamma);

/// Type II rate exponents; rho needs p > p_S and lambda_hat < 0 and
/// throws std::domain_error when p <= p_S.
Type2Rates type2_rates(double p, double N, int beta_order,
                       std::optional<double> lambda_hat = std::nullopt);

// generalized closed forms from the same family
std::optional<double> sobolev_exponent_2m(double N, int m); // (N+2m)/(N-2m)
double ks_critical_exponent(double N, int l);               // 1+2(4l-1)/N
std::optional<double> sobolev_exponent_4_sigma(double N, double sigma);

} // namespace blowup
