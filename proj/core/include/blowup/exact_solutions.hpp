#pragma once

#include <functional>
#include <optional>
#include <string>

namespace blowup {

enum class SolutionKind { SSS, LN2, LN4, LN2m, HJouter };
enum class OperatorKind { BiharmonicSS, LaplaceLN, Polyharmonic, HamiltonJacobi };

struct SolutionParams {
  double N = 5.0;
  std::optional<double> p; // SSS, HJouter
  int m = 2;               // LN2m
  double d = 1.0;          // LN kinds: value at 0
  double gamma0 = -1.0;    // HJouter
  double chi = 1.0;        // HJouter angular constant
};

/// A closed-form stationary solution with an exact radial evaluator.
struct ClosedFormSolution {
  SolutionKind kind;
  SolutionParams params;
  double p_effective = 0.0;         // exponent the formula satisfies
  double domain_lo = 0.0;           // natural radial domain
  double domain_hi = 0.0;           // +inf encoded as infinity()
  std::function<double(double)> eval;
};

/// B with B^m = (N+2(m-1))(N+2(m-2)) ... (N-2m), the stride-2 product of
/// 2m factors; reduces to N(N-2) for m = 1 and N(N+2)(N-2)(N-4) for m = 2.
double ln_B_constant(double N, int m);

/// Construct the closed form; throws std::domain_error when the kind's
/// parameter constraints are violated.
ClosedFormSolution make_solution(SolutionKind kind, const SolutionParams& prm);

struct ResidualReport {
  double max_residual = 0.0; // relative, scaled by |W|^p
  double grid_lo = 0.0;
  double grid_hi = 0.0;
  int grid_n = 0;
};

/// Max relative residual of the solution under the operator on [a, b]
/// (n points). Differentiation is exact for every kind here; the
/// finite-difference route lives in the tests as an independent check.
ResidualReport residual(const ClosedFormSolution& sol, OperatorKind op,
                        double a, double b, int n);

/// U(r) = C_* r^{-mu}; throws std::domain_error when D <= 0 or r <= 0.
double sss_eval(double p, double N, double r);

std::string to_string(SolutionKind k);
std::string to_string(OperatorKind k);

} // namespace blowup
