#pragma once

#include "blowup/multipoly.hpp"

namespace blowup {

/// One eigenmode of the rescaled biharmonic Hermite operator
/// B* = -Lap^2 - (1/4) y.grad: eigenvalue -|beta|/4 with polynomial
/// eigenfunction psi_beta^*.
struct HermiteMode {
  MultiIndex beta;
  Rational lambda; // -|beta|/4 exactly
  Poly poly;       // psi_beta^*
};

/// lambda_beta = -|beta|/4.
Rational eigenvalue(const MultiIndex& beta);

/// psi_beta^* = (1/sqrt(beta!)) [ y^beta + sum_{j=1}^{[|beta|/4]}
///              (1/j!) Lap^{2j} y^beta ].
HermiteMode eigenfunction_polynomial(const MultiIndex& beta);

/// Moment of the biharmonic kernel with Fourier symbol exp(-|xi|^4):
/// M_alpha = i^{|alpha|} d^alpha exp(-|xi|^4)|_0. Zero unless every
/// component is even and |alpha| is a multiple of 4.
Rational kernel_moment(const MultiIndex& alpha);

/// <P, psi_beta> where psi_beta = ((-1)^{|beta|}/sqrt(beta!)) d^beta F is
/// the adjoint eigenfunction; evaluated exactly by parts through kernel
/// moments (no quadrature).
Surd pairing(const Poly& P, const MultiIndex& beta);

/// c0 = (p/2)(p-1)^{1/(p-1)} of the quadratic perturbation term.
double c0_coefficient(double p);

struct Gamma0 {
  Surd exact_part; // <(psi_beta^*)^2, psi_beta>
  double value;    // c0 * exact_part
};

/// Quadratic centre-manifold coefficient gamma_0 = c0 <(psi*)^2, psi>.
Gamma0 gamma0(const MultiIndex& beta, double p);

/// (B* - lambda_beta) psi_beta^*; the zero polynomial for a correct
/// construction.
Poly verify_eigen(const MultiIndex& beta);

} // namespace blowup
