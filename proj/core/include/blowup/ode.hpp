#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace blowup {

enum class ProblemKind { SimilarityProfile, EntireStationary };

/// Radial ODE selector. SimilarityProfile is the rescaled blow-up
/// profile equation; EntireStationary is the radial form of
/// -Lap^2 W + |W|^{p-1} W = 0. N is a continuous parameter; N = 1 has no
/// singular terms and may be integrated through y = 0.
struct OdeProblem {
  ProblemKind kind = ProblemKind::SimilarityProfile;
  double p = 2.0;
  double N = 1.0;
};

struct StateVector {
  double y = 0.0;
  double f = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
};

struct ExtremumRecord {
  double y = 0.0;
  double f = 0.0;
};

enum class OutcomeTag {
  BlowUpPlus,
  BlowUpMinus,
  OscillatoryGrowth,
  AdmissibleDecay,
  Unresolved
};

struct OrbitOutcome {
  OutcomeTag tag = OutcomeTag::Unresolved;
  double blowup_y = std::numeric_limits<double>::quiet_NaN();
  std::vector<ExtremumRecord> extrema;
  std::string note;
};

struct IntegrateOptions {
  double tol = 1e-10;        // abs and rel tolerance of the embedded pair
  double f_max = 1e8;        // blow-up event threshold
  double max_step = 0.0;     // 0 -> |span|/50
  bool detect_oscillation = true;
  double osc_growth = 1.05;  // amplitude growth factor per extremum
  int osc_min_extrema = 3;
  int sample_count = 0;      // uniform dense samples (0 = none)
};

struct Trajectory {
  OdeProblem problem;
  std::vector<StateVector> nodes;   // accepted integration steps
  std::vector<StateVector> samples; // uniform grid via dense output
  std::vector<ExtremumRecord> extrema;
  double residual_max = 0.0;        // relative interpolant defect
  bool event_blowup = false;
  int blowup_sign = 0;
  double event_y = std::numeric_limits<double>::quiet_NaN();
  bool event_oscillation = false;
  bool step_underflow = false;
  bool completed = false;           // reached requested end without event
  StateVector terminal;
  std::string note;
};

/// RHS value f'''' for the problem at state s.
double rhs_f4(const OdeProblem& problem, const StateVector& s);

/// Reaction term |f|^{p-1} f.
inline double reaction(double f, double p) {
  return std::pow(std::abs(f), p - 1.0) * f;
}

/// a0 = 3 * 2^{-8/3} of the exponential bundle term.
double bundle_a0();

/// Exponent of the algebraic bundle term, mu = 4/(p-1).
double bundle_mu(double p);

/// Exponent sigma = (2/3)(N - 2/(p-1)) of the exponential term prefactor.
double bundle_sigma(double p, double N);

/// Value of the unit exponential bundle term y^{-sigma} exp(-a0 y^{4/3}).
double bundle_exp_term(double y, double p, double N);

/// State at y_max of the two-term far-field bundle
///   f = C1 y^{-mu} + C2 y^{-sigma} exp(-a0 y^{4/3}),
/// derivatives by exact differentiation. Throws std::domain_error when the
/// exponential term underflows while C2 != 0, or y_max <= 0.
StateVector farfield_init(double C1, double C2, double y_max,
                          const OdeProblem& problem);

/// Default shooting radius, max(8, 12 (2/(p-1))^{1/4}).
double default_y_max(double p);

/// Even Taylor start at y_start in (0, 0.1]:
///   f = d + (b/2) y^2 + c4 y^4 + c6 y^6
/// with c4, c6 matched to the problem's ODE.
StateVector origin_series(double d, double b, const OdeProblem& problem,
                          double y_start);

/// Series coefficients (c4, c6) used by origin_series.
std::pair<double, double> origin_series_coeffs(double d, double b,
                                               const OdeProblem& problem);

/// Adaptive dopri5 integration with dense output from `from` to y_end
/// (direction inferred). Terminates early on the blow-up event
/// |f| >= f_max or on sustained oscillatory growth.
Trajectory integrate(const OdeProblem& problem, const StateVector& from,
                     double y_end, const IntegrateOptions& opts = {});

/// Tag a finished trajectory.
OrbitOutcome classify_orbit(const Trajectory& traj,
                            const IntegrateOptions& opts = {});

} // namespace blowup
