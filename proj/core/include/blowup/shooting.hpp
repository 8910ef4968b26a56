#pragma once

#include "blowup/ode.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blowup {

enum class ProfileKind { f0, f1, entireW };

struct ProfileSolution {
  double p = 0.0, N = 1.0;
  ProfileKind kind = ProfileKind::f0;
  double C1 = 0.0, C2 = 0.0; // tail coefficients (similarity kinds)
  double d = 0.0, b = 0.0;   // origin data (entireW)
  std::vector<double> grid;  // increasing radii
  std::vector<double> values;
  double f_at_0 = 0.0;
  double residual_max = 0.0; // relative ODE defect along the orbit
  int sign_changes = 0;
  double sym_res_f1 = 0.0;   // symmetry residuals at the origin
  double sym_res_f3 = 0.0;
  double y_max = 0.0;
  double y_start = 0.0;
  std::string c2_convention =
      "C2 > 0 means the exponential tail term approaches from above";
};

struct TailFit {
  double C1 = 0.0, C2 = 0.0;
  double y_lo = 0.0, y_hi = 0.0;
  double fit_residual = 0.0; // max abs misfit on the window
};

struct FinalTimeProfile {
  enum class Type { PowerLaw, DiracMeasure } type = Type::PowerLaw;
  double C1 = 0.0;       // PowerLaw
  double exponent = 0.0; // 4/(p-1)
  double C3 = 0.0;       // DiracMeasure mass integral
};

struct InitBox {
  // raw C1 interval; when both are 0 the solver scans tail amplitudes
  // A1 = C1 y_max^{-mu} over the default box instead
  double c1_lo = 0.0, c1_hi = 0.0;
  int seeds = 40;
  std::optional<std::pair<double, double>> warm; // (C1, C2)
};

struct ShootOptions {
  double tol = 1e-10;
  double shoot_tol = 1e-6;
  double measure_tol = 1e-5;
  double y_max = 0.0; // 0 -> default_y_max(p)
  double y_start = 1e-3;
  int samples = 2001;
  double f_max = 1e8;
};

struct BracketC2 {
  double c2_minus = 0.0; // orbit classified BlowUpMinus
  double c2_plus = 0.0;  // orbit classified BlowUpPlus
};

struct BracketNotFound : std::runtime_error {
  explicit BracketNotFound(const std::string& what, std::string log = {})
      : std::runtime_error(what), scan_log(std::move(log)) {}
  std::string scan_log;
};

struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShootingStalled : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowTooNarrow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One inward shot; light (no dense samples) unless requested.
struct Shot {
  bool reached = false; // reached the origin-side end
  int blow_sign = 0;
  double r1 = 0.0; // symmetry residual of f'
  double r3 = 0.0; // symmetry residual of f'''
  double f_at_0 = 0.0;
  double d_hat = 0.0, b_hat = 0.0;
  Trajectory traj;
};

Shot shoot_inward(double C1, double C2, const OdeProblem& problem,
                  const ShootOptions& opts, int samples = 0);

/// Continuous inner objective: r3 when the orbit reaches the origin,
/// -+BIG on blow-up (the sign continuous with the adjacent r3 branch).
double inner_objective(const Shot& s);

/// C2 values whose inward orbits blow up to -inf / +inf around the
/// separatrix band at this C1. Throws BracketNotFound.
BracketC2 bracket_c2(double C1, const OdeProblem& problem,
                     const ShootOptions& opts = {});

/// Full 2D-2D shooting: inner loop zeroes f''' over C2, outer zeroes f'
/// over C1. Throws NoSignChange / BracketNotFound / ShootingStalled.
ProfileSolution solve_profile(const OdeProblem& problem, const InitBox& box,
                              ProfileKind kind_hint,
                              const ShootOptions& opts = {});

/// All distinct profiles found by the cold scan (used to separate f0/f1).
std::vector<ProfileSolution> enumerate_profiles(const OdeProblem& problem,
                                                const InitBox& box,
                                                const ShootOptions& opts = {});

/// Weighted linear least squares of the two-term tail model on
/// [y_lo, y_hi] (defaults to the outer quarter of the grid).
TailFit tail_fit(const ProfileSolution& prof,
                 std::optional<std::pair<double, double>> window = {});

/// PowerLaw when |C1| is resolvable, else the Dirac measure with
/// C3 = int |f|^{N(p-1)/4} (solid-angle factor included, exponential tail
/// appended analytically).
FinalTimeProfile final_time_profile(const ProfileSolution& prof,
                                    const TailFit& fit,
                                    const ShootOptions& opts = {});

/// f'-mismatch of the C1 = 0 (pure exponential tail) constrained shot;
/// vanishes exactly at the measure root p_delta(N).
double c1zero_mismatch(const OdeProblem& problem, const ShootOptions& opts,
                       std::optional<double> warm_c2 = {});

/// Sensitivity dr1/dC1 of the outer objective near C1 = 0 (sign carrier
/// for certifying the C1 sign pattern of the measure root).
double outer_slope_at_c1zero(const OdeProblem& problem,
                             const ShootOptions& opts);

struct EntireDiagnostics {
  bool positive = false;
  int intersections_with_U = -1; // -1 when the SSS does not exist
  double ratio_sup = 0.0;
  double ratio_end = 0.0;
  double ratio_bound = 0.0; // ((p+1)/2)^{1/(p-1)}
  double xi_valid = 0.0;    // radius up to which the orbit is trusted
};

struct EntireResult {
  ProfileSolution profile;
  EntireDiagnostics diag;
};

/// Outward shooting for the entire stationary solution W of
/// -Lap^2 W + |W|^{p-1} W = 0, W(0) = d: single free parameter b = W''(0)
/// bisected on the blow-up classification.
EntireResult solve_entire_W(double p, double N, double d,
                            const ShootOptions& opts = {});

} // namespace blowup
