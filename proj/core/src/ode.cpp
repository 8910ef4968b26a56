#include "blowup/ode.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace blowup {

namespace {

using State = std::array<double, 4>;

struct RadialRhs {
  OdeProblem problem;

  void operator()(const State& x, State& dxdt, double y) const {
    const double f = x[0], f1 = x[1], f2 = x[2], f3 = x[3];
    const double p = problem.p, N = problem.N;
    double f4 = reaction(f, p);
    if (problem.kind == ProblemKind::SimilarityProfile)
      f4 += -0.25 * y * f1 - f / (p - 1.0);
    if (N != 1.0) {
      const double a = N - 1.0, b = (N - 1.0) * (N - 3.0);
      f4 += -2.0 * a / y * f3 - b / (y * y) * f2 + b / (y * y * y) * f1;
    }
    dxdt[0] = f1;
    dxdt[1] = f2;
    dxdt[2] = f3;
    dxdt[3] = f4;
  }
};

StateVector to_state(double y, const State& x) {
  return StateVector{y, x[0], x[1], x[2], x[3]};
}

bool finite(const State& x) {
  for (double v : x)
    if (!std::isfinite(v))
      return false;
  return true;
}

} // namespace

double rhs_f4(const OdeProblem& problem, const StateVector& s) {
  State x{s.f, s.f1, s.f2, s.f3}, d{};
  RadialRhs{problem}(x, d, s.y);
  return d[3];
}

double bundle_a0() { return 3.0 * std::pow(2.0, -8.0 / 3.0); }

double bundle_mu(double p) { return 4.0 / (p - 1.0); }

double bundle_sigma(double p, double N) {
  return (2.0 / 3.0) * (N - 2.0 / (p - 1.0));
}

double bundle_exp_term(double y, double p, double N) {
  return std::pow(y, -bundle_sigma(p, N)) *
         std::exp(-bundle_a0() * std::pow(y, 4.0 / 3.0));
}

StateVector farfield_init(double C1, double C2, double y_max,
                          const OdeProblem& problem) {
  if (problem.kind != ProblemKind::SimilarityProfile)
    throw std::domain_error("farfield_init: similarity problems only");
  if (!(y_max > 0.0))
    throw std::domain_error("farfield_init: require y_max > 0");
  const double p = problem.p, N = problem.N;
  const double mu = bundle_mu(p);
  const double sig = bundle_sigma(p, N);
  const double a0 = bundle_a0();

  StateVector s;
  s.y = y_max;

  // algebraic term C1 y^{-mu}
  const double t0 = C1 * std::pow(y_max, -mu);
  s.f = t0;
  s.f1 = t0 * (-mu) / y_max;
  s.f2 = t0 * mu * (mu + 1.0) / (y_max * y_max);
  s.f3 = t0 * (-mu) * (mu + 1.0) * (mu + 2.0) / (y_max * y_max * y_max);

  // exponential term C2 y^{-sigma} exp(-a0 y^{4/3}) via log-derivatives
  if (C2 != 0.0) {
    if (!(std::abs(bundle_exp_term(y_max, p, N)) > 1e-290))
      throw std::domain_error(
          "farfield_init: exponential bundle term underflows at y_max");
    const double h = C2 * bundle_exp_term(y_max, p, N);
    const double y = y_max;
    const double L1 = -sig / y - (4.0 / 3.0) * a0 * std::pow(y, 1.0 / 3.0);
    const double L2 =
        sig / (y * y) - (4.0 / 9.0) * a0 * std::pow(y, -2.0 / 3.0);
    const double L3 =
        -2.0 * sig / (y * y * y) + (8.0 / 27.0) * a0 * std::pow(y, -5.0 / 3.0);
    s.f += h;
    s.f1 += h * L1;
    s.f2 += h * (L1 * L1 + L2);
    s.f3 += h * (L1 * L1 * L1 + 3.0 * L1 * L2 + L3);
  }
  return s;
}

double default_y_max(double p) {
  return std::max(8.0, 12.0 * std::pow(2.0 / (p - 1.0), 0.25));
}

std::pair<double, double> origin_series_coeffs(double d, double b,
                                               const OdeProblem& problem) {
  const double p = problem.p, N = problem.N;
  const double a1 = 0.5 * b;
  const double g = reaction(d, p);
  const double gp = p * std::pow(std::abs(d), p - 1.0);
  double c4 = 0.0, c6 = 0.0;
  if (problem.kind == ProblemKind::SimilarityProfile) {
    c4 = (g - d / (p - 1.0)) / (8.0 * N * (N + 2.0));
    c6 = a1 * (gp - 0.5 - 1.0 / (p - 1.0)) / (24.0 * (N + 2.0) * (N + 4.0));
  } else {
    c4 = g / (8.0 * N * (N + 2.0));
    c6 = a1 * gp / (24.0 * (N + 2.0) * (N + 4.0));
  }
  return {c4, c6};
}

StateVector origin_series(double d, double b, const OdeProblem& problem,
                          double y_start) {
  if (!(y_start > 0.0 && y_start <= 0.1))
    throw std::domain_error("origin_series: require y_start in (0, 0.1]");
  const auto [c4, c6] = origin_series_coeffs(d, b, problem);
  const double a1 = 0.5 * b;
  const double y = y_start, y2 = y * y, y3 = y2 * y, y4 = y2 * y2,
               y5 = y4 * y, y6 = y4 * y2;
  StateVector s;
  s.y = y;
  s.f = d + a1 * y2 + c4 * y4 + c6 * y6;
  s.f1 = 2.0 * a1 * y + 4.0 * c4 * y3 + 6.0 * c6 * y5;
  s.f2 = 2.0 * a1 + 12.0 * c4 * y2 + 30.0 * c6 * y4;
  s.f3 = 24.0 * c4 * y + 120.0 * c6 * y3;
  return s;
}

Trajectory integrate(const OdeProblem& problem, const StateVector& from,
                     double y_end, const IntegrateOptions& opts) {
  namespace ode = boost::numeric::odeint;
  if (!(opts.tol >= 1e-13 && opts.tol <= 1e-6))
    throw std::domain_error("integrate: tol must lie in [1e-13, 1e-6]");

  Trajectory traj;
  traj.problem = problem;

  const double y0 = from.y;
  const double span = y_end - y0;
  if (span == 0.0)
    throw std::domain_error("integrate: empty interval");
  const double dir = span > 0.0 ? 1.0 : -1.0;
  const double max_step =
      opts.max_step > 0.0 ? opts.max_step : std::abs(span) / 50.0;

  RadialRhs sys{problem};
  State x{from.f, from.f1, from.f2, from.f3};
  traj.nodes.push_back(to_state(y0, x));

  if (std::abs(x[0]) >= opts.f_max) {
    traj.event_blowup = true;
    traj.blowup_sign = x[0] > 0.0 ? +1 : -1;
    traj.event_y = y0;
    traj.terminal = traj.nodes.back();
    return traj;
  }

  // uniform sample lattice over the requested range
  std::vector<double> lattice;
  std::size_t cursor = 0;
  if (opts.sample_count > 1) {
    lattice.resize(opts.sample_count);
    for (int i = 0; i < opts.sample_count; ++i)
      lattice[i] = y0 + span * static_cast<double>(i) /
                            static_cast<double>(opts.sample_count - 1);
    traj.samples.push_back(to_state(y0, x));
    cursor = 1;
  }

  auto stepper = ode::make_dense_output(opts.tol, opts.tol, max_step,
                                        ode::runge_kutta_dopri5<State>());
  stepper.initialize(x, y0, dir * std::min(max_step, 0.1 * std::abs(span)));

  const auto interp = [&](double y) {
    State xi;
    stepper.calc_state(y, xi);
    return xi;
  };

  // locate the first y in (ya, yb] where pred flips to true
  const auto refine = [&](double ya, double yb, auto pred) {
    for (int i = 0; i < 60; ++i) {
      const double ym = 0.5 * (ya + yb);
      if (pred(interp(ym)))
        yb = ym;
      else
        ya = ym;
      if (std::abs(yb - ya) < 1e-13 * (1.0 + std::abs(ya)))
        break;
    }
    return yb;
  };

  double prev_f1 = from.f1;
  double prev_y = y0;
  bool done = false;
  long guard = 5000000;

  while (!done && guard-- > 0) {
    if (dir * (stepper.current_time() - y_end) >= 0.0)
      break;

    double t_old, t_new;
    try {
      auto r = stepper.do_step(sys);
      t_old = r.first;
      t_new = r.second;
    } catch (const std::exception& e) {
      traj.step_underflow = true;
      traj.note = e.what();
      break;
    }
    if (!finite(stepper.current_state())) {
      traj.step_underflow = true;
      traj.note = "non-finite state";
      break;
    }
    if (std::abs(t_new - t_old) < 1e-15 * (1.0 + std::abs(t_old))) {
      traj.step_underflow = true;
      traj.note = "step-size underflow";
      break;
    }

    // interpolant defect at mid-step, scaled by the local state magnitude
    {
      const double ym = 0.5 * (t_old + t_new);
      const double h = 1e-6 * (t_new - t_old);
      const State xm = interp(ym);
      const State xp = interp(ym + h);
      const State xq = interp(ym - h);
      State dxdt;
      sys(xm, dxdt, ym);
      double scale = 1.0;
      for (double v : xm)
        scale = std::max(scale, std::abs(v));
      scale = std::max(scale, std::abs(dxdt[3]));
      double defect = 0.0;
      for (int c = 0; c < 4; ++c)
        defect = std::max(defect,
                          std::abs((xp[c] - xq[c]) / (2.0 * h) - dxdt[c]));
      traj.residual_max = std::max(traj.residual_max, defect / scale);
    }

    // clamp at the requested end
    double y_rec = t_new;
    State x_rec = stepper.current_state();
    bool reached_end = false;
    if (dir * (t_new - y_end) >= 0.0) {
      y_rec = y_end;
      x_rec = interp(y_end);
      reached_end = true;
    }

    double y_stop = y_rec; // where this step's record effectively ends

    // blow-up event
    if (std::abs(x_rec[0]) >= opts.f_max) {
      const double fm = opts.f_max;
      const double yev = refine(t_old, y_rec, [&](const State& s) {
        return std::abs(s[0]) >= fm;
      });
      const State xev = interp(yev);
      traj.event_blowup = true;
      traj.blowup_sign = xev[0] > 0.0 ? +1 : -1;
      traj.event_y = yev;
      y_stop = yev;
      x_rec = xev;
      reached_end = false;
      done = true;
    }

    // extrema (f' sign change) and the oscillatory-growth event
    if (!traj.event_blowup) {
      const double f1_new = x_rec[1];
      if (prev_f1 != 0.0 && f1_new != 0.0 && ((prev_f1 > 0) != (f1_new > 0))) {
        const bool to_neg = f1_new < 0.0;
        const double yex = refine(prev_y, y_rec, [&](const State& s) {
          return to_neg ? (s[1] < 0.0) : (s[1] > 0.0);
        });
        const State xex = interp(yex);
        traj.extrema.push_back({yex, xex[0]});

        if (opts.detect_oscillation &&
            static_cast<int>(traj.extrema.size()) >= opts.osc_min_extrema) {
          const auto& ex = traj.extrema;
          const std::size_t n = ex.size();
          bool growth = true;
          for (int k = 0; k < opts.osc_min_extrema - 1 && growth; ++k) {
            const auto& a = ex[n - 2 - k];
            const auto& b = ex[n - 1 - k];
            if (!(a.f * b.f < 0.0) ||
                !(std::abs(b.f) >= opts.osc_growth * std::abs(a.f)))
              growth = false;
          }
          if (growth) {
            traj.event_oscillation = true;
            traj.event_y = yex;
            y_stop = yex;
            x_rec = xex;
            reached_end = false;
            done = true;
          }
        }
      }
      prev_f1 = x_rec[1];
    }

    // emit lattice samples covered by this step
    while (cursor < lattice.size() &&
           dir * (lattice[cursor] - y_stop) <= 0.0) {
      traj.samples.push_back(to_state(lattice[cursor], interp(lattice[cursor])));
      ++cursor;
    }

    traj.nodes.push_back(to_state(y_stop, x_rec));
    prev_y = y_stop;
    if (reached_end) {
      traj.completed = true;
      done = true;
    }
  }

  if (guard <= 0 && !done) {
    traj.step_underflow = true;
    traj.note = "iteration guard exceeded";
  }
  traj.terminal = traj.nodes.back();
  return traj;
}

OrbitOutcome classify_orbit(const Trajectory& traj,
                            const IntegrateOptions& opts) {
  OrbitOutcome out;
  out.extrema = traj.extrema;
  if (traj.event_blowup) {
    out.tag = traj.blowup_sign > 0 ? OutcomeTag::BlowUpPlus
                                   : OutcomeTag::BlowUpMinus;
    out.blowup_y = traj.event_y;
    return out;
  }
  if (traj.event_oscillation) {
    out.tag = OutcomeTag::OscillatoryGrowth;
    return out;
  }
  if (traj.step_underflow || !traj.completed) {
    out.tag = OutcomeTag::Unresolved;
    out.note = traj.note.empty() ? "incomplete integration" : traj.note;
    return out;
  }
  double sup = 0.0;
  for (const auto& n : traj.nodes)
    sup = std::max({sup, std::abs(n.f), std::abs(n.f1), std::abs(n.f2),
                    std::abs(n.f3)});
  const auto& t = traj.terminal;
  const double tail = std::max(
      {std::abs(t.f), std::abs(t.f1), std::abs(t.f2), std::abs(t.f3)});
  if (tail <= std::max(1e-8, 1e-4 * sup))
    out.tag = OutcomeTag::AdmissibleDecay;
  else {
    out.tag = OutcomeTag::Unresolved;
    out.note = "completed without decay";
  }
  (void)opts;
  return out;
}

} // namespace blowup
