#pragma once

#include <cmath>

namespace emgsnn {

// Discrete-time neuron dynamics. Time constants are in units of the
// simulation step (delta t = 5 ms at 200 Hz); decay per step is exp(-1/tau).
// All step functions apply input after decay and test the threshold before
// updating adaptation, so independent implementations can agree bit-for-bit.

struct LifParams {
  double tau_m = 20.0;
  double v_th = 1.0;
  int refractory_steps = 0;

  double alpha() const { return std::exp(-1.0 / tau_m); }
};

struct LifState {
  double v = 0.0;
  int refrac_left = 0;
};

// v' = alpha*v + input; spike iff v' > v_th outside refractory; reset to 0.
inline int lif_step(LifState& s, double input_current, const LifParams& p) {
  double v = p.alpha() * s.v + input_current;
  int spike = 0;
  if (s.refrac_left > 0) {
    s.refrac_left--;
  } else if (v > p.v_th) {
    spike = 1;
    v = 0.0;
    s.refrac_left = p.refractory_steps;
  }
  s.v = v;
  return spike;
}

// Double-exponential adaptive threshold: A = b0 + beta1*b1 + beta2*b2 with a
// fast (tau_a1) and a slow (tau_a2) adaptation variable, each bumped by
// (1 - rho_i) on every output spike so b_i stays inside [0, 1).
struct DexatParams {
  double tau_m = 20.0;
  double tau_a1 = 21.0;
  double tau_a2 = 400.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  double b0 = 1.0;
  int refractory_steps = 0;

  double alpha() const { return std::exp(-1.0 / tau_m); }
  double rho1() const { return std::exp(-1.0 / tau_a1); }
  double rho2() const { return std::exp(-1.0 / tau_a2); }
};

struct DexatState {
  double v = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  int refrac_left = 0;
};

inline double dexat_threshold(const DexatState& s, const DexatParams& p) {
  return (p.b0 + p.beta1 * s.b1) + p.beta2 * s.b2;
}

inline int dexat_step(DexatState& s, double input_current, const DexatParams& p) {
  double v = p.alpha() * s.v + input_current;
  const double threshold = dexat_threshold(s, p);
  int spike = 0;
  if (s.refrac_left > 0) {
    s.refrac_left--;
  } else if (v > threshold) {
    spike = 1;
    v = 0.0;
    s.refrac_left = p.refractory_steps;
  }
  s.v = v;
  s.b1 = p.rho1() * s.b1 + (1.0 - p.rho1()) * spike;
  s.b2 = p.rho2() * s.b2 + (1.0 - p.rho2()) * spike;
  return spike;
}

// Non-spiking leaky integrator used for the three class scores.
struct ReadoutParams {
  double tau_out = 20.0;

  double kappa() const { return std::exp(-1.0 / tau_out); }
};

// y' = kappa*y + input + bias*(1 - kappa): a constant input c converges to
// c/(1-kappa) + bias.
inline double readout_step(double y, double input_current, double bias,
                           const ReadoutParams& p) {
  const double k = p.kappa();
  return k * y + input_current + bias * (1.0 - k);
}

}  // namespace emgsnn
