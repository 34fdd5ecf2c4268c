#pragma once

#include "chainent/errors.hpp"
#include "chainent/profile.hpp"
#include "chainent/xy.hpp"

namespace chainent::scaling {

// Closed block-size window [l_min, l_max] selecting profile points.
struct FitWindow {
  int l_min = 0;
  int l_max = 0;
};

// Least-squares line through (log2 L, S_L).  At a conformal critical point
// the slope is (c + cbar)/6, so central_charge_sum estimates the sum of the
// holomorphic and antiholomorphic central charges.
struct ScalingFit {
  double slope = 0.0;               // bits per log2 L
  double intercept = 0.0;           // bits, extrapolated to L = 1
  double central_charge_sum = 0.0;  // exactly 6 * slope
  double rms_residual = 0.0;
  FitWindow window;
  int points_used = 0;
};

// Saturation summary of a profile: converged when the last two increments
// stay below eps_increment in magnitude; s_max is the final entropy;
// entanglement_length the smallest block size within delta of it.
struct SaturationEstimate {
  double s_max = 0.0;
  int entanglement_length = 0;
  bool converged = false;
};

// Ordinary least squares of S against log2 L over the window.  Requires at
// least three points inside the window.
ScalingFit fit_central_charge(const EntropyProfile& profile, FitWindow window);

SaturationEstimate saturation_analysis(const EntropyProfile& profile,
                                       double eps_increment = 1e-4,
                                       double delta = 0.01);

// Entropy offset of the critical chain at anisotropy gamma relative to
// gamma = 1, evaluated at block size max_block:
//   S(h=1, gamma=1; max_block) - S(h=1, gamma; max_block).
// Both profiles share the same slope, so the difference converges as
// max_block grows; the expected limit is -(1/6) log2 gamma bits.  Requires
// 0 < gamma <= 1 and max_block >= 50 (gamma = 0 changes universality class
// and is refused).
double gamma_subleading(double gamma, int max_block,
                        double tol = xy::kDefaultQuadratureTol);

// Mean over L in [l_min, l_max-1] of the per-step increment ratio
// (S_a(L+1) - S_a(L)) / (S_b(L+1) - S_b(L)).  Both profiles must contain
// every integer block size in the window; vanishing denominator increments
// throw numerical_singularity.
double increment_ratio(const EntropyProfile& a, const EntropyProfile& b,
                       FitWindow window);

}  // namespace chainent::scaling
