#pragma once

#include <Eigen/Core>
#include <vector>

#include "chainent/errors.hpp"
#include "chainent/profile.hpp"

namespace chainent::xy {

// Anisotropic XY chain in a transverse field, in the thermodynamic limit:
//
//   H = -sum_l ( (a/2) [ (1+gamma) sx_l sx_{l+1} + (1-gamma) sy_l sy_{l+1} ]
//                + sz_l )
//
// parameterized by the inverse coupling h = 1/a >= 0 (h = 0 encodes the
// zero-field limit a -> infinity) and the anisotropy gamma in [0, 1].
// gamma = 1 is the transverse-field Ising chain; gamma = 0 the XX chain.
struct XYModel {
  double h = 0.0;
  double gamma = 0.0;

  // Throws invalid_argument unless h >= 0 and gamma in [0, 1], both finite.
  XYModel(double h, double gamma);

  // Coupling a = 1/h; +infinity when h = 0.
  double coupling() const;

  // True on the critical locus: the transition line h = 1 for gamma > 0 and
  // the gapless segment 0 <= h <= 1 at gamma = 0.  Exact comparisons:
  // criticality is a measure-zero property of the parameters.
  bool is_critical() const;
};

// Fourier coefficients g_l of the ground-state Majorana correlation symbol,
//
//   g_l = (1/2pi) Integral_0^2pi e^{-il phi}
//             (cos phi - h - i gamma sin phi) / |cos phi - h - i gamma sin phi|
//
// held for every lag |l| <= max_lag.  |g_l| <= 1 always.
class CouplingSequence {
 public:
  // `values` holds g_{-max_lag}..g_{+max_lag} in lag order.
  CouplingSequence(int max_lag, std::vector<double> values,
                   double achieved_tolerance);

  int max_lag() const { return max_lag_; }

  // Conservative bound on the absolute error of any stored coefficient;
  // exactly 0 for analytically evaluated families.
  double achieved_tolerance() const { return achieved_tolerance_; }

  // g at a signed lag; throws dimension_mismatch outside [-max_lag, max_lag].
  double g(int lag) const;

 private:
  int max_lag_;
  std::vector<double> values_;
  double achieved_tolerance_;
};

// Antisymmetric 2L x 2L correlation matrix of the 2L Majorana operators of a
// contiguous block of L sites: <c_m c_n> = delta_mn + i B_mn.  Entries are
// exactly antisymmetric by construction.
struct BlockCorrelationMatrix {
  int block_size = 0;
  Eigen::MatrixXd entries;
};

// Canonical mode occupations nu_m of a block correlation matrix, sorted
// descending in [0, 1].  Each mode is an independent fermionic degree of
// freedom occupied with probability (1 + nu_m)/2: nu = 1 is a pure mode,
// nu = 0 a maximally mixed one.
class ModeOccupations {
 public:
  // Sorts descending and clamps round-off excursions into [0, 1]; values
  // beyond the bounds by more than 1e-8 throw correlation_invalid.
  static ModeOccupations from_values(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int count() const { return static_cast<int>(values_.size()); }

 private:
  ModeOccupations() = default;
  std::vector<double> values_;
};

inline constexpr double kDefaultQuadratureTol = 1e-10;

// Coefficients g_l for |l| <= max_lag.  Uses closed forms where they exist
// (gamma = 0; the critical Ising point h = 1, gamma = 1) and adaptive
// quadrature elsewhere.  Throws tolerance_not_met if the quadrature cannot
// reach `tol` within its evaluation budget.
CouplingSequence coupling_coefficients(const XYModel& model, int max_lag,
                                       double tol = kDefaultQuadratureTol);

// Same coefficients forced through the adaptive quadrature even where a
// closed form exists.  Exposed so the closed forms and the integrator can be
// validated against each other.
CouplingSequence coupling_coefficients_quadrature(
    const XYModel& model, int max_lag, double tol = kDefaultQuadratureTol);

// B_L: the leading 2L x 2L block built from lags |l| <= L-1.
BlockCorrelationMatrix block_correlation(const CouplingSequence& couplings,
                                         int block_size);

// Mode occupations of B_L: the L nonnegative members of its paired singular
// values.
ModeOccupations mode_occupations(const BlockCorrelationMatrix& correlation);

// Block entropy in bits: sum over modes of the binary entropy of (1+nu)/2.
double block_entropy(const ModeOccupations& occupations);

// S_L for L = 1..max_block.
EntropyProfile entropy_profile(const XYModel& model, int max_block,
                               double tol = kDefaultQuadratureTol);

// Saturation entropy of a half-infinite-chain cut of the Ising chain
// (gamma = 1) near the critical coupling, doubled for a two-boundary block:
// (1/6) log2(1/|1 - a|) bits with a = 1/h.  Keeps only the term that diverges
// as a -> 1 and drops O(1) constants, so away from the immediate vicinity of
// a = 1 it underestimates the exact saturation entropy.  Throws
// critical_divergence at h = 1 and invalid_argument unless gamma = 1, h > 0.
double half_chain_entropy(const XYModel& model);

}  // namespace chainent::xy
