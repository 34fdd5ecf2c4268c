#pragma once

#include <cstdint>
#include <vector>

#include "chainent/errors.hpp"
#include "chainent/xy.hpp"

namespace chainent::spectra {

// Eigenvalues of a reduced density matrix, sorted descending.  `complete`
// distinguishes a full spectrum (sums to 1) from a top-k prefix.
struct ProbabilitySpectrum {
  std::vector<double> probabilities;
  bool complete = false;

  // Sorts descending and validates: every entry in [0, 1] (1e-12 slack,
  // clamped), complete spectra sum to 1 within 1e-10, prefixes sum to at most
  // 1 + 1e-10.  Violations throw correlation_invalid.
  static ProbabilitySpectrum make(std::vector<double> probabilities,
                                  bool complete);
};

// Outcome of a majorization comparison between two complete spectra.
struct MajorizationReport {
  bool holds = false;
  // Largest excess of a q partial sum over the matching p partial sum, >= 0.
  double max_violation = 0.0;
  // 0-based prefix length minus one where the excess peaks; -1 if no prefix
  // shows positive excess.
  std::int64_t worst_index = -1;
};

// Binary entropy -x log2 x - (1-x) log2 (1-x) in bits, with 0 log 0 := 0.
// Throws invalid_argument if x leaves [0, 1] by more than 1e-12.
double binary_entropy(double x);

// -sum p log2 p in bits.  Throws incomplete_spectrum on a prefix.
double shannon_entropy(const ProbabilitySpectrum& spectrum);

// All 2^L eigenvalues prod_m (1 +- nu_m)/2 of the block state, descending.
// Throws invalid_argument above the enumeration cap L = 24 (use
// reduced_spectrum_topk instead).
ProbabilitySpectrum reduced_spectrum_full(const xy::ModeOccupations& occupations);

// The k largest eigenvalues, via best-first search over mode-flip patterns
// ordered by the flip ratios (1-nu)/(1+nu).  Values match the corresponding
// prefix of reduced_spectrum_full bitwise; complete = (k >= 2^L).  Requires
// 1 <= k <= 2^24.
ProbabilitySpectrum reduced_spectrum_topk(const xy::ModeOccupations& occupations,
                                          std::int64_t k);

inline constexpr double kDefaultMajorizationTol = 1e-10;

// Tests whether p majorizes q: every partial sum of descending q must stay
// within `tol` of not exceeding the matching partial sum of p.  The shorter
// spectrum is implicitly zero-padded.  Both inputs must be complete.
MajorizationReport majorization_compare(const ProbabilitySpectrum& p,
                                        const ProbabilitySpectrum& q,
                                        double tol = kDefaultMajorizationTol);

// Number of eigenvalues >= epsilon.  Certain only for a complete spectrum or
// a prefix whose smallest retained entry is below epsilon; otherwise throws
// uncertain_rank.
std::int64_t effective_rank(const ProbabilitySpectrum& spectrum, double epsilon);

}  // namespace chainent::spectra
