#include "chainent/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

#include "kahan.hpp"

namespace chainent::spectra {

namespace {

constexpr int kEnumerationCap = 24;  // 2^24 doubles = 128 MiB of spectrum

double checked_unit_interval(double x, double slack, const char* what) {
  if (!std::isfinite(x) || x < -slack || x > 1.0 + slack) {
    throw Error(ErrorKind::invalid_argument,
                std::string(what) + " must lie in [0, 1]");
  }
  return std::clamp(x, 0.0, 1.0);
}

}  // namespace

ProbabilitySpectrum ProbabilitySpectrum::make(std::vector<double> probabilities,
                                              bool complete) {
  for (double& p : probabilities) {
    if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12) {
      throw Error(ErrorKind::correlation_invalid,
                  "spectrum entries must lie in [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
  }
  std::sort(probabilities.begin(), probabilities.end(), std::greater<>());

  detail::KahanSum total;
  for (double p : probabilities) total.add(p);
  if (complete) {
    if (std::abs(total.value() - 1.0) > 1e-10) {
      throw Error(ErrorKind::correlation_invalid,
                  "complete spectrum must sum to 1");
    }
  } else if (total.value() > 1.0 + 1e-10) {
    throw Error(ErrorKind::correlation_invalid,
                "spectrum prefix must sum to at most 1");
  }
  return ProbabilitySpectrum{std::move(probabilities), complete};
}

double binary_entropy(double x) {
  x = checked_unit_interval(x, 1e-12, "binary entropy argument");
  double bits = 0.0;
  if (x > 0.0) bits -= x * std::log2(x);
  if (x < 1.0) bits -= (1.0 - x) * std::log2(1.0 - x);
  return bits;
}

double shannon_entropy(const ProbabilitySpectrum& spectrum) {
  if (!spectrum.complete) {
    throw Error(ErrorKind::incomplete_spectrum,
                "Shannon entropy requires the complete spectrum");
  }
  detail::KahanSum bits;
  for (double p : spectrum.probabilities) {
    if (p > 0.0) bits.add(-p * std::log2(p));
  }
  return std::max(0.0, bits.value());
}

ProbabilitySpectrum reduced_spectrum_full(const xy::ModeOccupations& occupations) {
  const int L = occupations.count();
  if (L > kEnumerationCap) {
    throw Error(ErrorKind::invalid_argument,
                "full enumeration is capped at 24 modes; use "
                "reduced_spectrum_topk for larger blocks");
  }
  std::vector<double> probabilities(std::size_t{1} << L, 0.0);
  probabilities[0] = 1.0;
  std::size_t size = 1;
  for (int m = 0; m < L; ++m) {
    const double nu = occupations.values()[static_cast<std::size_t>(m)];
    const double keep = (1.0 + nu) / 2.0;
    const double flip = (1.0 - nu) / 2.0;
    for (std::size_t i = size; i-- > 0;) {
      const double p = probabilities[i];
      probabilities[2 * i] = p * keep;
      probabilities[2 * i + 1] = p * flip;
    }
    size *= 2;
  }
  return ProbabilitySpectrum::make(std::move(probabilities), true);
}

namespace {

// Best-first enumeration of mode-flip patterns.  Modes are visited in order
// of decreasing flip ratio (1-nu)/(1+nu), so both successors of a pattern
// (extend the highest flip, or slide it one mode up) can only lower the
// probability; every pattern is generated exactly once.
struct TopkNode {
  double value = 0.0;
  std::uint64_t mask = 0;  // bit j = flip of the j-th largest-ratio mode
  int top = -1;            // highest set bit of mask, -1 for none

  bool operator<(const TopkNode& other) const { return value < other.value; }
};

}  // namespace

ProbabilitySpectrum reduced_spectrum_topk(const xy::ModeOccupations& occupations,
                                          std::int64_t k) {
  const int L = occupations.count();
  if (k < 1) {
    throw Error(ErrorKind::invalid_argument, "top-k requires k >= 1");
  }
  if (k > (std::int64_t{1} << kEnumerationCap)) {
    throw Error(ErrorKind::invalid_argument,
                "top-k prefix larger than the 2^24 enumeration cap");
  }
  if (L <= kEnumerationCap && k >= (std::int64_t{1} << L)) {
    return reduced_spectrum_full(occupations);
  }
  if (L > 63) {
    throw Error(ErrorKind::invalid_argument,
                "top-k flip patterns are limited to 63 modes");
  }

  std::vector<double> keep(static_cast<std::size_t>(L));
  std::vector<double> flip(static_cast<std::size_t>(L));
  for (int m = 0; m < L; ++m) {
    const double nu = occupations.values()[static_cast<std::size_t>(m)];
    keep[static_cast<std::size_t>(m)] = (1.0 + nu) / 2.0;
    flip[static_cast<std::size_t>(m)] = (1.0 - nu) / 2.0;
  }

  // Mode order by decreasing flip ratio = increasing nu (values() descends).
  std::vector<int> mode_of(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) mode_of[static_cast<std::size_t>(j)] = L - 1 - j;

  // Recomputes the product in the original mode order so every emitted value
  // is bitwise identical to the dense enumeration.
  auto canonical = [&](std::uint64_t mask) {
    std::uint64_t original = 0;
    for (int j = 0; j < L; ++j) {
      if (mask >> j & 1) original |= std::uint64_t{1} << mode_of[static_cast<std::size_t>(j)];
    }
    double p = 1.0;
    for (int m = 0; m < L; ++m) {
      p *= (original >> m & 1) ? flip[static_cast<std::size_t>(m)]
                               : keep[static_cast<std::size_t>(m)];
    }
    return p;
  };

  std::priority_queue<TopkNode> frontier;
  frontier.push(TopkNode{canonical(0), 0, -1});
  std::vector<double> emitted;
  emitted.reserve(static_cast<std::size_t>(k));
  while (static_cast<std::int64_t>(emitted.size()) < k && !frontier.empty()) {
    const TopkNode node = frontier.top();
    frontier.pop();
    emitted.push_back(node.value);
    const int next = node.top + 1;
    if (next >= L) continue;
    const std::uint64_t extended = node.mask | (std::uint64_t{1} << next);
    frontier.push(TopkNode{canonical(extended), extended, next});
    if (node.top >= 0) {
      const std::uint64_t slid = (node.mask ^ (std::uint64_t{1} << node.top)) |
                                 (std::uint64_t{1} << next);
      frontier.push(TopkNode{canonical(slid), slid, next});
    }
  }
  return ProbabilitySpectrum::make(std::move(emitted), false);
}

MajorizationReport majorization_compare(const ProbabilitySpectrum& p,
                                        const ProbabilitySpectrum& q,
                                        double tol) {
  if (!p.complete || !q.complete) {
    throw Error(ErrorKind::incomplete_spectrum,
                "majorization comparison requires complete spectra");
  }
  const std::size_t n = std::max(p.probabilities.size(), q.probabilities.size());
  detail::KahanSum sum_p;
  detail::KahanSum sum_q;
  double max_excess = 0.0;
  std::int64_t worst = -1;
  for (std::size_t i = 0; i < n; ++i) {
    sum_p.add(i < p.probabilities.size() ? p.probabilities[i] : 0.0);
    sum_q.add(i < q.probabilities.size() ? q.probabilities[i] : 0.0);
    const double excess = sum_q.value() - sum_p.value();
    if (excess > max_excess) {
      max_excess = excess;
      worst = static_cast<std::int64_t>(i);
    }
  }
  return MajorizationReport{max_excess <= tol, max_excess, worst};
}

std::int64_t effective_rank(const ProbabilitySpectrum& spectrum, double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw Error(ErrorKind::invalid_argument, "epsilon must be positive");
  }
  const std::vector<double>& p = spectrum.probabilities;
  if (!spectrum.complete && (p.empty() || p.back() >= epsilon)) {
    throw Error(ErrorKind::uncertain_rank,
                "prefix too short: smallest retained probability is not below "
                "epsilon");
  }
  auto first_below = std::lower_bound(p.begin(), p.end(), epsilon,
                                      [](double a, double b) { return a >= b; });
  return static_cast<std::int64_t>(first_below - p.begin());
}

}  // namespace chainent::spectra
