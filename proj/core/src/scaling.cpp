#include "chainent/scaling.hpp"

#include <cmath>
#include <vector>

#include "chainent/xy.hpp"

namespace chainent::scaling {

namespace {

void require_window(FitWindow window) {
  if (window.l_min < 1 || window.l_max < window.l_min) {
    throw Error(ErrorKind::invalid_argument,
                "fit window must satisfy 1 <= l_min <= l_max");
  }
}

}  // namespace

ScalingFit fit_central_charge(const EntropyProfile& profile, FitWindow window) {
  profile.validate();
  require_window(window);

  std::vector<double> x;
  std::vector<double> y;
  for (const ProfilePoint& point : profile.points) {
    if (point.block_size < window.l_min || point.block_size > window.l_max) {
      continue;
    }
    x.push_back(std::log2(static_cast<double>(point.block_size)));
    y.push_back(point.entropy_bits);
  }
  const int n = static_cast<int>(x.size());
  if (n < 3) {
    throw Error(ErrorKind::invalid_argument,
                "fit needs at least three profile points inside the window");
  }

  long double mean_x = 0.0L;
  long double mean_y = 0.0L;
  for (int i = 0; i < n; ++i) {
    mean_x += x[static_cast<std::size_t>(i)];
    mean_y += y[static_cast<std::size_t>(i)];
  }
  mean_x /= n;
  mean_y /= n;

  long double covariance = 0.0L;
  long double variance = 0.0L;
  for (int i = 0; i < n; ++i) {
    const long double dx = x[static_cast<std::size_t>(i)] - mean_x;
    covariance += dx * (y[static_cast<std::size_t>(i)] - mean_y);
    variance += dx * dx;
  }
  if (variance <= 0.0L) {
    throw Error(ErrorKind::invalid_argument,
                "fit window must span more than one block size");
  }

  ScalingFit fit;
  fit.slope = static_cast<double>(covariance / variance);
  fit.intercept = static_cast<double>(mean_y - (covariance / variance) * mean_x);
  fit.central_charge_sum = 6.0 * fit.slope;
  long double residual_sq = 0.0L;
  for (int i = 0; i < n; ++i) {
    const long double r = y[static_cast<std::size_t>(i)] - fit.slope * x[static_cast<std::size_t>(i)] -
                          fit.intercept;
    residual_sq += r * r;
  }
  fit.rms_residual = static_cast<double>(std::sqrt(static_cast<double>(residual_sq / n)));
  fit.window = window;
  fit.points_used = n;
  return fit;
}

SaturationEstimate saturation_analysis(const EntropyProfile& profile,
                                       double eps_increment, double delta) {
  profile.validate();
  if (profile.points.empty()) {
    throw Error(ErrorKind::invalid_argument, "profile must be non-empty");
  }
  if (!(eps_increment > 0.0) || !(delta >= 0.0)) {
    throw Error(ErrorKind::invalid_argument,
                "saturation thresholds must be positive");
  }

  SaturationEstimate estimate;
  const std::size_t n = profile.points.size();
  estimate.s_max = profile.points[n - 1].entropy_bits;
  if (n >= 3) {
    const double last = profile.points[n - 1].entropy_bits -
                        profile.points[n - 2].entropy_bits;
    const double prior = profile.points[n - 2].entropy_bits -
                         profile.points[n - 3].entropy_bits;
    estimate.converged =
        std::abs(last) < eps_increment && std::abs(prior) < eps_increment;
  }
  for (const ProfilePoint& point : profile.points) {
    if (point.entropy_bits >= estimate.s_max - delta) {
      estimate.entanglement_length = point.block_size;
      break;
    }
  }
  return estimate;
}

double gamma_subleading(double gamma, int max_block, double tol) {
  if (!(gamma > 0.0) || gamma > 1.0) {
    throw Error(ErrorKind::invalid_argument,
                "anisotropy shift needs 0 < gamma <= 1; gamma = 0 changes "
                "universality class");
  }
  if (max_block < 50) {
    throw Error(ErrorKind::invalid_argument,
                "anisotropy shift needs max_block >= 50 to suppress "
                "finite-size transients");
  }
  if (gamma == 1.0) return 0.0;

  auto entropy_at_block = [&](double g) {
    const xy::XYModel model(1.0, g);
    const xy::CouplingSequence couplings =
        xy::coupling_coefficients(model, max_block - 1, tol);
    return xy::block_entropy(
        xy::mode_occupations(xy::block_correlation(couplings, max_block)));
  };
  return entropy_at_block(1.0) - entropy_at_block(gamma);
}

double increment_ratio(const EntropyProfile& a, const EntropyProfile& b,
                       FitWindow window) {
  a.validate();
  b.validate();
  require_window(window);
  if (window.l_max == window.l_min) {
    throw Error(ErrorKind::invalid_argument,
                "increment ratio needs a window with at least two block sizes");
  }
  for (int L = window.l_min; L <= window.l_max; ++L) {
    if (!a.has_block(L) || !b.has_block(L)) {
      throw Error(ErrorKind::dimension_mismatch,
                  "both profiles must cover every block size in the window");
    }
  }

  long double total = 0.0L;
  int count = 0;
  for (int L = window.l_min; L < window.l_max; ++L) {
    const double da = a.entropy_at(L + 1) - a.entropy_at(L);
    const double db = b.entropy_at(L + 1) - b.entropy_at(L);
    if (std::abs(db) < 1e-300) {
      throw Error(ErrorKind::numerical_singularity,
                  "denominator profile has a vanishing increment at L = " +
                      std::to_string(L));
    }
    total += static_cast<long double>(da) / db;
    ++count;
  }
  return static_cast<double>(total / count);
}

}  // namespace chainent::scaling
