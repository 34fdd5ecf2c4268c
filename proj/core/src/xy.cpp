#include "chainent/xy.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "chainent/spectra.hpp"
#include "kahan.hpp"

namespace chainent::xy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 15-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 15> kGlNode = {
    -0.98799251802048538, -0.93727339240070595, -0.84820658341042721,
    -0.72441773136017007, -0.57097217260853883, -0.39415134707756339,
    -0.20119409399743451, 0.0,                  0.20119409399743451,
    0.39415134707756339,  0.57097217260853883,  0.72441773136017007,
    0.84820658341042721,  0.93727339240070595,  0.98799251802048538};
constexpr std::array<double, 15> kGlWeight = {
    0.030753241996118647, 0.070366047488108069, 0.10715922046717177,
    0.13957067792615391,  0.16626920581699378,  0.18616100001556188,
    0.19843148532711125,  0.2025782419255609,   0.19843148532711125,
    0.18616100001556188,  0.16626920581699378,  0.13957067792615391,
    0.10715922046717177,  0.070366047488108069, 0.030753241996118647};

constexpr long kMaxEvaluations = 1L << 22;
constexpr double kMinPanelWidth = 1e-13;

// Unit-modulus symbol of the ground-state Majorana correlation kernel.
struct Symbol {
  double h;
  double gamma;

  std::complex<double> operator()(double phi) const {
    const std::complex<double> raw(std::cos(phi) - h, -gamma * std::sin(phi));
    const double magnitude = std::abs(raw);
    if (magnitude < 1e-300) {
      throw Error(ErrorKind::numerical_singularity,
                  "correlation symbol vanishes at a quadrature node");
    }
    return raw / magnitude;
  }
};

struct LagIntegrand {
  Symbol symbol;
  int lag;

  std::complex<double> operator()(double phi) const {
    return std::polar(1.0, -static_cast<double>(lag) * phi) * symbol(phi);
  }
};

std::complex<double> gl15(const LagIntegrand& f, double a, double b,
                          long* evaluations) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < 15; ++i) {
    acc += kGlWeight[static_cast<std::size_t>(i)] *
           f(mid + half * kGlNode[static_cast<std::size_t>(i)]);
  }
  *evaluations += 15;
  return acc * half;
}

struct Panel {
  double a;
  double b;
  std::complex<double> estimate;
  double tol;
};

struct LagIntegral {
  std::complex<double> value;
  double error_bound;
};

// Adaptive bisection with embedded 15-point Gauss-Legendre estimates.  Each
// panel owns a share of the tolerance proportional to its width; a panel is
// accepted once the whole-vs-halves discrepancy fits its share.  Breakpoints
// must contain every interior singularity of the integrand so panels stay
// smooth inside.
LagIntegral integrate(const LagIntegrand& f, const std::vector<double>& breaks,
                      double tol) {
  long evaluations = 0;
  std::vector<Panel> pending;
  pending.reserve(breaks.size() * 2);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    pending.push_back(
        Panel{a, b, gl15(f, a, b, &evaluations), tol * (b - a) / kTwoPi});
  }

  detail::KahanSum real_part;
  detail::KahanSum imag_part;
  detail::KahanSum error_total;
  while (!pending.empty()) {
    const Panel panel = pending.back();
    pending.pop_back();
    if (evaluations > kMaxEvaluations) {
      throw Error(ErrorKind::tolerance_not_met,
                  "quadrature evaluation budget exhausted");
    }
    const double mid = 0.5 * (panel.a + panel.b);
    const std::complex<double> left = gl15(f, panel.a, mid, &evaluations);
    const std::complex<double> right = gl15(f, mid, panel.b, &evaluations);
    const std::complex<double> refined = left + right;
    const double discrepancy = std::abs(refined - panel.estimate);
    if (discrepancy <= panel.tol || (panel.b - panel.a) <= kMinPanelWidth) {
      real_part.add(refined.real());
      imag_part.add(refined.imag());
      error_total.add(discrepancy);
    } else {
      pending.push_back(Panel{panel.a, mid, left, 0.5 * panel.tol});
      pending.push_back(Panel{mid, panel.b, right, 0.5 * panel.tol});
    }
  }
  return LagIntegral{{real_part.value(), imag_part.value()},
                     error_total.value()};
}

double quadrature_lag(const Symbol& symbol, int lag, double tol,
                      double* achieved) {
  const LagIntegrand f{symbol, lag};

  // Enough initial panels to resolve e^{-il phi}, plus the sign-jump points
  // of the gamma = 0 symbol.  The h = 1 kink sits at the endpoints phi = 0
  // and 2 pi, so it never falls inside a panel.
  std::vector<double> breaks;
  const int initial = std::max(8, 2 * std::abs(lag));
  breaks.reserve(static_cast<std::size_t>(initial) + 3);
  for (int i = 0; i <= initial; ++i) {
    breaks.push_back(kTwoPi * static_cast<double>(i) /
                     static_cast<double>(initial));
  }
  if (symbol.gamma == 0.0 && symbol.h < 1.0) {
    const double phi_a = std::acos(symbol.h);
    breaks.push_back(phi_a);
    breaks.push_back(kTwoPi - phi_a);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double x, double y) { return y - x < 1e-14; }),
                 breaks.end());
  }

  const LagIntegral integral = integrate(f, breaks, tol * kTwoPi);
  const double value = integral.value.real() / kTwoPi;
  const double residue = std::abs(integral.value.imag()) / kTwoPi;
  *achieved = std::max(integral.error_bound / kTwoPi, residue);
  if (*achieved > tol) {
    throw Error(ErrorKind::tolerance_not_met,
                "quadrature reached " + std::to_string(*achieved) +
                    " instead of the requested tolerance");
  }
  return value;
}

void check_coefficient_bound(double g) {
  if (!std::isfinite(g) || std::abs(g) > 1.0 + 1e-12) {
    throw Error(ErrorKind::correlation_invalid,
                "correlation coefficient left [-1, 1]");
  }
}

CouplingSequence quadrature_sequence(const XYModel& model, int max_lag,
                                     double tol) {
  const Symbol symbol{model.h, model.gamma};
  std::vector<double> values(2 * static_cast<std::size_t>(max_lag) + 1, 0.0);
  double worst = 0.0;
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    double achieved = 0.0;
    const double g = quadrature_lag(symbol, lag, tol, &achieved);
    check_coefficient_bound(g);
    values[static_cast<std::size_t>(lag + max_lag)] = g;
    worst = std::max(worst, achieved);
  }
  return CouplingSequence(max_lag, std::move(values), worst);
}

void require_positive_tol(double tol) {
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw Error(ErrorKind::invalid_argument,
                "quadrature tolerance must be positive");
  }
}

}  // namespace

XYModel::XYModel(double h, double gamma) : h(h), gamma(gamma) {
  if (!std::isfinite(h) || h < 0.0) {
    throw Error(ErrorKind::invalid_argument,
                "inverse coupling h must be finite and nonnegative");
  }
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw Error(ErrorKind::invalid_argument, "anisotropy must lie in [0, 1]");
  }
}

double XYModel::coupling() const {
  return h == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / h;
}

bool XYModel::is_critical() const {
  return (h == 1.0 && gamma > 0.0) || (gamma == 0.0 && h <= 1.0);
}

CouplingSequence::CouplingSequence(int max_lag, std::vector<double> values,
                                   double achieved_tolerance)
    : max_lag_(max_lag),
      values_(std::move(values)),
      achieved_tolerance_(achieved_tolerance) {
  if (max_lag_ < 0) {
    throw Error(ErrorKind::invalid_argument, "max_lag must be nonnegative");
  }
  if (values_.size() != 2 * static_cast<std::size_t>(max_lag_) + 1) {
    throw Error(ErrorKind::dimension_mismatch,
                "coupling sequence needs exactly 2*max_lag + 1 values");
  }
  for (double g : values_) check_coefficient_bound(g);
}

double CouplingSequence::g(int lag) const {
  if (lag < -max_lag_ || lag > max_lag_) {
    throw Error(ErrorKind::dimension_mismatch,
                "lag " + std::to_string(lag) + " outside the stored range");
  }
  return values_[static_cast<std::size_t>(lag + max_lag_)];
}

CouplingSequence coupling_coefficients(const XYModel& model, int max_lag,
                                       double tol) {
  require_positive_tol(tol);
  if (max_lag < 0) {
    throw Error(ErrorKind::invalid_argument, "max_lag must be nonnegative");
  }

  if (model.gamma == 0.0) {
    // Sign symbol of cos phi - h: +1 on |phi| < phi_a, -1 beyond.
    const double phi_a = model.h <= 1.0 ? std::acos(model.h) : 0.0;
    std::vector<double> values(2 * static_cast<std::size_t>(max_lag) + 1, 0.0);
    for (int lag = -max_lag; lag <= max_lag; ++lag) {
      const double g =
          lag == 0 ? 2.0 * phi_a / std::numbers::pi - 1.0
                   : 2.0 * std::sin(lag * phi_a) /
                         (static_cast<double>(lag) * std::numbers::pi);
      values[static_cast<std::size_t>(lag + max_lag)] = g;
    }
    return CouplingSequence(max_lag, std::move(values), 0.0);
  }

  if (model.h == 1.0 && model.gamma == 1.0) {
    // Critical Ising symbol -i e^{-i phi / 2} (phi in [0, 2 pi)).
    std::vector<double> values(2 * static_cast<std::size_t>(max_lag) + 1, 0.0);
    for (int lag = -max_lag; lag <= max_lag; ++lag) {
      values[static_cast<std::size_t>(lag + max_lag)] =
          -2.0 / (std::numbers::pi * (2.0 * lag + 1.0));
    }
    return CouplingSequence(max_lag, std::move(values), 0.0);
  }

  return quadrature_sequence(model, max_lag, tol);
}

CouplingSequence coupling_coefficients_quadrature(const XYModel& model,
                                                  int max_lag, double tol) {
  require_positive_tol(tol);
  if (max_lag < 0) {
    throw Error(ErrorKind::invalid_argument, "max_lag must be nonnegative");
  }
  return quadrature_sequence(model, max_lag, tol);
}

BlockCorrelationMatrix block_correlation(const CouplingSequence& couplings,
                                         int block_size) {
  if (block_size < 1) {
    throw Error(ErrorKind::invalid_argument, "block size must be positive");
  }
  if (couplings.max_lag() < block_size - 1) {
    throw Error(ErrorKind::dimension_mismatch,
                "block of " + std::to_string(block_size) +
                    " sites needs lags up to " + std::to_string(block_size - 1));
  }
  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(2 * block_size, 2 * block_size);
  for (int j = 0; j < block_size; ++j) {
    for (int k = 0; k < block_size; ++k) {
      entries(2 * j, 2 * k + 1) = couplings.g(k - j);
      entries(2 * j + 1, 2 * k) = -couplings.g(j - k);
    }
  }
  return BlockCorrelationMatrix{block_size, std::move(entries)};
}

ModeOccupations ModeOccupations::from_values(std::vector<double> values) {
  for (double& nu : values) {
    if (!std::isfinite(nu) || nu < -1e-8 || nu > 1.0 + 1e-8) {
      throw Error(ErrorKind::correlation_invalid,
                  "mode occupation outside [0, 1]");
    }
    nu = std::clamp(nu, 0.0, 1.0);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  ModeOccupations occupations;
  occupations.values_ = std::move(values);
  return occupations;
}

ModeOccupations mode_occupations(const BlockCorrelationMatrix& correlation) {
  const int L = correlation.block_size;
  if (L < 1 || correlation.entries.rows() != 2 * L ||
      correlation.entries.cols() != 2 * L) {
    throw Error(ErrorKind::dimension_mismatch,
                "correlation matrix must be 2L x 2L");
  }
  const double skew = (correlation.entries + correlation.entries.transpose())
                          .cwiseAbs()
                          .maxCoeff();
  if (skew > 1e-12) {
    throw Error(ErrorKind::correlation_invalid,
                "correlation matrix must be antisymmetric");
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(correlation.entries);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorKind::eigensolver_failure,
                "singular value decomposition did not converge");
  }
  const Eigen::VectorXd& sv = svd.singularValues();

  // Singular values of a real antisymmetric matrix come in equal pairs; one
  // member of each pair is the occupation.
  std::vector<double> values(static_cast<std::size_t>(L));
  for (int m = 0; m < L; ++m) {
    if (std::abs(sv(2 * m) - sv(2 * m + 1)) > 1e-8) {
      throw Error(ErrorKind::correlation_invalid,
                  "singular values failed to pair up");
    }
    values[static_cast<std::size_t>(m)] = sv(2 * m);
  }
  return ModeOccupations::from_values(std::move(values));
}

double block_entropy(const ModeOccupations& occupations) {
  detail::KahanSum bits;
  for (double nu : occupations.values()) {
    bits.add(spectra::binary_entropy((1.0 + nu) / 2.0));
  }
  return std::max(0.0, bits.value());
}

EntropyProfile entropy_profile(const XYModel& model, int max_block, double tol) {
  if (max_block < 1) {
    throw Error(ErrorKind::invalid_argument, "max_block must be positive");
  }
  const CouplingSequence couplings =
      coupling_coefficients(model, max_block - 1, tol);

  EntropyProfile profile;
  char tag[64];
  std::snprintf(tag, sizeof(tag), "xy h=%.12g gamma=%.12g", model.h,
                model.gamma);
  profile.model = tag;
  profile.points.reserve(static_cast<std::size_t>(max_block));
  for (int L = 1; L <= max_block; ++L) {
    const double bits =
        block_entropy(mode_occupations(block_correlation(couplings, L)));
    profile.points.push_back(ProfilePoint{L, bits});
  }
  profile.validate();
  return profile;
}

double half_chain_entropy(const XYModel& model) {
  if (model.gamma != 1.0) {
    throw Error(ErrorKind::invalid_argument,
                "half-chain estimate is defined on the Ising line gamma = 1");
  }
  if (model.h == 0.0) {
    throw Error(ErrorKind::invalid_argument,
                "half-chain estimate needs a finite coupling (h > 0)");
  }
  if (model.h == 1.0) {
    throw Error(ErrorKind::critical_divergence,
                "half-chain entropy diverges at the critical coupling a = 1");
  }
  const double a = 1.0 / model.h;
  return std::log2(1.0 / std::abs(1.0 - a)) / 6.0;
}

}  // namespace chainent::xy
