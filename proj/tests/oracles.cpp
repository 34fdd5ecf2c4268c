#include "oracles.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace testoracle {

namespace {

std::vector<double> symmetric_eigen(std::vector<double>& a, int n,
                                    bool vectors) {
  std::vector<double> w(static_cast<std::size_t>(n));
  const int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n, a.data(),
                     n, w.data());
  if (info != 0) throw std::runtime_error("dsyevd failed");
  return w;
}

double spin_z(std::uint32_t state, int site) {
  return (state >> site) & 1u ? -1.0 : 1.0;
}

double matrix_diagonal(const chainent::ed::XXZModel& model,
                       std::uint32_t state) {
  double zz = 0.0;
  double z = 0.0;
  for (int b = 0; b < model.bond_count(); ++b) {
    zz += spin_z(state, b) * spin_z(state, (b + 1) % model.sites);
  }
  for (int l = 0; l < model.sites; ++l) z += spin_z(state, l);
  return model.sign_factor() * (model.delta * zz + model.lambda * z);
}

DenseGround ground_from_levels(const chainent::ed::XXZModel& model,
                               std::vector<double> levels,
                               Eigen::VectorXcd state) {
  std::sort(levels.begin(), levels.end());
  DenseGround ground;
  ground.energy = levels[0];
  ground.gap = levels[1] - levels[0];
  ground.state = std::move(state);
  ground.state /= ground.state.norm();
  (void)model;
  return ground;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a,
                                          int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n,
                                  w.data());
  if (info != 0) throw std::runtime_error("zheevd failed");
  return w;
}

std::vector<double> mode_occupations(
    const chainent::xy::BlockCorrelationMatrix& b) {
  const int n = static_cast<int>(b.entries.rows());
  std::vector<std::complex<double>> herm(static_cast<std::size_t>(n) * n);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      herm[static_cast<std::size_t>(col) * n + row] =
          std::complex<double>(0.0, b.entries(row, col));
    }
  }
  std::vector<double> w = hermitian_eigenvalues(std::move(herm), n);
  // The spectrum of iB is symmetric about zero, so the top half are the
  // paired occupations even when some of them vanish exactly.
  std::sort(w.begin(), w.end(), std::greater<>());
  w.resize(static_cast<std::size_t>(n / 2));
  return w;
}

Eigen::MatrixXd dense_hamiltonian(const chainent::ed::XXZModel& model) {
  const std::int64_t dim = std::int64_t{1} << model.sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (std::int64_t x = 0; x < dim; ++x) {
    const auto state = static_cast<std::uint32_t>(x);
    h(x, x) = matrix_diagonal(model, state);
    for (int b = 0; b < model.bond_count(); ++b) {
      const int i = b;
      const int j = (b + 1) % model.sites;
      if (((state >> i) & 1u) == ((state >> j) & 1u)) continue;
      const std::uint32_t flipped =
          state ^ ((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
      h(flipped, x) += 2.0 * model.sign_factor();
    }
  }
  return h;
}

DenseGround dense_ground(const chainent::ed::XXZModel& model) {
  const Eigen::MatrixXd h = dense_hamiltonian(model);
  const int n = static_cast<int>(h.rows());
  std::vector<double> a(h.data(), h.data() + h.size());
  const std::vector<double> w = symmetric_eigen(a, n, true);

  Eigen::VectorXcd state(n);
  for (int i = 0; i < n; ++i) state(i) = a[static_cast<std::size_t>(i)];
  return ground_from_levels(model, w, std::move(state));
}

DenseGround sector_dense_ground(const chainent::ed::XXZModel& model) {
  const std::int64_t dim = std::int64_t{1} << model.sites;
  std::vector<std::vector<std::uint32_t>> sectors(
      static_cast<std::size_t>(model.sites) + 1);
  for (std::int64_t x = 0; x < dim; ++x) {
    sectors[static_cast<std::size_t>(
                std::popcount(static_cast<std::uint32_t>(x)))]
        .push_back(static_cast<std::uint32_t>(x));
  }

  std::vector<double> levels;
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd best_state;
  for (const std::vector<std::uint32_t>& states : sectors) {
    const int n = static_cast<int>(states.size());
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int col = 0; col < n; ++col) {
      const std::uint32_t state = states[static_cast<std::size_t>(col)];
      a[static_cast<std::size_t>(col) * n + col] =
          matrix_diagonal(model, state);
      for (int b = 0; b < model.bond_count(); ++b) {
        const int i = b;
        const int j = (b + 1) % model.sites;
        if (((state >> i) & 1u) == ((state >> j) & 1u)) continue;
        const std::uint32_t flipped =
            state ^ ((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
        const auto row = std::lower_bound(states.begin(), states.end(), flipped) -
                         states.begin();
        a[static_cast<std::size_t>(col) * n + row] += 2.0 * model.sign_factor();
      }
    }
    const std::vector<double> w = symmetric_eigen(a, n, true);
    levels.insert(levels.end(), w.begin(), w.end());
    if (w[0] < best) {
      best = w[0];
      best_state = Eigen::VectorXcd::Zero(dim);
      for (int i = 0; i < n; ++i) {
        best_state(states[static_cast<std::size_t>(i)]) =
            a[static_cast<std::size_t>(i)];
      }
    }
  }
  return ground_from_levels(model, std::move(levels), std::move(best_state));
}

Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd& amplitudes, int sites,
                               int block) {
  const std::int64_t rows = std::int64_t{1} << block;
  const std::int64_t rest = std::int64_t{1} << (sites - block);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(rows, rows);
  for (std::int64_t r = 0; r < rest; ++r) {
    for (std::int64_t a = 0; a < rows; ++a) {
      for (std::int64_t b = 0; b < rows; ++b) {
        rho(a, b) += amplitudes(a + (r << block)) *
                     std::conj(amplitudes(b + (r << block)));
      }
    }
  }
  return rho;
}

double block_entropy(const Eigen::VectorXcd& amplitudes, int sites, int block) {
  const Eigen::MatrixXcd rho = partial_trace(amplitudes, sites, block);
  const int n = static_cast<int>(rho.rows());
  std::vector<std::complex<double>> a(rho.data(), rho.data() + rho.size());
  const std::vector<double> w = hermitian_eigenvalues(std::move(a), n);
  double entropy = 0.0;
  for (double p : w) {
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

double trapezoid_coupling(double h, double gamma, int lag, int points) {
  std::complex<double> sum = 0.0;
  for (int k = 0; k < points; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / points;
    const std::complex<double> symbol(std::cos(phi) - h,
                                      -gamma * std::sin(phi));
    sum += std::polar(1.0, -lag * phi) * symbol / std::abs(symbol);
  }
  return (sum / static_cast<double>(points)).real();
}

}  // namespace testoracle
