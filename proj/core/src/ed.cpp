#include "chainent/ed.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "chainent/spectra.hpp"
#include "kahan.hpp"

namespace chainent::ed {

namespace {

constexpr int kMaxSites = 24;

constexpr std::array<std::array<std::uint64_t, kMaxSites + 1>, kMaxSites + 1>
make_binomial_table() {
  std::array<std::array<std::uint64_t, kMaxSites + 1>, kMaxSites + 1> table{};
  for (int n = 0; n <= kMaxSites; ++n) {
    table[static_cast<std::size_t>(n)][0] = 1;
    for (int k = 1; k <= n; ++k) {
      table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          (k <= n - 1
               ? table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)]
               : 0);
    }
  }
  return table;
}

constexpr auto kBinomial = make_binomial_table();

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return kBinomial[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15uLL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9uLL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebuLL;
  return z ^ (z >> 31);
}

// Rank of `state` within the ascending enumeration of its popcount class.
std::size_t sector_rank(std::uint32_t state) {
  std::size_t rank = 0;
  int seen = 0;
  while (state != 0) {
    const int position = std::countr_zero(state);
    state &= state - 1;
    ++seen;
    rank += binomial(position, seen);
  }
  return rank;
}

std::vector<std::uint32_t> sector_states(int sites, int down_count) {
  std::vector<std::uint32_t> states;
  states.reserve(binomial(sites, down_count));
  if (down_count == 0) {
    states.push_back(0);
    return states;
  }
  const std::uint32_t limit = std::uint32_t{1} << sites;
  std::uint32_t x = (std::uint32_t{1} << down_count) - 1;
  while (x < limit) {
    states.push_back(x);
    const std::uint32_t c = x & (~x + 1);
    const std::uint32_t r = x + c;
    x = (((x ^ r) >> 2) / c) | r;
  }
  return states;
}

int antiparallel_bonds(std::uint32_t state, const XXZModel& model) {
  const int n = model.sites;
  if (model.boundary == Boundary::periodic) {
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    const std::uint32_t rotated =
        ((state << 1) | (state >> (n - 1))) & mask;
    return std::popcount(state ^ rotated);
  }
  const std::uint32_t bond_mask = (std::uint32_t{1} << (n - 1)) - 1;
  return std::popcount((state ^ (state >> 1)) & bond_mask);
}

double diagonal_energy(std::uint32_t state, const XXZModel& model) {
  const int anti = antiparallel_bonds(state, model);
  const int magnetization = model.sites - 2 * std::popcount(state);
  return model.sign_factor() * (model.delta * (model.bond_count() - 2 * anti) +
                                model.lambda * magnetization);
}

// Gershgorin-style floor for one sector: every off-diagonal row sum is
// 2 * (antiparallel bond count), so no eigenvalue can undercut
// min_x [ diag(x) - 2 * antiparallel(x) ].
double sector_lower_bound(const XXZModel& model, int down_count) {
  double bound = std::numeric_limits<double>::infinity();
  if (down_count == 0) {
    return diagonal_energy(0, model);
  }
  const std::uint32_t limit = std::uint32_t{1} << model.sites;
  std::uint32_t x = (std::uint32_t{1} << down_count) - 1;
  while (x < limit) {
    bound = std::min(bound, diagonal_energy(x, model) -
                                2.0 * antiparallel_bonds(x, model));
    const std::uint32_t c = x & (~x + 1);
    const std::uint32_t r = x + c;
    x = (((x ^ r) >> 2) / c) | r;
  }
  return bound;
}

// One total-sz sector prepared for fast repeated H*v products.
struct SectorProblem {
  const XXZModel* model = nullptr;
  std::vector<std::uint32_t> states;
  Eigen::VectorXd diagonal;
  std::vector<std::int32_t> neighbors;  // states.size() x bond_count, -1 = none

  long dimension() const { return static_cast<long>(states.size()); }
};

SectorProblem build_sector(const XXZModel& model, int down_count) {
  SectorProblem problem;
  problem.model = &model;
  problem.states = sector_states(model.sites, down_count);
  const long dim = problem.dimension();
  const int bonds = model.bond_count();

  problem.diagonal.resize(dim);
  problem.neighbors.assign(static_cast<std::size_t>(dim) * bonds, -1);
  for (long i = 0; i < dim; ++i) {
    const std::uint32_t state = problem.states[static_cast<std::size_t>(i)];
    problem.diagonal(i) = diagonal_energy(state, model);
    for (int b = 0; b < bonds; ++b) {
      const int site_a = b;
      const int site_b = (b + 1) % model.sites;
      const std::uint32_t pair_mask =
          (std::uint32_t{1} << site_a) | (std::uint32_t{1} << site_b);
      const std::uint32_t bits = state & pair_mask;
      if (bits == 0 || bits == pair_mask) continue;  // parallel: no flip
      problem.neighbors[static_cast<std::size_t>(i) * bonds + b] =
          static_cast<std::int32_t>(sector_rank(state ^ pair_mask));
    }
  }
  return problem;
}

void apply_sector(const SectorProblem& problem, const Eigen::VectorXd& x,
                  Eigen::VectorXd& y) {
  const long dim = problem.dimension();
  const int bonds = problem.model->bond_count();
  const double off = 2.0 * problem.model->sign_factor();
  for (long i = 0; i < dim; ++i) {
    const std::int32_t* row =
        problem.neighbors.data() + static_cast<std::size_t>(i) * bonds;
    double acc = 0.0;
    for (int b = 0; b < bonds; ++b) {
      const std::int32_t j = row[b];
      if (j >= 0) acc += x(j);
    }
    y(i) = problem.diagonal(i) * x(i) + off * acc;
  }
}

struct SectorEigenpair {
  double energy = 0.0;
  Eigen::VectorXd vector;
  int iterations = 0;
};

// Lanczos with full reorthogonalization.  Convergence is gated by the cheap
// Ritz residual bound |beta * s_last| and then confirmed on the assembled
// Ritz vector, so the returned pair always satisfies ||H x - E x|| <= tol.
std::optional<SectorEigenpair> lanczos_attempt(const SectorProblem& problem,
                                               const GroundStateOptions& options,
                                               std::uint64_t seed) {
  const long dim = problem.dimension();
  if (dim == 1) {
    SectorEigenpair pair;
    pair.energy = problem.diagonal(0);
    pair.vector = Eigen::VectorXd::Ones(1);
    return pair;
  }

  const int max_steps =
      static_cast<int>(std::min<long>(options.max_iterations, dim));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  Eigen::MatrixXd basis(dim, std::min(max_steps + 1, 48));
  for (long i = 0; i < dim; ++i) basis(i, 0) = uniform(rng);
  basis.col(0).normalize();

  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXd w(dim);
  Eigen::VectorXd ritz(dim);
  Eigen::VectorXd h_ritz(dim);
  double gate = options.tol * 0.5;

  for (int j = 0; j < max_steps; ++j) {
    if (j + 2 > basis.cols()) {
      basis.conservativeResize(Eigen::NoChange,
                               std::min(max_steps + 1,
                                        static_cast<int>(basis.cols()) + 48));
    }
    apply_sector(problem, basis.col(j), w);
    const double a_j = basis.col(j).dot(w);
    alpha.push_back(a_j);
    w.noalias() -= a_j * basis.col(j);
    if (j > 0) w.noalias() -= beta.back() * basis.col(j - 1);

    // Two-pass classical Gram-Schmidt against everything computed so far.
    const auto stored = basis.leftCols(j + 1);
    const double before = w.norm();
    Eigen::VectorXd overlap = stored.transpose() * w;
    w.noalias() -= stored * overlap;
    if (w.norm() < 0.70710678 * before) {
      overlap.noalias() = stored.transpose() * w;
      w.noalias() -= stored * overlap;
    }
    const double b_j = w.norm();

    Eigen::Map<const Eigen::VectorXd> alpha_map(alpha.data(),
                                                static_cast<long>(alpha.size()));
    Eigen::Map<const Eigen::VectorXd> beta_map(beta.data(),
                                               static_cast<long>(beta.size()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tridiagonal;
    tridiagonal.computeFromTridiagonal(alpha_map, beta_map,
                                       Eigen::ComputeEigenvectors);
    if (tridiagonal.info() != Eigen::Success) {
      throw Error(ErrorKind::eigensolver_failure,
                  "tridiagonal eigensolver failed inside Lanczos");
    }
    const double theta = tridiagonal.eigenvalues()(0);
    const Eigen::VectorXd s = tridiagonal.eigenvectors().col(0);
    const double residual_bound = std::abs(b_j * s(j));

    const double scale =
        1.0 + std::max(std::abs(tridiagonal.eigenvalues()(j)), std::abs(theta));
    const bool breakdown = b_j <= 1e-13 * scale;
    if (residual_bound <= gate || breakdown) {
      ritz.noalias() = basis.leftCols(j + 1) * s;
      ritz.normalize();
      apply_sector(problem, ritz, h_ritz);
      const double rayleigh = ritz.dot(h_ritz);
      const double residual = (h_ritz - rayleigh * ritz).norm();
      if (residual <= options.tol) {
        SectorEigenpair pair;
        pair.energy = rayleigh;
        pair.vector = std::move(ritz);
        pair.iterations = j + 1;
        return pair;
      }
      if (breakdown) return std::nullopt;  // invariant subspace, restart
      gate *= 0.25;
    }

    if (j + 1 < max_steps) {
      beta.push_back(b_j);
      basis.col(j + 1) = w / b_j;
    }
    (void)theta;
  }
  return std::nullopt;
}

SectorEigenpair lanczos_lowest(const SectorProblem& problem,
                               const GroundStateOptions& options,
                               std::uint64_t mixed_seed) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    const std::optional<SectorEigenpair> pair =
        lanczos_attempt(problem, options, splitmix64(mixed_seed + attempt));
    if (pair.has_value()) return *pair;
  }
  throw Error(ErrorKind::non_convergence,
              "Lanczos failed to reach the residual tolerance within " +
                  std::to_string(options.max_iterations) + " iterations");
}

void require_valid_options(const GroundStateOptions& options) {
  if (!(options.tol > 0.0) || options.max_iterations < 1) {
    throw Error(ErrorKind::invalid_argument,
                "ground-state options need tol > 0 and max_iterations >= 1");
  }
}

QuantumState embed_sector_vector(const XXZModel& model,
                                 const std::vector<std::uint32_t>& states,
                                 const Eigen::VectorXd& vector) {
  QuantumState state;
  state.sites = model.sites;
  state.amplitudes = Eigen::VectorXcd::Zero(std::int64_t{1} << model.sites);
  for (std::size_t i = 0; i < states.size(); ++i) {
    state.amplitudes(states[i]) = vector(static_cast<long>(i));
  }
  return state;
}

int down_count_for_sz(const XXZModel& model, int total_sz) {
  if ((model.sites - total_sz) % 2 != 0 || std::abs(total_sz) > model.sites) {
    throw Error(ErrorKind::invalid_argument,
                "total sz must have the parity of the site count and "
                "magnitude at most N");
  }
  return (model.sites - total_sz) / 2;
}

}  // namespace

XXZModel::XXZModel(double delta, double lambda, int sites, SignConvention sign,
                   Boundary boundary)
    : delta(delta), lambda(lambda), sites(sites), sign(sign), boundary(boundary) {
  if (!std::isfinite(delta) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::invalid_argument, "couplings must be finite");
  }
  if (sites < 2 || sites > kMaxSites) {
    throw Error(ErrorKind::invalid_argument,
                "site count must lie in [2, " + std::to_string(kMaxSites) + "]");
  }
}

int XXZModel::bond_count() const {
  return boundary == Boundary::periodic ? sites : sites - 1;
}

double XXZModel::sign_factor() const {
  return sign == SignConvention::antiferro ? 1.0 : -1.0;
}

double QuantumState::norm() const { return amplitudes.norm(); }

void QuantumState::require_normalized() const {
  if (sites < 1 || amplitudes.size() != (std::int64_t{1} << sites)) {
    throw Error(ErrorKind::dimension_mismatch,
                "state must hold 2^sites amplitudes");
  }
  if (std::abs(norm() - 1.0) > 1e-12) {
    throw Error(ErrorKind::invalid_argument, "state must be normalized");
  }
}

void ReducedDensityMatrix::validate() const {
  const std::int64_t dim = std::int64_t{1} << block_size;
  if (block_size < 1 || entries.rows() != dim || entries.cols() != dim) {
    throw Error(ErrorKind::dimension_mismatch,
                "density matrix must be 2^block_size square");
  }
  const double asymmetry =
      (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12) {
    throw Error(ErrorKind::correlation_invalid,
                "density matrix must be Hermitian");
  }
  if (std::abs(entries.trace() - std::complex<double>(1.0, 0.0)) > 1e-10) {
    throw Error(ErrorKind::correlation_invalid,
                "density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::eigensolver_failure,
                "density matrix eigensolver did not converge");
  }
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw Error(ErrorKind::correlation_invalid,
                "density matrix must be positive semidefinite");
  }
}

QuantumState apply_hamiltonian(const XXZModel& model, const QuantumState& state) {
  if (state.sites != model.sites ||
      state.amplitudes.size() != (std::int64_t{1} << model.sites)) {
    throw Error(ErrorKind::dimension_mismatch,
                "state dimension does not match the model");
  }
  const int bonds = model.bond_count();
  const double off = 2.0 * model.sign_factor();
  const std::int64_t dim = state.amplitudes.size();

  QuantumState result;
  result.sites = model.sites;
  result.amplitudes.resize(dim);
  for (std::int64_t x = 0; x < dim; ++x) {
    const auto bits = static_cast<std::uint32_t>(x);
    std::complex<double> acc =
        diagonal_energy(bits, model) * state.amplitudes(x);
    for (int b = 0; b < bonds; ++b) {
      const std::uint32_t pair_mask =
          (std::uint32_t{1} << b) |
          (std::uint32_t{1} << ((b + 1) % model.sites));
      const std::uint32_t masked = bits & pair_mask;
      if (masked == 0 || masked == pair_mask) continue;
      acc += off * state.amplitudes(static_cast<std::int64_t>(bits ^ pair_mask));
    }
    result.amplitudes(x) = acc;
  }
  return result;
}

GroundStateResult ground_state(const XXZModel& model,
                               const GroundStateOptions& options) {
  require_valid_options(options);

  // Sectors ordered by |total sz|, positive first on ties.
  std::vector<int> order;
  for (int k = 0; k <= model.sites; ++k) order.push_back(k);
  std::sort(order.begin(), order.end(), [&](int ka, int kb) {
    const int ma = model.sites - 2 * ka;
    const int mb = model.sites - 2 * kb;
    if (std::abs(ma) != std::abs(mb)) return std::abs(ma) < std::abs(mb);
    return ma > mb;
  });

  std::vector<double> bounds(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    bounds[i] = sector_lower_bound(model, order[i]);
  }

  double best_energy = std::numeric_limits<double>::infinity();
  double second_energy = std::numeric_limits<double>::infinity();
  int best_k = -1;
  int second_k = -1;
  Eigen::VectorXd best_vector;
  std::vector<std::uint32_t> best_states;
  int best_iterations = 0;

  for (std::size_t i = 0; i < order.size(); ++i) {
    const int k = order[i];
    if (best_k >= 0 && bounds[i] > best_energy + kDegeneracyTol) continue;

    SectorProblem problem = build_sector(model, k);
    SectorEigenpair pair =
        lanczos_lowest(problem, options, options.seed ^ splitmix64(k + 1));

    if (pair.energy < best_energy) {
      second_energy = best_energy;
      second_k = best_k;
      best_energy = pair.energy;
      best_k = k;
      best_vector = std::move(pair.vector);
      best_states = std::move(problem.states);
      best_iterations = pair.iterations;
    } else if (pair.energy < second_energy) {
      second_energy = pair.energy;
      second_k = k;
    }

    if (second_energy - best_energy <= kDegeneracyTol) {
      // A tie can only be broken by a sector able to undercut the best by
      // more than the tolerance; check whether any remains.
      bool breakable = false;
      for (std::size_t r = i + 1; r < order.size(); ++r) {
        if (bounds[r] < best_energy - kDegeneracyTol) {
          breakable = true;
          break;
        }
      }
      if (!breakable) {
        char message[128];
        std::snprintf(message, sizeof(message),
                      "ground level is degenerate across sectors: total sz "
                      "%d and %d agree at E = %.12g",
                      model.sites - 2 * best_k, model.sites - 2 * second_k,
                      best_energy);
        throw Error(ErrorKind::degenerate_ground_state, message);
      }
    }
  }

  if (second_energy - best_energy <= kDegeneracyTol) {
    char message[128];
    std::snprintf(message, sizeof(message),
                  "ground level is degenerate across sectors: total sz %d and "
                  "%d agree at E = %.12g",
                  model.sites - 2 * best_k, model.sites - 2 * second_k,
                  best_energy);
    throw Error(ErrorKind::degenerate_ground_state, message);
  }

  GroundStateResult result;
  result.energy = best_energy;
  result.state = embed_sector_vector(model, best_states, best_vector);
  result.total_sz = model.sites - 2 * best_k;
  result.iterations = best_iterations;
  return result;
}

GroundStateResult ground_state_in_sector(const XXZModel& model, int total_sz,
                                         const GroundStateOptions& options) {
  require_valid_options(options);
  const int k = down_count_for_sz(model, total_sz);
  SectorProblem problem = build_sector(model, k);
  const SectorEigenpair pair =
      lanczos_lowest(problem, options, options.seed ^ splitmix64(k + 1));

  GroundStateResult result;
  result.energy = pair.energy;
  result.state = embed_sector_vector(model, problem.states, pair.vector);
  result.total_sz = total_sz;
  result.iterations = pair.iterations;
  return result;
}

ReducedDensityMatrix reduced_density_matrix(const QuantumState& state,
                                            int block_size) {
  state.require_normalized();
  if (block_size < 1 || block_size > state.sites) {
    throw Error(ErrorKind::invalid_argument,
                "block size must lie in [1, sites]");
  }
  if (block_size > 12) {
    throw Error(ErrorKind::invalid_argument,
                "explicit density matrices are capped at 2^12; use "
                "block_entropy for larger blocks");
  }
  const std::int64_t rows = std::int64_t{1} << block_size;
  const std::int64_t cols = std::int64_t{1} << (state.sites - block_size);
  const Eigen::Map<const Eigen::MatrixXcd> reshaped(state.amplitudes.data(),
                                                    rows, cols);

  ReducedDensityMatrix rho;
  rho.block_size = block_size;
  rho.entries = Eigen::MatrixXcd::Zero(rows, rows);
  rho.entries.selfadjointView<Eigen::Lower>().rankUpdate(reshaped, 1.0);
  rho.entries = rho.entries.selfadjointView<Eigen::Lower>();
  rho.entries.diagonal() = rho.entries.diagonal().real().cast<std::complex<double>>();
  return rho;
}

namespace {

std::vector<double> gram_spectrum_real(const Eigen::VectorXd& amplitudes,
                                       std::int64_t rows, std::int64_t cols) {
  const Eigen::Map<const Eigen::MatrixXd> reshaped(amplitudes.data(), rows,
                                                   cols);
  const std::int64_t side = std::min(rows, cols);
  Eigen::MatrixXd gram(side, side);
  if (rows <= cols) {
    gram.setZero();
    gram.selfadjointView<Eigen::Lower>().rankUpdate(reshaped, 1.0);
  } else {
    gram.setZero();
    gram.selfadjointView<Eigen::Lower>().rankUpdate(reshaped.transpose(), 1.0);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      gram.selfadjointView<Eigen::Lower>(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::eigensolver_failure,
                "Gram eigensolver did not converge");
  }
  std::vector<double> spectrum(static_cast<std::size_t>(side));
  for (std::int64_t i = 0; i < side; ++i) {
    spectrum[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  }
  return spectrum;
}

std::vector<double> gram_spectrum_complex(const Eigen::VectorXcd& amplitudes,
                                          std::int64_t rows, std::int64_t cols) {
  const Eigen::Map<const Eigen::MatrixXcd> reshaped(amplitudes.data(), rows,
                                                    cols);
  const std::int64_t side = std::min(rows, cols);
  Eigen::MatrixXcd gram(side, side);
  gram.setZero();
  if (rows <= cols) {
    gram.selfadjointView<Eigen::Lower>().rankUpdate(reshaped, 1.0);
  } else {
    gram.selfadjointView<Eigen::Lower>().rankUpdate(reshaped.adjoint().eval(), 1.0);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      gram.selfadjointView<Eigen::Lower>(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::eigensolver_failure,
                "Gram eigensolver did not converge");
  }
  std::vector<double> spectrum(static_cast<std::size_t>(side));
  for (std::int64_t i = 0; i < side; ++i) {
    spectrum[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  }
  return spectrum;
}

}  // namespace

double block_entropy(const QuantumState& state, int block_size) {
  state.require_normalized();
  if (block_size < 1 || block_size > state.sites) {
    throw Error(ErrorKind::invalid_argument,
                "block size must lie in [1, sites]");
  }
  const std::int64_t rows = std::int64_t{1} << block_size;
  const std::int64_t cols = std::int64_t{1} << (state.sites - block_size);

  std::vector<double> spectrum;
  if (state.amplitudes.imag().cwiseAbs().maxCoeff() == 0.0) {
    spectrum = gram_spectrum_real(state.amplitudes.real(), rows, cols);
  } else {
    spectrum = gram_spectrum_complex(state.amplitudes, rows, cols);
  }
  for (double& p : spectrum) {
    if (p < -1e-10) {
      throw Error(ErrorKind::correlation_invalid,
                  "reduced state has a significantly negative eigenvalue");
    }
    p = std::max(p, 0.0);
  }
  return spectra::shannon_entropy(
      spectra::ProbabilitySpectrum::make(std::move(spectrum), true));
}

EntropyProfile entropy_profile(const XXZModel& model,
                               const GroundStateOptions& options) {
  const GroundStateResult ground = ground_state(model, options);

  EntropyProfile profile;
  char tag[96];
  std::snprintf(tag, sizeof(tag), "xxz delta=%.12g lambda=%.12g n=%d %s %s",
                model.delta, model.lambda, model.sites,
                model.sign == SignConvention::antiferro ? "antiferro" : "ferro",
                model.boundary == Boundary::periodic ? "periodic" : "open");
  profile.model = tag;
  profile.points.reserve(static_cast<std::size_t>(model.sites - 1));
  for (int L = 1; L < model.sites; ++L) {
    profile.points.push_back(ProfilePoint{L, block_entropy(ground.state, L)});
  }
  profile.validate();
  return profile;
}

QuantumState translate_state(const QuantumState& state, int shift) {
  state.require_normalized();
  const int n = state.sites;
  const int s = ((shift % n) + n) % n;
  if (s == 0) return state;

  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  QuantumState result;
  result.sites = n;
  result.amplitudes.resize(state.amplitudes.size());
  for (std::int64_t x = 0; x < state.amplitudes.size(); ++x) {
    const auto bits = static_cast<std::uint32_t>(x);
    const std::uint32_t rotated = ((bits << s) | (bits >> (n - s))) & mask;
    result.amplitudes(rotated) = state.amplitudes(x);
  }
  return result;
}

}  // namespace chainent::ed
