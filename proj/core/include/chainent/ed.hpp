#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>

#include "chainent/errors.hpp"
#include "chainent/profile.hpp"

namespace chainent::ed {

// Overall sign of the Hamiltonian sum.  `antiferro` is
//   H = +sum_l ( sx sx + sy sy + delta sz sz + lambda sz ),
// whose Heisenberg point delta = 1, lambda = 0 has a unique entangled
// singlet ground state on even rings.  `ferro` flips the overall sign; its
// delta = 1, lambda = 0 ground level is a degenerate ferromagnetic multiplet,
// which ground_state reports as an error.
enum class SignConvention { antiferro, ferro };

enum class Boundary { periodic, open };

// Finite XXZ chain in a longitudinal field:
//   H = s * sum_l ( sx_l sx_{l+1} + sy_l sy_{l+1}
//                   + delta sz_l sz_{l+1} + lambda sz_l )
// with s = +1 (antiferro) or s = -1 (ferro).  Periodic chains close the bond
// from site N-1 back to site 0; open chains drop that bond but keep every
// field term.
struct XXZModel {
  double delta = 0.0;
  double lambda = 0.0;
  int sites = 0;
  SignConvention sign = SignConvention::antiferro;
  Boundary boundary = Boundary::periodic;

  // Throws invalid_argument unless 2 <= sites <= 24 and the couplings are
  // finite.
  XXZModel(double delta, double lambda, int sites,
           SignConvention sign = SignConvention::antiferro,
           Boundary boundary = Boundary::periodic);

  int bond_count() const;
  double sign_factor() const;  // +1 antiferro, -1 ferro
};

// Pure state of `sites` spins.  Basis index bit l encodes site l, and bit
// value 0 is the sz = +1 state of that spin.
struct QuantumState {
  int sites = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const;

  // Throws invalid_argument unless the norm is 1 within 1e-12.
  void require_normalized() const;
};

// Explicit reduced density matrix of the block of sites 0..block_size-1.
struct ReducedDensityMatrix {
  int block_size = 0;
  Eigen::MatrixXcd entries;

  // Checks Hermiticity within 1e-12, trace 1 within 1e-10 and eigenvalue
  // nonnegativity within -1e-10; throws correlation_invalid on violation.
  void validate() const;
};

struct GroundStateOptions {
  double tol = 1e-10;  // guaranteed residual norm of the returned eigenpair
  int max_iterations = 500;
  std::uint64_t seed = 1;  // start-vector seed, mixed per sector
};

struct GroundStateResult {
  double energy = 0.0;
  QuantumState state;
  int total_sz = 0;    // winning sector: sum over sites of sz = +-1
  int iterations = 0;  // Lanczos steps spent in the winning sector
};

// Energy ties between sectors closer than this raise degenerate_ground_state.
inline constexpr double kDegeneracyTol = 1e-10;

// H |psi>, unnormalized, matrix-free over the full 2^sites space.
QuantumState apply_hamiltonian(const XXZModel& model, const QuantumState& state);

// Global ground state.  Total sz is conserved, so a Lanczos iteration (full
// reorthogonalization, deterministic seeded start vector) runs per sector,
// visiting sectors by increasing |total sz| and pruning those whose diagonal
// lower bound cannot beat the current best.  The returned eigenpair satisfies
// ||H psi - E psi|| <= options.tol.  Throws non_convergence if a sector
// exhausts max_iterations and degenerate_ground_state if two sectors tie for
// the minimum within kDegeneracyTol (ties inside one sector are not
// detectable by this scan; see ground_state_in_sector).
GroundStateResult ground_state(const XXZModel& model,
                               const GroundStateOptions& options = {});

// Ground state restricted to one total-sz sector; the escape hatch for models
// whose global ground level is degenerate across sectors.
GroundStateResult ground_state_in_sector(const XXZModel& model, int total_sz,
                                         const GroundStateOptions& options = {});

// rho_L of the block sites 0..block_size-1: the Gram matrix of the
// 2^L x 2^(N-L) reshaping of the amplitudes.
ReducedDensityMatrix reduced_density_matrix(const QuantumState& state,
                                            int block_size);

// Block entropy in bits, computed from the smaller side of the bipartition
// (both sides share the nonzero spectrum).
double block_entropy(const QuantumState& state, int block_size);

// S_L for L = 1..sites-1 from the model's ground state.
EntropyProfile entropy_profile(const XXZModel& model,
                               const GroundStateOptions& options = {});

// Cyclic site relabeling l -> (l + shift) mod sites.  On rings, contiguous
// block entropies are invariant under it.
QuantumState translate_state(const QuantumState& state, int shift);

}  // namespace chainent::ed
