#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include <chainent/ed.hpp>
#include <chainent/xy.hpp>

// Slow reference implementations used only to cross-check the library.  They
// deliberately avoid the production code paths: eigenproblems go through
// LAPACK directly, density matrices come from explicit partial-trace loops,
// and Hamiltonians are rebuilt element by element.
namespace testoracle {

// Eigenvalues of an n x n Hermitian matrix (column-major), ascending.
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a,
                                          int n);

// Mode occupations extracted from i * B, descending.
std::vector<double> mode_occupations(const chainent::xy::BlockCorrelationMatrix& b);

// Full dense Hamiltonian over all 2^sites basis states.
Eigen::MatrixXd dense_hamiltonian(const chainent::ed::XXZModel& model);

struct DenseGround {
  double energy = 0.0;
  double gap = 0.0;  // distance to the next level across the whole spectrum
  Eigen::VectorXcd state;
};

// Ground data from one dense solve of the full 2^sites matrix (sites <= 10).
DenseGround dense_ground(const chainent::ed::XXZModel& model);

// Ground data from dense solves of every total-sz sector (sites <= 14).
DenseGround sector_dense_ground(const chainent::ed::XXZModel& model);

// Explicit partial trace over sites block..sites-1 (keeps the low bits).
Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd& amplitudes, int sites,
                               int block);

// Block entropy in bits from the explicit partial trace.
double block_entropy(const Eigen::VectorXcd& amplitudes, int sites, int block);

// Uniform-grid evaluation of the coupling integral; exponentially accurate
// for analytic symbols (gamma > 0, h != 1).
double trapezoid_coupling(double h, double gamma, int lag, int points);

}  // namespace testoracle
