// Acceptance suite: one line per criterion, measured values inline, nonzero
// exit if anything fails.  Tolerances are pinned here on purpose; do not
// loosen them to make a line turn green.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <chainent/ed.hpp>
#include <chainent/scaling.hpp>
#include <chainent/spectra.hpp>
#include <chainent/xy.hpp>

#include "oracles.hpp"

using namespace chainent;

namespace {

int g_passed = 0;
int g_failed = 0;
std::chrono::steady_clock::time_point g_criterion_start;

void begin_criterion() { g_criterion_start = std::chrono::steady_clock::now(); }

void report(int index, bool ok, const std::string& detail) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - g_criterion_start)
                           .count();
  std::printf("[%s] %2d. %s (%.1fs)\n", ok ? "PASS" : "FAIL", index,
              detail.c_str(), static_cast<double>(elapsed) / 1000.0);
  std::fflush(stdout);
  (ok ? g_passed : g_failed) += 1;
}

std::string num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

EntropyProfile xy_profile(double h, double gamma, int max_block) {
  return xy::entropy_profile(xy::XYModel(h, gamma), max_block);
}

spectra::ProbabilitySpectrum spectrum_at(const xy::XYModel& model, int block) {
  const auto couplings = xy::coupling_coefficients(model, block - 1);
  return spectra::reduced_spectrum_full(
      xy::mode_occupations(xy::block_correlation(couplings, block)));
}

std::int64_t certified_rank(const xy::XYModel& model, int block, double epsilon) {
  const auto couplings = xy::coupling_coefficients(model, block - 1);
  const auto modes =
      xy::mode_occupations(xy::block_correlation(couplings, block));
  if (modes.count() <= 24) {
    return spectra::effective_rank(spectra::reduced_spectrum_full(modes),
                                   epsilon);
  }
  for (std::int64_t k = 1024; k <= (std::int64_t{1} << 24); k *= 2) {
    const auto prefix = spectra::reduced_spectrum_topk(modes, k);
    if (prefix.complete || prefix.probabilities.back() < epsilon) {
      return spectra::effective_rank(prefix, epsilon);
    }
  }
  throw Error(ErrorKind::uncertain_rank, "rank exceeds the 2^24 search cap");
}

// Hermiticity and trace are checked on the explicit matrix for every L; the
// eigenvalue check runs explicitly up to 2^8 and through the (identical)
// nonzero Gram spectrum beyond that, where the explicit solve would dominate
// the suite's runtime.
bool density_matrix_invariants(const ed::QuantumState& state, int sites,
                               std::string& why) {
  for (int block = 1; block < sites; ++block) {
    const auto rho = ed::reduced_density_matrix(state, block);
    const double asymmetry =
        (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-12) {
      why = "L=" + std::to_string(block) + " hermiticity off by " + num(asymmetry);
      return false;
    }
    const double trace_error =
        std::abs(rho.entries.trace() - std::complex<double>(1.0));
    if (trace_error > 1e-10) {
      why = "L=" + std::to_string(block) + " trace off by " + num(trace_error);
      return false;
    }
    if (block <= 8) {
      rho.validate();
    }
    (void)ed::block_entropy(state, block);  // throws if any eigenvalue < -1e-10
  }
  return true;
}

void criterion_1_ising_fit() {
  begin_criterion();
  try {
    const auto profile = xy_profile(1.0, 1.0, 100);
    const auto fit = scaling::fit_central_charge(profile, {20, 100});
    const bool charge_ok = std::abs(fit.central_charge_sum - 1.0) <= 0.05;
    const bool intercept_ok = std::abs(fit.intercept - 1.05) <= 0.10;
    report(1, charge_ok && intercept_ok,
           "critical Ising fit, L in [20,100]: c+cbar = " +
               num(fit.central_charge_sum) + " (want 1.00 +- 0.05), intercept = " +
               num(fit.intercept) + " (want 1.05 +- 0.10)");
  } catch (const std::exception& e) {
    report(1, false, std::string("critical Ising fit raised: ") + e.what());
  }
}

void criterion_2_xx_fit() {
  begin_criterion();
  try {
    const auto profile = xy_profile(0.0, 0.0, 100);
    const auto fit = scaling::fit_central_charge(profile, {20, 100});
    report(2, std::abs(fit.central_charge_sum - 2.0) <= 0.1,
           "XX fit, L in [20,100]: c+cbar = " + num(fit.central_charge_sum) +
               " (want 2.0 +- 0.1), intercept = " + num(fit.intercept));
  } catch (const std::exception& e) {
    report(2, false, std::string("XX fit raised: ") + e.what());
  }
}

void criterion_3_increment_ratio() {
  begin_criterion();
  try {
    const auto xx = xy_profile(0.0, 0.0, 100);
    const auto ising = xy_profile(1.0, 1.0, 100);
    const double ratio = scaling::increment_ratio(xx, ising, {50, 100});
    report(3, std::abs(ratio - 2.0) <= 0.1,
           "XX / Ising increment ratio, L in [50,100]: " + num(ratio) +
               " (want 2.0 +- 0.1)");
  } catch (const std::exception& e) {
    report(3, false, std::string("increment ratio raised: ") + e.what());
  }
}

void criterion_4_marginal_deformation() {
  begin_criterion();
  try {
    const auto profile = xy_profile(1.0, 0.5, 100);
    const auto fit = scaling::fit_central_charge(profile, {20, 100});
    const double shift_half = scaling::gamma_subleading(0.5, 100);
    const double shift_quarter = scaling::gamma_subleading(0.25, 100);
    const bool ok = std::abs(fit.central_charge_sum - 1.0) <= 0.1 &&
                    std::abs(shift_half - 1.0 / 6.0) <= 0.02 &&
                    std::abs(shift_quarter - 1.0 / 3.0) <= 0.03;
    report(4, ok,
           "gamma deformation at h = 1: c+cbar = " + num(fit.central_charge_sum) +
               " (want 1.0 +- 0.1), shift(0.5) = " + num(shift_half) +
               " (want 1/6 +- 0.02), shift(0.25) = " + num(shift_quarter) +
               " (want 1/3 +- 0.03)");
  } catch (const std::exception& e) {
    report(4, false, std::string("gamma deformation raised: ") + e.what());
  }
}

void criterion_5_saturation() {
  begin_criterion();
  try {
    const auto gapped = xy_profile(1.0 / 1.05, 1.0, 200);
    const auto saturation = scaling::saturation_analysis(gapped, 1e-4, 0.01);
    const auto critical = xy_profile(1.0, 1.0, 200);
    const bool critical_open =
        !scaling::saturation_analysis(critical, 1e-4, 0.01).converged;
    const bool ok = saturation.converged &&
                    std::abs(saturation.s_max - 0.72) <= 0.15 && critical_open;
    report(5, ok,
           std::string("saturation at a = 1.05, L <= 200: converged = ") +
               (saturation.converged ? "yes" : "no") + ", S_max = " +
               num(saturation.s_max) + " (want 0.72 +- 0.15), a = 1 stays open = " +
               (critical_open ? "yes" : "no"));
  } catch (const std::exception& e) {
    report(5, false, std::string("saturation raised: ") + e.what());
  }
}

void criterion_6_majorization() {
  begin_criterion();
  try {
    double worst = 0.0;
    bool holds = true;
    for (const xy::XYModel model : {xy::XYModel(1.0, 1.0), xy::XYModel(0.0, 0.0)}) {
      for (int block = 1; block <= 17; block += 2) {
        const auto coarse = spectrum_at(model, block);
        const auto fine = spectrum_at(model, block + 2);
        const auto result = spectra::majorization_compare(coarse, fine, 1e-10);
        holds = holds && result.holds;
        worst = std::max(worst, result.max_violation);
      }
    }
    report(6, holds,
           "majorization lambda_{L+2} < lambda_L, L in {1,3,...,17}, both "
           "conformal points: worst excess = " +
               num(worst) + " (tolerance 1e-10)");
  } catch (const std::exception& e) {
    report(6, false, std::string("majorization raised: ") + e.what());
  }
}

void criterion_7_ed_oracle() {
  begin_criterion();
  try {
    double worst_energy = 0.0;
    std::string why;
    bool ok = true;
    for (const int sites : {8, 10, 12}) {
      for (const double delta : {-0.5, 0.0, 1.0}) {
        for (const double lambda : {0.2, 0.6, 1.1}) {
          const ed::XXZModel model(delta, lambda, sites);
          const auto ground = ed::ground_state(model, {});
          const auto dense = sites <= 10 ? testoracle::dense_ground(model)
                                         : testoracle::sector_dense_ground(model);
          worst_energy =
              std::max(worst_energy, std::abs(ground.energy - dense.energy));
          if (!density_matrix_invariants(ground.state, sites, why)) {
            ok = false;
            why = "N=" + std::to_string(sites) + " delta=" + num(delta) +
                  " lambda=" + num(lambda) + ": " + why;
          }
        }
      }
    }
    ok = ok && worst_energy <= 1e-10;
    report(7, ok,
           "Lanczos vs dense on the 3x3 grid, N in {8,10,12}: worst energy "
           "gap = " +
               num(worst_energy) + " (tolerance 1e-10)" +
               (why.empty() ? "" : "; " + why));
  } catch (const std::exception& e) {
    report(7, false, std::string("ED oracle grid raised: ") + e.what());
  }
}

void criterion_8_xxx_ring() {
  begin_criterion();
  try {
    const ed::XXZModel model(1.0, 0.0, 20);
    const auto ground = ed::ground_state(model, {});
    std::vector<double> entropy(21, 0.0);
    for (int block = 1; block <= 19; ++block) {
      entropy[static_cast<std::size_t>(block)] =
          ed::block_entropy(ground.state, block);
    }

    auto ratio = [&](int block) {
      return (entropy[static_cast<std::size_t>(block)] -
              entropy[static_cast<std::size_t>(block - 1)]) /
             (std::log2(static_cast<double>(block) / (block - 1)) / 3.0);
    };

    bool rising = true;
    for (int block = 2; block <= 5; ++block) {
      rising = rising && ratio(block) >= 0.7 && ratio(block) <= 1.3;
    }
    bool turnover = true;
    for (int block = 7; block <= 10; ++block) {
      turnover = turnover && ratio(block) < ratio(block - 1);
    }
    turnover = turnover && ratio(10) < 0.5;

    double mirror = 0.0;
    for (int block = 1; block <= 9; ++block) {
      mirror = std::max(mirror,
                        std::abs(entropy[static_cast<std::size_t>(block)] -
                                 entropy[static_cast<std::size_t>(20 - block)]));
    }

    bool ferro_degenerate = false;
    try {
      ed::ground_state(ed::XXZModel(1.0, 0.0, 20, ed::SignConvention::ferro), {});
    } catch (const Error& e) {
      ferro_degenerate = e.kind() == ErrorKind::degenerate_ground_state;
    }

    const bool ok = rising && turnover && mirror <= 1e-10 && ferro_degenerate;
    report(8, ok,
           "XXX ring N = 20: slope-1/3 increments L<=5 " +
               std::string(rising ? "ok" : "BAD") + " (r2..r5 = " + num(ratio(2)) +
               ", " + num(ratio(3)) + ", " + num(ratio(4)) + ", " + num(ratio(5)) +
               "), turnover by L = 6..10 " + (turnover ? "ok" : "BAD") +
               ", mirror max " + num(mirror) + ", ferro degeneracy " +
               (ferro_degenerate ? "reported" : "MISSING"));
  } catch (const std::exception& e) {
    report(8, false, std::string("XXX ring raised: ") + e.what());
  }
}

void criterion_9_internal_consistency() {
  begin_criterion();
  try {
    const xy::XYModel models[] = {xy::XYModel(1.0, 1.0), xy::XYModel(0.0, 0.0),
                                  xy::XYModel(1.0, 0.5),
                                  xy::XYModel(1.0 / 1.05, 1.0),
                                  xy::XYModel(0.5, 0.0)};
    double worst = 0.0;
    for (const auto& model : models) {
      const auto couplings = xy::coupling_coefficients(model, 19);
      for (int block = 1; block <= 20; ++block) {
        const auto modes =
            xy::mode_occupations(xy::block_correlation(couplings, block));
        const double from_modes = xy::block_entropy(modes);
        const double from_spectrum =
            spectra::shannon_entropy(spectra::reduced_spectrum_full(modes));
        worst = std::max(worst, std::abs(from_modes - from_spectrum));
      }
    }
    report(9, worst <= 1e-10,
           "mode-sum vs full-spectrum entropy, 5 models, L <= 20: worst gap = " +
               num(worst) + " (tolerance 1e-10)");
  } catch (const std::exception& e) {
    report(9, false, std::string("consistency check raised: ") + e.what());
  }
}

void criterion_10_rank_growth() {
  begin_criterion();
  try {
    const std::int64_t critical_small =
        certified_rank(xy::XYModel(1.0, 1.0), 10, 1e-6);
    const std::int64_t critical_large =
        certified_rank(xy::XYModel(1.0, 1.0), 40, 1e-6);
    const std::int64_t gapped_small =
        certified_rank(xy::XYModel(1.0 / 1.2, 1.0), 10, 1e-6);
    const std::int64_t gapped_large =
        certified_rank(xy::XYModel(1.0 / 1.2, 1.0), 40, 1e-6);
    const bool ok =
        critical_large > critical_small && gapped_large == gapped_small;
    report(10, ok,
           "effective rank at 1e-6: critical L=10 -> " +
               std::to_string(critical_small) + ", L=40 -> " +
               std::to_string(critical_large) + " (must grow); a=1.2 L=10 -> " +
               std::to_string(gapped_small) + ", L=40 -> " +
               std::to_string(gapped_large) + " (must match)");
  } catch (const std::exception& e) {
    report(10, false, std::string("rank growth raised: ") + e.what());
  }
}

void criterion_11_quadrature_oracles() {
  begin_criterion();
  try {
    double worst = 0.0;
    for (const xy::XYModel model :
         {xy::XYModel(1.0, 1.0), xy::XYModel(0.0, 0.0), xy::XYModel(0.5, 0.0),
          xy::XYModel(1.5, 0.0)}) {
      const auto exact = xy::coupling_coefficients(model, 100);
      const auto quad = xy::coupling_coefficients_quadrature(model, 100);
      for (int lag = -100; lag <= 100; ++lag) {
        worst = std::max(worst, std::abs(quad.g(lag) - exact.g(lag)));
      }
    }
    report(11, worst <= 1e-9,
           "quadrature vs closed-form couplings, |l| <= 100, four models: "
           "worst gap = " +
               num(worst) + " (tolerance 1e-9)");
  } catch (const std::exception& e) {
    report(11, false, std::string("quadrature oracle raised: ") + e.what());
  }
}

}  // namespace

int main() {
  std::printf("block entanglement acceptance suite\n");
  criterion_1_ising_fit();
  criterion_2_xx_fit();
  criterion_3_increment_ratio();
  criterion_4_marginal_deformation();
  criterion_5_saturation();
  criterion_6_majorization();
  criterion_7_ed_oracle();
  criterion_8_xxx_ring();
  criterion_9_internal_consistency();
  criterion_10_rank_growth();
  criterion_11_quadrature_oracles();
  std::printf("%d passed, %d failed\n", g_passed, g_failed);
  return g_failed == 0 ? 0 : 1;
}
