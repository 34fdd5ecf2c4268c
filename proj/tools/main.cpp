#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <chainent/ed.hpp>
#include <chainent/errors.hpp>
#include <chainent/scaling.hpp>
#include <chainent/spectra.hpp>
#include <chainent/xy.hpp>

namespace {

using namespace chainent;

// Fixed 12-significant-digit rendering: locale-free and reproducible byte for
// byte across runs.
std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 12);
  return std::string(buffer, result.ptr);
}

struct CommonOutput {
  std::string format = "csv";
  std::string path;
};

void add_output_flags(CLI::App* cmd, CommonOutput& output, bool with_format) {
  if (with_format) {
    cmd->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  cmd->add_option("--output", output.path,
                  "Write to this file instead of standard output");
}

void deliver(const CommonOutput& output, const std::string& text) {
  if (output.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output.path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::invalid_argument,
                "cannot open output file " + output.path);
  }
  file << text;
}

std::string profile_csv(const EntropyProfile& profile) {
  std::string text = "L,S_bits\n";
  for (const ProfilePoint& point : profile.points) {
    text += std::to_string(point.block_size);
    text += ',';
    text += format_double(point.entropy_bits);
    text += '\n';
  }
  return text;
}

std::string profile_points_json(const EntropyProfile& profile,
                                const std::string& indent) {
  std::string text = "[\n";
  for (std::size_t i = 0; i < profile.points.size(); ++i) {
    text += indent + "  {\"L\": " + std::to_string(profile.points[i].block_size) +
            ", \"S_bits\": " + format_double(profile.points[i].entropy_bits) +
            (i + 1 < profile.points.size() ? "},\n" : "}\n");
  }
  text += indent + "]";
  return text;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::dimension_mismatch:
      return 1;
    default:
      return 2;
  }
}

struct XYProfileArgs {
  double h = 0.0;
  double gamma = 0.0;
  int lmax = 0;
  double tol = xy::kDefaultQuadratureTol;
  CommonOutput output;
};

void run_xy_profile(const XYProfileArgs& args) {
  const xy::XYModel model(args.h, args.gamma);
  const EntropyProfile profile = xy::entropy_profile(model, args.lmax, args.tol);
  if (args.output.format == "csv") {
    deliver(args.output, profile_csv(profile));
    return;
  }
  std::string text = "{\n";
  text += "  \"command\": \"xy-profile\",\n";
  text += "  \"h\": " + format_double(args.h) + ",\n";
  text += "  \"gamma\": " + format_double(args.gamma) + ",\n";
  text += "  \"points\": " + profile_points_json(profile, "  ") + "\n";
  text += "}\n";
  deliver(args.output, text);
}

struct XYSurfaceArgs {
  double h_min = 0.0;
  double h_max = 0.0;
  int h_steps = 0;
  int lmax = 0;
  double tol = xy::kDefaultQuadratureTol;
  CommonOutput output;
};

void run_xy_surface(const XYSurfaceArgs& args) {
  if (args.h_steps < 1 || args.h_max < args.h_min) {
    throw Error(ErrorKind::invalid_argument,
                "surface grid needs h-steps >= 1 and h-max >= h-min");
  }
  std::vector<std::pair<double, EntropyProfile>> rows;
  for (int i = 0; i < args.h_steps; ++i) {
    const double h =
        args.h_steps == 1
            ? args.h_min
            : args.h_min + (args.h_max - args.h_min) * i / (args.h_steps - 1);
    rows.emplace_back(h, xy::entropy_profile(xy::XYModel(h, 1.0), args.lmax,
                                             args.tol));
  }

  if (args.output.format == "csv") {
    std::string text = "a,L,S_bits\n";
    for (const auto& [h, profile] : rows) {
      const std::string a = format_double(1.0 / h);
      for (const ProfilePoint& point : profile.points) {
        text += a + ',' + std::to_string(point.block_size) + ',' +
                format_double(point.entropy_bits) + '\n';
      }
    }
    deliver(args.output, text);
    return;
  }
  std::string text = "{\n  \"command\": \"xy-surface\",\n  \"rows\": [\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& [h, profile] = rows[r];
    for (std::size_t i = 0; i < profile.points.size(); ++i) {
      const bool last = r + 1 == rows.size() && i + 1 == profile.points.size();
      text += std::string("    {\"a\": ") + format_double(1.0 / h) +
              ", \"h\": " + format_double(h) +
              ", \"L\": " + std::to_string(profile.points[i].block_size) +
              ", \"S_bits\": " + format_double(profile.points[i].entropy_bits) +
              (last ? "}\n" : "},\n");
    }
  }
  text += "  ]\n}\n";
  deliver(args.output, text);
}

struct XYSpectrumArgs {
  double h = 0.0;
  double gamma = 0.0;
  int block = 0;
  std::int64_t top = 0;  // 0: full enumeration
  double tol = xy::kDefaultQuadratureTol;
  CommonOutput output;
};

void run_xy_spectrum(const XYSpectrumArgs& args) {
  const xy::XYModel model(args.h, args.gamma);
  if (args.block < 1) {
    throw Error(ErrorKind::invalid_argument, "block size --l must be positive");
  }
  if (args.top < 0) {
    throw Error(ErrorKind::invalid_argument, "--top must be positive");
  }
  const auto couplings = xy::coupling_coefficients(model, args.block - 1, args.tol);
  const auto modes =
      xy::mode_occupations(xy::block_correlation(couplings, args.block));
  const spectra::ProbabilitySpectrum spectrum =
      args.top > 0 ? spectra::reduced_spectrum_topk(modes, args.top)
                   : spectra::reduced_spectrum_full(modes);

  if (args.output.format == "csv") {
    std::string text = "rank,probability\n";
    for (std::size_t i = 0; i < spectrum.probabilities.size(); ++i) {
      text += std::to_string(i + 1) + ',' +
              format_double(spectrum.probabilities[i]) + '\n';
    }
    deliver(args.output, text);
    return;
  }
  std::string text = "{\n  \"command\": \"xy-spectrum\",\n";
  text += "  \"h\": " + format_double(args.h) + ",\n";
  text += "  \"gamma\": " + format_double(args.gamma) + ",\n";
  text += "  \"l\": " + std::to_string(args.block) + ",\n";
  text += std::string("  \"complete\": ") +
          (spectrum.complete ? "true" : "false") + ",\n";
  text += "  \"probabilities\": [\n";
  for (std::size_t i = 0; i < spectrum.probabilities.size(); ++i) {
    text += "    " + format_double(spectrum.probabilities[i]) +
            (i + 1 < spectrum.probabilities.size() ? ",\n" : "\n");
  }
  text += "  ]\n}\n";
  deliver(args.output, text);
}

struct XXZProfileArgs {
  double delta = 0.0;
  double lambda = 0.0;
  int sites = 0;
  std::string sign = "antiferro";
  std::string bc = "periodic";
  double tol = 1e-10;
  std::uint64_t seed = 1;
  CommonOutput output;
};

void run_xxz_profile(const XXZProfileArgs& args) {
  ed::SignConvention sign = ed::SignConvention::antiferro;
  if (args.sign == "ferro" || args.sign == "paper-ferro") {
    sign = ed::SignConvention::ferro;
  } else if (args.sign != "antiferro") {
    throw Error(ErrorKind::invalid_argument,
                "--sign must be antiferro, ferro or paper-ferro");
  }
  const ed::Boundary boundary =
      args.bc == "open" ? ed::Boundary::open : ed::Boundary::periodic;

  const ed::XXZModel model(args.delta, args.lambda, args.sites, sign, boundary);
  ed::GroundStateOptions options;
  options.tol = args.tol;
  options.seed = args.seed;

  const ed::GroundStateResult ground = ed::ground_state(model, options);
  EntropyProfile profile;
  profile.model = "xxz";
  for (int block = 1; block < model.sites; ++block) {
    profile.points.push_back(
        ProfilePoint{block, ed::block_entropy(ground.state, block)});
  }

  if (args.output.format == "csv") {
    deliver(args.output, profile_csv(profile));
    return;
  }
  std::string text = "{\n  \"command\": \"xxz-profile\",\n";
  text += "  \"delta\": " + format_double(args.delta) + ",\n";
  text += "  \"lambda\": " + format_double(args.lambda) + ",\n";
  text += "  \"n\": " + std::to_string(args.sites) + ",\n";
  text += "  \"sign\": \"" +
          std::string(sign == ed::SignConvention::antiferro ? "antiferro"
                                                            : "ferro") +
          "\",\n";
  text += "  \"bc\": \"" +
          std::string(boundary == ed::Boundary::periodic ? "periodic" : "open") +
          "\",\n";
  text += "  \"energy\": " + format_double(ground.energy) + ",\n";
  text += "  \"total_sz\": " + std::to_string(ground.total_sz) + ",\n";
  text += "  \"points\": " + profile_points_json(profile, "  ") + "\n}\n";
  deliver(args.output, text);
}

struct HalfchainArgs {
  double a = 0.0;
  CommonOutput output;
};

void run_halfchain(const HalfchainArgs& args) {
  if (!(args.a > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "--a must be positive");
  }
  const double value = xy::half_chain_entropy(xy::XYModel(1.0 / args.a, 1.0));
  deliver(args.output, format_double(value) + "\n");
}

struct FitArgs {
  std::string input;
  int lmin = 0;
  int lmax = 0;
  CommonOutput output;
};

EntropyProfile read_profile_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::invalid_argument, "cannot open input file " + path);
  }
  std::string line;
  if (!std::getline(file, line) || line != "L,S_bits") {
    throw Error(ErrorKind::invalid_argument,
                "input file must start with the header L,S_bits");
  }
  EntropyProfile profile;
  profile.model = path;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::invalid_argument, "malformed row: " + line);
    }
    int block = 0;
    double entropy = 0.0;
    const auto block_result =
        std::from_chars(line.data(), line.data() + comma, block);
    const auto entropy_result = std::from_chars(
        line.data() + comma + 1, line.data() + line.size(), entropy);
    if (block_result.ec != std::errc{} || block_result.ptr != line.data() + comma ||
        entropy_result.ec != std::errc{} ||
        entropy_result.ptr != line.data() + line.size()) {
      throw Error(ErrorKind::invalid_argument, "malformed row: " + line);
    }
    profile.points.push_back(ProfilePoint{block, entropy});
  }
  profile.validate();
  return profile;
}

void run_fit(const FitArgs& args) {
  const EntropyProfile profile = read_profile_csv(args.input);
  const scaling::ScalingFit fit =
      scaling::fit_central_charge(profile, {args.lmin, args.lmax});
  std::string text = "{\n";
  text += "  \"slope\": " + format_double(fit.slope) + ",\n";
  text += "  \"intercept\": " + format_double(fit.intercept) + ",\n";
  text +=
      "  \"central_charge_sum\": " + format_double(fit.central_charge_sum) +
      ",\n";
  text += "  \"rms_residual\": " + format_double(fit.rms_residual) + ",\n";
  text += "  \"l_min\": " + std::to_string(fit.window.l_min) + ",\n";
  text += "  \"l_max\": " + std::to_string(fit.window.l_max) + ",\n";
  text += "  \"points_used\": " + std::to_string(fit.points_used) + "\n";
  text += "}\n";
  deliver(args.output, text);
}

struct MajorizeArgs {
  double h = 0.0;
  double gamma = 0.0;
  int lmax = 0;
  double tol = spectra::kDefaultMajorizationTol;
  CommonOutput output;
};

void run_majorize(const MajorizeArgs& args) {
  const xy::XYModel model(args.h, args.gamma);
  if (args.lmax < 3) {
    throw Error(ErrorKind::invalid_argument,
                "majorize needs --lmax >= 3 to form an (L, L+2) pair");
  }
  const auto couplings = xy::coupling_coefficients(model, args.lmax - 1);

  std::string text = "[\n";
  for (int block = 1; block + 2 <= args.lmax; block += 2) {
    const auto coarse = spectra::reduced_spectrum_full(
        xy::mode_occupations(xy::block_correlation(couplings, block)));
    const auto fine = spectra::reduced_spectrum_full(
        xy::mode_occupations(xy::block_correlation(couplings, block + 2)));
    const auto report = spectra::majorization_compare(coarse, fine, args.tol);
    text += "  {\"l\": " + std::to_string(block) +
            ", \"l_next\": " + std::to_string(block + 2) +
            ", \"holds\": " + (report.holds ? "true" : "false") +
            ", \"max_violation\": " + format_double(report.max_violation) +
            ", \"worst_index\": " + std::to_string(report.worst_index) +
            (block + 4 <= args.lmax ? "},\n" : "}\n");
  }
  text += "]\n";
  deliver(args.output, text);
}

struct GammaShiftArgs {
  double gamma = 0.0;
  int lmax = 0;
  double tol = xy::kDefaultQuadratureTol;
  CommonOutput output;
};

void run_gamma_shift(const GammaShiftArgs& args) {
  deliver(args.output,
          format_double(scaling::gamma_subleading(args.gamma, args.lmax,
                                                  args.tol)) +
              "\n");
}

struct RankGrowthArgs {
  double h = 0.0;
  double gamma = 0.0;
  double epsilon = 0.0;
  int lmax = 0;
  double tol = xy::kDefaultQuadratureTol;
  CommonOutput output;
};

std::int64_t rank_at_block(const xy::ModeOccupations& modes, double epsilon) {
  if (modes.count() <= 24) {
    return spectra::effective_rank(spectra::reduced_spectrum_full(modes),
                                   epsilon);
  }
  // Larger blocks: grow a top-k prefix until its tail certifies the count.
  for (std::int64_t k = 1024; k <= (std::int64_t{1} << 24); k *= 2) {
    const auto prefix = spectra::reduced_spectrum_topk(modes, k);
    if (prefix.complete || prefix.probabilities.back() < epsilon) {
      return spectra::effective_rank(prefix, epsilon);
    }
  }
  throw Error(ErrorKind::uncertain_rank,
              "more than 2^24 eigenvalues sit above epsilon");
}

void run_rank_growth(const RankGrowthArgs& args) {
  const xy::XYModel model(args.h, args.gamma);
  if (!(args.epsilon > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "--epsilon must be positive");
  }
  const auto couplings =
      xy::coupling_coefficients(model, args.lmax - 1, args.tol);
  std::string text = "L,effective_rank\n";
  for (int block = 1; block <= args.lmax; ++block) {
    const auto modes =
        xy::mode_occupations(xy::block_correlation(couplings, block));
    text += std::to_string(block) + ',' +
            std::to_string(rank_at_block(modes, args.epsilon)) + '\n';
  }
  deliver(args.output, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block entanglement entropies of XY and XXZ spin chains"};
  // -h would shadow the --h flags below; keep only the long help name.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  XYProfileArgs xy_profile;
  CLI::App* cmd = app.add_subcommand(
      "xy-profile", "Entropy profile S_L of the infinite XY chain");
  cmd->add_option("--h", xy_profile.h, "Inverse coupling h = 1/a")->required();
  cmd->add_option("--gamma", xy_profile.gamma, "Anisotropy in [0,1]")->required();
  cmd->add_option("--lmax", xy_profile.lmax, "Largest block size")->required();
  cmd->add_option("--tol", xy_profile.tol, "Coupling quadrature tolerance");
  add_output_flags(cmd, xy_profile.output, true);
  cmd->callback([&] { run_xy_profile(xy_profile); });

  XYSurfaceArgs xy_surface;
  cmd = app.add_subcommand("xy-surface",
                           "Entropy surface over a transverse-field sweep");
  cmd->add_option("--h-min", xy_surface.h_min, "First field value")->required();
  cmd->add_option("--h-max", xy_surface.h_max, "Last field value")->required();
  cmd->add_option("--h-steps", xy_surface.h_steps, "Number of field values")
      ->required();
  cmd->add_option("--lmax", xy_surface.lmax, "Largest block size")->required();
  cmd->add_option("--tol", xy_surface.tol, "Coupling quadrature tolerance");
  add_output_flags(cmd, xy_surface.output, true);
  cmd->callback([&] { run_xy_surface(xy_surface); });

  XYSpectrumArgs xy_spectrum;
  cmd = app.add_subcommand("xy-spectrum",
                           "Reduced density-matrix spectrum of one block");
  cmd->add_option("--h", xy_spectrum.h, "Inverse coupling h = 1/a")->required();
  cmd->add_option("--gamma", xy_spectrum.gamma, "Anisotropy in [0,1]")
      ->required();
  cmd->add_option("--l", xy_spectrum.block, "Block size")->required();
  cmd->add_option("--top", xy_spectrum.top,
                  "Emit only the k largest eigenvalues");
  cmd->add_option("--tol", xy_spectrum.tol, "Coupling quadrature tolerance");
  add_output_flags(cmd, xy_spectrum.output, true);
  cmd->callback([&] { run_xy_spectrum(xy_spectrum); });

  HalfchainArgs halfchain;
  cmd = app.add_subcommand(
      "xy-halfchain", "Half-chain saturation estimate of the Ising chain");
  cmd->add_option("--a", halfchain.a, "Coupling a = 1/h")->required();
  add_output_flags(cmd, halfchain.output, false);
  cmd->callback([&] { run_halfchain(halfchain); });

  XXZProfileArgs xxz_profile;
  cmd = app.add_subcommand("xxz-profile",
                           "Entropy profile of a finite XXZ ring or chain");
  cmd->add_option("--delta", xxz_profile.delta, "zz coupling")->required();
  cmd->add_option("--lambda", xxz_profile.lambda, "Longitudinal field")
      ->required();
  cmd->add_option("--n", xxz_profile.sites, "Number of sites")->required();
  cmd->add_option("--sign", xxz_profile.sign,
                  "antiferro, ferro or paper-ferro");
  cmd->add_option("--bc", xxz_profile.bc, "periodic or open")
      ->check(CLI::IsMember({"periodic", "open"}));
  cmd->add_option("--tol", xxz_profile.tol, "Eigenpair residual tolerance");
  cmd->add_option("--seed", xxz_profile.seed, "Lanczos start-vector seed");
  add_output_flags(cmd, xxz_profile.output, true);
  cmd->callback([&] { run_xxz_profile(xxz_profile); });

  FitArgs fit;
  cmd = app.add_subcommand("fit", "Least-squares S vs log2 L scaling fit");
  cmd->add_option("--input", fit.input, "CSV file with header L,S_bits")
      ->required();
  cmd->add_option("--lmin", fit.lmin, "Smallest block in the window")
      ->required();
  cmd->add_option("--lmax", fit.lmax, "Largest block in the window")
      ->required();
  add_output_flags(cmd, fit.output, false);
  cmd->callback([&] { run_fit(fit); });

  MajorizeArgs majorize;
  cmd = app.add_subcommand("majorize",
                           "Majorization reports for (L, L+2) block pairs");
  cmd->add_option("--h", majorize.h, "Inverse coupling h = 1/a")->required();
  cmd->add_option("--gamma", majorize.gamma, "Anisotropy in [0,1]")->required();
  cmd->add_option("--lmax", majorize.lmax, "Largest block size")->required();
  cmd->add_option("--tol", majorize.tol, "Partial-sum slack");
  add_output_flags(cmd, majorize.output, false);
  cmd->callback([&] { run_majorize(majorize); });

  GammaShiftArgs gamma_shift;
  cmd = app.add_subcommand(
      "gamma-shift", "Entropy offset of the critical chain at anisotropy gamma");
  cmd->add_option("--gamma", gamma_shift.gamma, "Anisotropy in (0,1]")
      ->required();
  cmd->add_option("--lmax", gamma_shift.lmax, "Evaluation block size")
      ->required();
  cmd->add_option("--tol", gamma_shift.tol, "Coupling quadrature tolerance");
  add_output_flags(cmd, gamma_shift.output, false);
  cmd->callback([&] { run_gamma_shift(gamma_shift); });

  RankGrowthArgs rank_growth;
  cmd = app.add_subcommand("rank-growth",
                           "Count of reduced eigenvalues above a threshold");
  cmd->add_option("--h", rank_growth.h, "Inverse coupling h = 1/a")->required();
  cmd->add_option("--gamma", rank_growth.gamma, "Anisotropy in [0,1]")
      ->required();
  cmd->add_option("--epsilon", rank_growth.epsilon, "Counting threshold")
      ->required();
  cmd->add_option("--lmax", rank_growth.lmax, "Largest block size")->required();
  cmd->add_option("--tol", rank_growth.tol, "Coupling quadrature tolerance");
  add_output_flags(cmd, rank_growth.output, true);
  cmd->callback([&] { run_rank_growth(rank_growth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error_kind=invalid_argument " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error_kind=" << kind_name(e.kind()) << " " << e.what()
              << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error_kind=internal " << e.what() << "\n";
    return 2;
  }
  return 0;
}
