#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapspec/dirac/potential.hpp"
#include "gapspec/hom/meanvalue.hpp"

namespace gapspec {

// Batch experiment description, read from a single JSON file. Everything that
// influences results lives here (and is echoed into the run manifest); there
// is no environment-variable configuration.
struct ExperimentConfig {
  std::string kind; // validate | spectrum | sweep | evolve | counterexample
  std::string out = "results";
  std::uint64_t seed = 12345;
  int threads = 1;

  double grid_L = 15.0;
  std::size_t grid_n = 2048;
  bool shifted = true;

  PotentialSpec potential;

  std::vector<int> h_list{2, 4, 8, 16, 32};
  std::vector<double> shifts{0.5, 1.0, 2.0};
  std::size_t k_max = 4;
  double delta_edge = 0.05;

  double tol_eig = 1e-10;
  double tol_solver = 1e-12;
  double trend_abs = 1e-6;
  double trend_rel = 1e-3;

  // evolution
  double evo_dt = 0.01;
  double evo_T = 1.0;
  double u0_center = 0.0;
  double u0_sigma = 1.0;
  std::string evo_operator = "full"; // full | point | cplus

  // SRS probes (Gaussian bumps on the grid)
  struct ProbeSpec {
    double center = 0.0;
    double sigma = 1.0;
  };
  std::vector<ProbeSpec> probes{{0.0, 0.8}, {1.5, 0.6}, {-2.0, 1.0},
                                {0.7, 1.4}, {-0.9, 0.5}};

  // weak* study
  std::vector<int> weak_star_h{4, 8, 16, 32, 64, 128};
  BumpFunction weak_star_phi{0.0, 1.0 / 3.0, 1.0 / 3.0};

  // counterexample
  std::vector<int> wells_h{20, 30, 40};
  double wells_length = 64.0;
  double wells_dx = 0.002;
  double wells_shift = 1.0;
};

// Parses and validates; throws config_error with a field-path message
// ("potential.v2.cos[1]" style) on any violation.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

// Resolved config as a JSON string (the manifest echo).
std::string config_to_json(const ExperimentConfig& cfg);

extern const char* const kGapspecVersion;

} // namespace gapspec
