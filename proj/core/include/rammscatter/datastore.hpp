#pragma once
// On-disk formats: far-field matrices as JSON, numeric result tables as CSV,
// and experiment configuration files.

#include <string>
#include <vector>

#include "rammscatter/farfield.hpp"
#include "rammscatter/potential.hpp"

namespace ramm {

void save_farfield(const FarField& ff, const std::string& path);
FarField load_farfield(const std::string& path);

// CSV with a header row, 17 significant digits, LF line endings
void emit_table(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows);
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
Table load_table(const std::string& path);

struct ExperimentConfig {
  Potential q = Potential::ball(1.0, 1.0);
  int L = 10;
  int grid_n = 48;
  double tol = 1e-8;
  double a1 = 0.0, b = 0.0;  // annulus; 0 = defaults (1.2a, 1.5a)
  int n_r = 12;
  double reg = 1e-10;
  std::vector<double> deltas;
  std::vector<Vec3> xis;
  double c_budget = 10.0;
  std::uint64_t seed = 1;
};

ExperimentConfig load_config(const std::string& path);

}  // namespace ramm
