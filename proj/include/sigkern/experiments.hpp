#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigkern/measures.hpp"
#include "sigkern/path.hpp"

namespace sigkern {

struct ExperimentConfig {
    std::string kind;  // bm | cubature-sweep | sine | spike
    int n = 10;        // paths per trial
    int m = 10;        // vertices per path
    int d = 2;
    std::vector<double> epsilon_grid;
    double nu = 2.0;   // sine frequency
    std::vector<double> beta_m_grid;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string phi = "half-factorial";
    std::string method = "pde";  // pairwise kernel evaluation
    std::string cubature_file;   // cubature-sweep only

    void validate() const;
};

ExperimentConfig load_config(const std::string& json_file);

/// n i.i.d. Brownian sample paths on the uniform m-point grid over [0,1];
/// increments N(0, 1/(m-1)) per coordinate, first vertex at the origin.
std::vector<PiecewiseLinearPath> sample_brownian(int n, int m, int d, std::uint64_t seed);

/// Adds eps * sin(2 pi nu t - phase) per coordinate, phases uniform in
/// [0, 2 pi) under the seed.
std::vector<PiecewiseLinearPath> sine_contaminate(const std::vector<PiecewiseLinearPath>& paths,
                                                  double eps, double nu, std::uint64_t seed);

/// Adds eps * sqrt((t - U)^+) to every coordinate, one uniform onset U per path.
std::vector<PiecewiseLinearPath> spike_contaminate(const std::vector<PiecewiseLinearPath>& paths,
                                                   double eps, std::uint64_t seed);

/// Loads the cubature measure from its JSON asset and certifies it on load:
/// the squared MMD to Wiener measure under the weight truncated at level 6
/// must be at most 1e-18, otherwise the load is refused with the residual.
DiscreteMeasure load_cubature(const std::string& json_file);

/// Runs the configured experiment and returns the CSV report (also written
/// to out_file when nonempty).  Deterministic: same config, same bytes.
std::string run_experiment(const ExperimentConfig& config, const std::string& out_file = "");

}  // namespace sigkern
