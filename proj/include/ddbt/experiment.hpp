#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "ddbt/data.hpp"

namespace ddbt {

enum class NoiseNormalization {
    Energy,     // entries N(0, σ²/L): total noise energy per channel ≈ σ²
    PerSample,  // entries N(0, σ²); Φ11 is rescaled when no draw validates
};

struct ExperimentConfig {
    // "builtin:cart_double_pendulum" or CSV paths for A, B, C, D.
    std::string system = "builtin:cart_double_pendulum";
    std::string pathA, pathB, pathC, pathD;
    Index L = 200;
    std::string inputType = "paper";
    std::string inputPath;
    double sigma = 0.01;
    double phiScale = 1.35;
    // σ used in Φ11 is max(σ, sigmaFloor) so that noise-free runs keep Φ11 ≻ 0.
    double sigmaFloor = 1e-4;
    NoiseNormalization normalization = NoiseNormalization::Energy;
    int maxRedraws = 1000;
    std::uint64_t seed = 1;
    Index orderR = 3;
};

struct Experiment {
    StateSpaceModel truth;
    Vector x0;
    Matrix u, w, z;
    TrajectoryData traj;
    NoiseModel noise;
    int redraws = 0;           // rejected noise draws before the retained one
    double phiRescale = 1.0;   // factor applied to Φ11 (1 when a draw validated)
};

namespace experiment {

StateSpaceModel loadSystem(const ExperimentConfig& cfg);
Matrix loadInput(const ExperimentConfig& cfg, Index m);
// Deterministic in cfg.seed: draws x0 ~ N(0, I) then noise, redrawing until
// the noise satisfies the declared model.
Experiment generate(const ExperimentConfig& cfg);

// Seed for the i-th member of a sweep.
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace experiment
}  // namespace ddbt
