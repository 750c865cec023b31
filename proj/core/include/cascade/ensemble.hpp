#pragma once

#include <cstdint>
#include <vector>

#include "cascade/noise.hpp"

namespace cascade {

struct SampleRecord {
    FiveParamNoise noise;
    std::vector<double> F;  // per level, 0..levels
    std::vector<double> D;
};

struct EnsembleSummary {
    double F0 = 0.0;
    int M = 0;
    std::uint64_t seed = 0;
    int levels = 0;
    std::vector<double> D_max;  // entry l = max over samples of D_l
    std::vector<double> F_min;  // entry l = min over samples of F_l
    std::vector<SampleRecord> samples;  // retained only on request
};

// Draws M five-parameter channels at fidelity f0 (sample i uses the (seed, i)
// substream), runs each through `levels` rounds of the five-qubit code with
// early stopping disabled, and folds the per-level max distance and min
// fidelity. The fold runs serially in sample order after all workers join,
// so results are identical for any worker count. workers <= 0 means one
// thread per hardware core. A sampler failure is reported with its sample
// index.
EnsembleSummary run_ensemble(double f0, int m, std::uint64_t seed, int levels,
                             int workers = 0, bool keep_samples = false);

}  // namespace cascade
