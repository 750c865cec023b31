#include "cascade/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "cascade/code.hpp"
#include "cascade/engine.hpp"
#include "cascade/random.hpp"

namespace cascade {

EnsembleSummary run_ensemble(double f0, int m, std::uint64_t seed, int levels,
                             int workers, bool keep_samples) {
    if (m < 1) throw std::invalid_argument("run_ensemble: need at least one sample");
    if (levels < 0 || levels > 12)
        throw std::invalid_argument("run_ensemble: levels must lie in [0, 12]");

    struct Slot {
        FiveParamNoise noise;
        std::vector<double> F, D;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(m);
    std::atomic<int> cursor{0};

    const CodeSpec& code = five_qubit_code();  // force one-time init outside the pool
    auto work = [&] {
        for (;;) {
            int i = cursor.fetch_add(1);
            if (i >= m) return;
            Slot& slot = slots[i];
            try {
                SplitMix64 rng(seed, static_cast<std::uint64_t>(i));
                slot.noise = sample_at_fidelity(f0, rng);
                // target > 1 disables early stopping so every sample fills
                // all levels and the fold stays rectangular
                ConcatenationTrace tr = concatenate(general_noise(slot.noise), code, levels, 2.0);
                slot.F.reserve(tr.levels.size());
                slot.D.reserve(tr.levels.size());
                for (const auto& rec : tr.levels) {
                    slot.F.push_back(rec.F);
                    slot.D.push_back(rec.D);
                }
            } catch (...) {
                slot.error = std::current_exception();
            }
        }
    };

    int pool = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    pool = std::max(1, std::min(pool, m));
    if (pool == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (int t = 0; t < pool; ++t) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }

    for (int i = 0; i < m; ++i)
        if (slots[i].error) {
            try {
                std::rethrow_exception(slots[i].error);
            } catch (const std::exception& e) {
                throw std::runtime_error("sample " + std::to_string(i) + ": " + e.what());
            }
        }

    EnsembleSummary out;
    out.F0 = f0;
    out.M = m;
    out.seed = seed;
    out.levels = levels;
    out.D_max.assign(levels + 1, 0.0);
    out.F_min.assign(levels + 1, 1.0);
    for (const Slot& slot : slots)
        for (int l = 0; l <= levels; ++l) {
            out.D_max[l] = std::max(out.D_max[l], slot.D[l]);
            out.F_min[l] = std::min(out.F_min[l], slot.F[l]);
        }
    if (keep_samples) {
        out.samples.reserve(m);
        for (Slot& slot : slots)
            out.samples.push_back({slot.noise, std::move(slot.F), std::move(slot.D)});
    }
    return out;
}

}  // namespace cascade
