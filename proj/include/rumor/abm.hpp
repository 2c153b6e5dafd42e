#ifndef RUMOR_ABM_HPP
#define RUMOR_ABM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rumor/model.hpp"
#include "rumor/network.hpp"
#include "rumor/rng.hpp"

namespace rumor {

enum class NodeState : std::uint8_t {
    Ignorant = 0,
    Spreader1 = 1,
    Spreader2 = 2,
    Hesitant1 = 3,
    Stifler1 = 4,
    Stifler2 = 5,
};

inline constexpr int kNumStates = 6;

struct AbmOptions {
    double dt = 0.05;
    double t_max = 500.0;
    std::uint64_t seed = 1;
    int record_every = 4; // steps between samples
};

using StateCounts = std::array<std::int64_t, kNumStates>;

struct AbmSample {
    double t = 0.0;
    StateCounts counts{};
};

/// Result of one stochastic run: sampled counts, the time every active state
/// (Spreader1, Spreader2, Hesitant1) first hit zero (if it did), and the seed
/// that reproduces the run.
struct AbmResult {
    std::vector<AbmSample> samples;
    std::optional<double> extinction_time;
    std::uint64_t seed = 0;
    StateCounts final_counts{};
    std::int64_t peak_s1_count = 0; // tracked every step, not just at samples
};

/// Ensemble mean/std of counts on the shared sampling grid. Runs that ended
/// early contribute their final (absorbing) counts to later grid points.
struct EnsembleResult {
    std::vector<double> times;
    // indexed [state][grid point]
    std::array<std::vector<double>, kNumStates> mean;
    std::array<std::vector<double>, kNumStates> stddev;
    int n_runs = 0;
    // per-run summaries, indexed by run
    std::vector<std::int64_t> run_peak_s1;
    std::vector<StateCounts> run_final;
};

/// Throws ConfigError unless every per-step event probability implied by
/// (params, dt) is a valid probability.
void check_probability_bounds(const ModelParams& params, double dt);

/// One synchronous step: every node gathers its candidate transitions from
/// the frozen current states; if several fire, one is applied uniformly at
/// random. Returns the new states.
std::vector<NodeState> step(const Network& net, const std::vector<NodeState>& states,
                            const ModelParams& params, double dt, Rng& rng);

/// Full run from the standard two-seed start (one Spreader1, one Spreader2 at
/// distinct uniformly chosen nodes). Deterministic given (net, params, opts).
AbmResult run(const Network& net, const ModelParams& params, const AbmOptions& opts);

/// Independent runs i = 0..n_runs-1 with seed_i = opts.seed + i and a fresh
/// network per run; merged into per-time mean and (population) standard
/// deviation. Runs may execute in parallel; the merge is deterministic.
EnsembleResult ensemble(const ModelParams& params, std::uint32_t n, std::uint32_t k,
                        const AbmOptions& opts, int n_runs);

StateCounts count_states(const std::vector<NodeState>& states);

} // namespace rumor

#endif
