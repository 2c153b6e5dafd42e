#include "rumor/abm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "rumor/errors.hpp"

namespace rumor {

void check_probability_bounds(const ModelParams& params, double dt) {
    if (!(dt > 0.0)) throw ConfigError("abm dt must be > 0");
    // Contact events fire with probability dt (outcome split among rates),
    // spontaneous events with rate*dt; every product must stay a probability.
    const double worst[] = {dt,
                            params.beta1 * dt,
                            params.beta2 * dt,
                            params.alpha * dt,
                            params.gamma1 * dt,
                            params.gamma2 * dt,
                            params.theta1 * dt,
                            params.theta2 * dt,
                            params.omega * dt};
    for (double p : worst) {
        if (!(p <= 1.0)) {
            std::ostringstream os;
            os << "dt = " << dt << " makes a per-step event probability " << p
               << " exceed 1; reduce dt";
            throw ConfigError(os.str());
        }
    }
}

namespace {

// Uniform choice among accepted proposals, processed as a reservoir so no
// per-node buffer is needed.
struct ProposalPick {
    NodeState chosen = NodeState::Ignorant;
    std::uint32_t accepted = 0;

    void offer(NodeState s, Rng& rng) {
        ++accepted;
        if (accepted == 1 || rng.below(accepted) == 0) chosen = s;
    }
};

struct StepRates {
    double contact;      // dt: an ignorant-spreader contact happens
    double believe1;     // dt * (1-f) * lambda1
    double believe1_or_hesitate; // dt * ((1-f)*lambda1 + f*eta)
    double believe2;     // dt * lambda2
    double bored1;
    double bored2;
    double confront;
    double forget1;
    double forget2;
    double wake1;
    double wake2;
    double drift;
};

StepRates make_rates(const ModelParams& p, double f, double dt) {
    StepRates r;
    const double believe = (1.0 - f) * p.lambda1;
    const double hesitate = f * p.eta;
    r.contact = dt;
    r.believe1 = believe * dt;
    r.believe1_or_hesitate = (believe + hesitate) * dt;
    r.believe2 = p.lambda2 * dt;
    r.bored1 = p.beta1 * dt;
    r.bored2 = p.beta2 * dt;
    r.confront = p.alpha * dt;
    r.forget1 = p.gamma1 * dt;
    r.forget2 = p.gamma2 * dt;
    r.wake1 = p.theta1 * dt;
    r.wake2 = p.theta2 * dt;
    r.drift = p.omega * dt;
    return r;
}

void step_into(const Network& net, const std::vector<NodeState>& cur,
               std::vector<NodeState>& next, const StepRates& r, Rng& rng) {
    const std::uint32_t n = net.n;
    next.resize(cur.size());
    for (std::uint32_t v = 0; v < n; ++v) {
        const NodeState s = cur[v];
        ProposalPick pick;
        switch (s) {
        case NodeState::Ignorant:
            for (std::uint32_t u : net.neighbors(v)) {
                const NodeState t = cur[u];
                if (t == NodeState::Spreader1) {
                    const double x = rng.uniform();
                    if (x < r.believe1) {
                        pick.offer(NodeState::Spreader1, rng);
                    } else if (x < r.believe1_or_hesitate) {
                        pick.offer(NodeState::Hesitant1, rng);
                    } else if (x < r.contact) {
                        pick.offer(NodeState::Stifler1, rng);
                    }
                } else if (t == NodeState::Spreader2) {
                    const double x = rng.uniform();
                    if (x < r.believe2) {
                        pick.offer(NodeState::Spreader2, rng);
                    } else if (x < r.contact) {
                        pick.offer(NodeState::Stifler2, rng);
                    }
                }
            }
            break;
        case NodeState::Spreader1:
            for (std::uint32_t u : net.neighbors(v)) {
                const NodeState t = cur[u];
                if (t == NodeState::Spreader1 || t == NodeState::Stifler1 ||
                    t == NodeState::Hesitant1) {
                    if (r.bored1 > 0.0 && rng.uniform() < r.bored1) {
                        pick.offer(NodeState::Stifler1, rng);
                    }
                } else if (t == NodeState::Spreader2) {
                    if (r.confront > 0.0 && rng.uniform() < r.confront) {
                        pick.offer(NodeState::Stifler2, rng);
                    }
                }
            }
            if (r.forget1 > 0.0 && rng.uniform() < r.forget1) {
                pick.offer(NodeState::Stifler1, rng);
            }
            break;
        case NodeState::Spreader2:
            for (std::uint32_t u : net.neighbors(v)) {
                const NodeState t = cur[u];
                if (t == NodeState::Spreader2 || t == NodeState::Stifler2) {
                    if (r.bored2 > 0.0 && rng.uniform() < r.bored2) {
                        pick.offer(NodeState::Stifler2, rng);
                    }
                }
            }
            if (r.forget2 > 0.0 && rng.uniform() < r.forget2) {
                pick.offer(NodeState::Stifler2, rng);
            }
            break;
        case NodeState::Hesitant1:
            if (r.wake1 > 0.0 && rng.uniform() < r.wake1) {
                pick.offer(NodeState::Spreader1, rng);
            }
            if (r.wake2 > 0.0 && rng.uniform() < r.wake2) {
                pick.offer(NodeState::Spreader2, rng);
            }
            break;
        case NodeState::Stifler1:
            if (r.drift > 0.0 && rng.uniform() < r.drift) {
                pick.offer(NodeState::Stifler2, rng);
            }
            break;
        case NodeState::Stifler2:
            break; // absorbing
        }
        next[v] = pick.accepted > 0 ? pick.chosen : s;
    }
}

} // namespace

StateCounts count_states(const std::vector<NodeState>& states) {
    StateCounts c{};
    for (NodeState s : states) ++c[static_cast<int>(s)];
    return c;
}

std::vector<NodeState> step(const Network& net, const std::vector<NodeState>& states,
                            const ModelParams& params, double dt, Rng& rng) {
    validate_or_throw(params);
    check_probability_bounds(params, dt);
    if (states.size() != net.n) {
        throw ConfigError("state vector size does not match the network");
    }
    const StepRates r = make_rates(params, discernibility(params), dt);
    std::vector<NodeState> next;
    step_into(net, states, next, r, rng);
    return next;
}

AbmResult run(const Network& net, const ModelParams& params, const AbmOptions& opts) {
    validate_or_throw(params);
    check_probability_bounds(params, opts.dt);
    if (!(opts.t_max > 0.0)) throw ConfigError("abm t_max must be > 0");
    if (opts.record_every < 1) throw ConfigError("record_every must be >= 1");
    if (net.n < 2) throw ConfigError("abm needs at least 2 nodes");

    const StepRates rates = make_rates(params, discernibility(params), opts.dt);
    Rng rng(opts.seed);

    std::vector<NodeState> cur(net.n, NodeState::Ignorant);
    const std::uint32_t seed1 = static_cast<std::uint32_t>(rng.below(net.n));
    std::uint32_t seed2 = static_cast<std::uint32_t>(rng.below(net.n - 1));
    if (seed2 >= seed1) ++seed2; // distinct uniform pair
    cur[seed1] = NodeState::Spreader1;
    cur[seed2] = NodeState::Spreader2;

    AbmResult res;
    res.seed = opts.seed;
    StateCounts counts = count_states(cur);
    res.samples.push_back({0.0, counts});
    res.peak_s1_count = counts[static_cast<int>(NodeState::Spreader1)];

    std::vector<NodeState> next;
    const long n_steps = static_cast<long>(std::floor(opts.t_max / opts.dt + 1e-9));
    double t = 0.0;
    for (long n = 1; n <= n_steps; ++n) {
        step_into(net, cur, next, rates, rng);
        cur.swap(next);
        t = static_cast<double>(n) * opts.dt;
        counts = count_states(cur);
        res.peak_s1_count =
            std::max(res.peak_s1_count, counts[static_cast<int>(NodeState::Spreader1)]);
        const bool recorded = (n % opts.record_every == 0);
        if (recorded) res.samples.push_back({t, counts});
        const std::int64_t active = counts[1] + counts[2] + counts[3];
        if (active == 0) {
            res.extinction_time = t;
            if (!recorded) res.samples.push_back({t, counts});
            break;
        }
    }
    if (res.samples.back().t != t && t > 0.0) res.samples.push_back({t, counts});
    res.final_counts = counts;
    return res;
}

EnsembleResult ensemble(const ModelParams& params, std::uint32_t n, std::uint32_t k,
                        const AbmOptions& opts, int n_runs) {
    if (n_runs < 1) throw ConfigError("n_runs must be >= 1");
    validate_or_throw(params);
    check_probability_bounds(params, opts.dt);

    std::vector<AbmResult> results(n_runs);
    const auto worker = [&](int i) {
        // Decorrelate the graph stream from the dynamics stream.
        const std::uint64_t run_seed = opts.seed + static_cast<std::uint64_t>(i);
        const Network net = generate_regular(n, k, run_seed ^ 0x9e3779b97f4a7c15ULL);
        AbmOptions o = opts;
        o.seed = run_seed;
        results[i] = run(net, params, o);
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int n_threads = static_cast<int>(std::min<unsigned>(hw, n_runs));
    if (n_threads <= 1) {
        for (int i = 0; i < n_runs; ++i) worker(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int tix = 0; tix < n_threads; ++tix) {
            pool.emplace_back([&, tix] {
                for (int i = tix; i < n_runs; i += n_threads) worker(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    // All runs share the sampling grid j -> j*record_every*dt. A run's last
    // sample may sit off-grid (extinction between strides); only on-grid
    // samples enter the merge, and finished runs pad later grid points with
    // their final (absorbing) counts.
    const double stride = opts.record_every * opts.dt;
    const auto on_grid_count = [stride](const AbmResult& r) {
        std::size_t m = 0;
        while (m < r.samples.size() &&
               std::abs(r.samples[m].t - static_cast<double>(m) * stride) <
                   0.5 * stride) {
            ++m;
        }
        return m;
    };
    std::size_t grid = 0;
    for (const auto& r : results) grid = std::max(grid, on_grid_count(r));

    EnsembleResult er;
    er.n_runs = n_runs;
    er.run_peak_s1.reserve(n_runs);
    er.run_final.reserve(n_runs);
    for (const auto& r : results) {
        er.run_peak_s1.push_back(r.peak_s1_count);
        er.run_final.push_back(r.final_counts);
    }
    er.times.resize(grid);
    for (std::size_t j = 0; j < grid; ++j) er.times[j] = static_cast<double>(j) * stride;
    for (int s = 0; s < kNumStates; ++s) {
        er.mean[s].assign(grid, 0.0);
        er.stddev[s].assign(grid, 0.0);
    }

    const auto accumulate = [&](auto&& fold) {
        for (const auto& r : results) {
            const std::size_t m = on_grid_count(r);
            for (std::size_t j = 0; j < grid; ++j) {
                const StateCounts& c = j < m ? r.samples[j].counts : r.final_counts;
                for (int s = 0; s < kNumStates; ++s) {
                    fold(s, j, static_cast<double>(c[s]));
                }
            }
        }
    };
    accumulate([&](int s, std::size_t j, double v) { er.mean[s][j] += v; });
    for (int s = 0; s < kNumStates; ++s) {
        for (std::size_t j = 0; j < grid; ++j) er.mean[s][j] /= n_runs;
    }
    accumulate([&](int s, std::size_t j, double v) {
        const double d = v - er.mean[s][j];
        er.stddev[s][j] += d * d;
    });
    for (int s = 0; s < kNumStates; ++s) {
        for (std::size_t j = 0; j < grid; ++j) {
            er.stddev[s][j] = std::sqrt(er.stddev[s][j] / n_runs);
        }
    }
    return er;
}

} // namespace rumor
