#ifndef RUMOR_EXPERIMENTS_HPP
#define RUMOR_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "rumor/analysis.hpp"
#include "rumor/integrator.hpp"
#include "rumor/model.hpp"

namespace rumor {

enum class SweptParam { m, alpha, k_avg, omega, lambda1, lambda2 };

const char* swept_param_name(SweptParam p);
SweptParam swept_param_from_name(const std::string& name);

/// One-parameter study: integrate the two-seed scenario for every value and
/// record summary statistics of each converged trajectory.
struct SweepSpec {
    ModelParams base;
    SweptParam swept = SweptParam::m;
    std::vector<double> values;
    IntegrationOptions opts;
};

struct SweepRow {
    double value = 0.0;
    double final_r1 = 0.0;
    double final_r2 = 0.0;
    double final_r = 0.0;
    double peak_s1 = 0.0;
    double t_peak_s1 = 0.0;
    bool converged = false; // false: horizon-terminated, row kept and flagged
};

struct SweepResult {
    SweptParam swept = SweptParam::m;
    std::vector<SweepRow> rows;
    ModelParams base;        // provenance
    IntegrationOptions opts; // provenance
};

/// Final size r = r1+r2 on a (lambda1, lambda2) grid, with the closed-form
/// spreading verdict for each cell.
struct HeatmapResult {
    std::vector<double> lambda1_grid;
    std::vector<double> lambda2_grid;
    std::vector<double> r;            // row-major [i1 * n2 + i2]
    std::vector<bool> analytic_spreads;
    std::vector<bool> converged;
    ModelParams base;

    double at(std::size_t i1, std::size_t i2) const {
        return r[i1 * lambda2_grid.size() + i2];
    }
};

/// Two-seed initial state i=(n-2)/n, s1=s2=1/n used by every experiment.
StateVector two_seed_state(std::int64_t n);

SweepResult run_sweep(const SweepSpec& spec);

HeatmapResult heatmap(const std::vector<double>& lambda1_grid,
                      const std::vector<double>& lambda2_grid,
                      const ModelParams& base);

std::string sweep_csv(const SweepResult& result,
                      const std::vector<std::string>& comment = {});
std::string heatmap_csv(const HeatmapResult& result, bool with_boundary,
                        const std::vector<std::string>& comment = {});

/// Emit the plot-ready CSV file(s) for one of the documented example studies
/// (ids 2..12): trajectories, parameter sweeps and the final-size heatmap.
/// Every file starts with a provenance comment listing all parameters.
/// Returns the paths written.
std::vector<std::string> reproduce_figure(int id, const ModelParams& base,
                                          const IntegrationOptions& opts,
                                          const std::string& out_dir,
                                          const std::vector<std::string>& comment = {});

} // namespace rumor

#endif
