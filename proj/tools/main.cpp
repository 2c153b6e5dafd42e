#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rumor/abm.hpp"
#include "rumor/analysis.hpp"
#include "rumor/config.hpp"
#include "rumor/csv.hpp"
#include "rumor/errors.hpp"
#include "rumor/experiments.hpp"
#include "rumor/integrator.hpp"
#include "rumor/version.hpp"

namespace {

using namespace rumor;

std::vector<std::string> provenance(const RunConfig& cfg) {
    std::vector<std::string> lines;
    lines.push_back(std::string(kToolName) + " " + kVersion);
    for (const auto& l : cfg.dump()) lines.push_back(l);
    return lines;
}

RunConfig load(const std::string& config_path) {
    std::string default_out = ".";
    if (const char* env = std::getenv("RUMORSIM_OUT_DIR")) {
        if (*env) default_out = env;
    }
    RunConfig cfg = load_config(config_path, default_out);
    std::filesystem::create_directories(cfg.out_dir);
    return cfg;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return cfg.out_dir + "/" + name;
}

void log_stage(const std::string& msg) { std::cerr << msg << "\n"; }

int cmd_integrate(const std::string& config_path) {
    const RunConfig cfg = load(config_path);
    log_stage("integrating mean-field system");
    const Trajectory traj =
        integrate(cfg.params, two_seed_state(cfg.params.n), cfg.integration);
    const std::string path = out_path(cfg, "trajectory.csv");
    csv::write_file(path, csv::trajectory_csv(traj, provenance(cfg)));
    log_stage("wrote " + path);
    if (traj.terminated_by == Termination::horizon) {
        std::cerr << "integration hit the horizon t_max = " << cfg.integration.t_max
                  << " with active density " << traj.final.active()
                  << "; no steady state reached\n";
        return 2;
    }
    return 0;
}

int cmd_analyze(const std::string& config_path) {
    const RunConfig cfg = load(config_path);
    log_stage("computing threshold report");
    const ThresholdReport rep = compute_report(cfg.params);
    std::cout << rep.to_key_value();
    std::ostringstream file_text;
    for (const auto& l : provenance(cfg)) file_text << "# " << l << "\n";
    file_text << rep.to_csv();
    const std::string path = out_path(cfg, "report.csv");
    csv::write_file(path, file_text.str());
    log_stage("wrote " + path);
    return 0;
}

std::uint32_t integral_degree(const RunConfig& cfg) {
    const double k = cfg.params.k_avg;
    const double rounded = std::floor(k + 0.5);
    if (k != rounded || rounded < 0.0) {
        throw ConfigError("the agent-based model needs an integer k_avg");
    }
    return static_cast<std::uint32_t>(rounded);
}

int cmd_abm(const std::string& config_path) {
    const RunConfig cfg = load(config_path);
    if (cfg.params.n > 100000000) {
        throw ConfigError("abm population larger than 1e8 is not supported");
    }
    const std::uint32_t n = static_cast<std::uint32_t>(cfg.params.n);
    const std::uint32_t k = integral_degree(cfg);
    if (cfg.runs == 1) {
        log_stage("building network and running agent-based model");
        const Network net = generate_regular(n, k, cfg.abm.seed ^ 0x9e3779b97f4a7c15ULL);
        const AbmResult res = run(net, cfg.params, cfg.abm);
        std::ostringstream os;
        for (const auto& l : provenance(cfg)) os << "# " << l << "\n";
        os << "t,I,S1,S2,H,R1,R2,seed\n";
        for (const auto& s : res.samples) {
            os << csv::format17(s.t);
            for (int j = 0; j < kNumStates; ++j) os << ',' << s.counts[j];
            os << ',' << res.seed << "\n";
        }
        const std::string path = out_path(cfg, "abm.csv");
        csv::write_file(path, os.str());
        log_stage("wrote " + path);
    } else {
        log_stage("running ensemble of " + std::to_string(cfg.runs) + " ABM runs");
        const EnsembleResult er = ensemble(cfg.params, n, k, cfg.abm, cfg.runs);
        std::ostringstream os;
        for (const auto& l : provenance(cfg)) os << "# " << l << "\n";
        os << "t,I_mean,S1_mean,S2_mean,H_mean,R1_mean,R2_mean,"
              "I_std,S1_std,S2_std,H_std,R1_std,R2_std,n_runs\n";
        for (std::size_t j = 0; j < er.times.size(); ++j) {
            os << csv::format17(er.times[j]);
            for (int s = 0; s < kNumStates; ++s) os << ',' << csv::format17(er.mean[s][j]);
            for (int s = 0; s < kNumStates; ++s) os << ',' << csv::format17(er.stddev[s][j]);
            os << ',' << er.n_runs << "\n";
        }
        const std::string path = out_path(cfg, "ensemble.csv");
        csv::write_file(path, os.str());
        log_stage("wrote " + path);
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& param,
              const std::string& values_list) {
    const RunConfig cfg = load(config_path);
    SweepSpec spec;
    spec.base = cfg.params;
    spec.swept = swept_param_from_name(param);
    spec.opts = cfg.integration;
    std::istringstream vs(values_list);
    std::string tok;
    while (std::getline(vs, tok, ',')) {
        if (tok.empty()) continue;
        try {
            spec.values.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("bad sweep value '" + tok + "'");
        }
    }
    if (spec.values.empty()) throw ConfigError("sweep needs at least one value");
    log_stage("sweeping " + param + " over " + std::to_string(spec.values.size()) +
              " values");
    const SweepResult res = run_sweep(spec);
    const std::string path = out_path(cfg, "sweep_" + param + ".csv");
    csv::write_file(path, sweep_csv(res, provenance(cfg)));
    log_stage("wrote " + path);
    return 0;
}

int cmd_heatmap(const std::string& config_path, int grid_points) {
    const RunConfig cfg = load(config_path);
    if (grid_points < 2) throw ConfigError("--grid must be >= 2");
    std::vector<double> grid(grid_points);
    for (int j = 0; j < grid_points; ++j) {
        grid[j] = static_cast<double>(j) / (grid_points - 1);
    }
    log_stage("computing " + std::to_string(grid_points) + "x" +
              std::to_string(grid_points) + " final-size map");
    const HeatmapResult hm = heatmap(grid, grid, cfg.params);
    const std::string path = out_path(cfg, "heatmap.csv");
    csv::write_file(path, heatmap_csv(hm, true, provenance(cfg)));
    log_stage("wrote " + path);
    return 0;
}

int cmd_figure(const std::string& config_path, int id) {
    const RunConfig cfg = load(config_path);
    log_stage("reproducing figure " + std::to_string(id));
    const auto paths =
        reproduce_figure(id, cfg.params, cfg.integration, cfg.out_dir, provenance(cfg));
    for (const auto& p : paths) log_stage("wrote " + p);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2SIH2R rumor/truth competition simulator"};
    app.set_version_flag("--version", std::string(rumor::kToolName) + " " +
                                          rumor::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string sweep_param;
    std::string sweep_values;
    int grid_points = 21;
    int figure_id = 2;

    auto* c_int = app.add_subcommand("integrate", "integrate the mean-field system");
    c_int->add_option("--config", config_path, "run configuration file")->required();
    auto* c_ana = app.add_subcommand("analyze", "closed-form thresholds and final size");
    c_ana->add_option("--config", config_path, "run configuration file")->required();
    auto* c_abm = app.add_subcommand("abm", "stochastic agent-based run or ensemble");
    c_abm->add_option("--config", config_path, "run configuration file")->required();
    auto* c_swp = app.add_subcommand("sweep", "one-parameter study");
    c_swp->add_option("--config", config_path, "run configuration file")->required();
    c_swp->add_option("--param", sweep_param, "parameter to sweep")->required();
    c_swp->add_option("--values", sweep_values, "comma-separated values")->required();
    auto* c_hm = app.add_subcommand("heatmap", "final size over the lambda1 x lambda2 grid");
    c_hm->add_option("--config", config_path, "run configuration file")->required();
    c_hm->add_option("--grid", grid_points, "grid points per axis (default 21)");
    auto* c_fig = app.add_subcommand("figure", "emit plot-ready data for a documented study");
    c_fig->add_option("--config", config_path, "run configuration file")->required();
    c_fig->add_option("id", figure_id, "study id, 2..12")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help/--version exit 0; any usage problem is a config error
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (c_int->parsed()) return cmd_integrate(config_path);
        if (c_ana->parsed()) return cmd_analyze(config_path);
        if (c_abm->parsed()) return cmd_abm(config_path);
        if (c_swp->parsed()) return cmd_sweep(config_path, sweep_param, sweep_values);
        if (c_hm->parsed()) return cmd_heatmap(config_path, grid_points);
        if (c_fig->parsed()) return cmd_figure(config_path, figure_id);
    } catch (const rumor::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rumor::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rumor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
