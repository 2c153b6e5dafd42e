#include "rumor/experiments.hpp"

#include <algorithm>
#include <sstream>

#include "rumor/csv.hpp"
#include "rumor/errors.hpp"

namespace rumor {

const char* swept_param_name(SweptParam p) {
    switch (p) {
    case SweptParam::m: return "m";
    case SweptParam::alpha: return "alpha";
    case SweptParam::k_avg: return "k_avg";
    case SweptParam::omega: return "omega";
    case SweptParam::lambda1: return "lambda1";
    case SweptParam::lambda2: return "lambda2";
    }
    return "?";
}

SweptParam swept_param_from_name(const std::string& name) {
    if (name == "m") return SweptParam::m;
    if (name == "alpha") return SweptParam::alpha;
    if (name == "k_avg") return SweptParam::k_avg;
    if (name == "omega") return SweptParam::omega;
    if (name == "lambda1") return SweptParam::lambda1;
    if (name == "lambda2") return SweptParam::lambda2;
    throw ConfigError("unknown sweep parameter '" + name +
                      "' (expected m, alpha, k_avg, omega, lambda1 or lambda2)");
}

StateVector two_seed_state(std::int64_t n) {
    if (n < 3) throw ParamError("two-seed scenario requires n >= 3");
    StateVector s;
    s.s1 = 1.0 / static_cast<double>(n);
    s.s2 = 1.0 / static_cast<double>(n);
    s.i = 1.0 - s.s1 - s.s2;
    return s;
}

namespace {

ModelParams with_value(const ModelParams& base, SweptParam which, double v) {
    ModelParams p = base;
    switch (which) {
    case SweptParam::m: p.m = v; break;
    case SweptParam::alpha: p.alpha = v; break;
    case SweptParam::k_avg: p.k_avg = v; break;
    case SweptParam::omega: p.omega = v; break;
    case SweptParam::lambda1: p.lambda1 = v; break;
    case SweptParam::lambda2: p.lambda2 = v; break;
    }
    return p;
}

SweepRow summarize(double value, const Trajectory& traj) {
    SweepRow row;
    row.value = value;
    row.converged = traj.terminated_by == Termination::steady_state;
    row.final_r1 = traj.final.r1;
    row.final_r2 = traj.final.r2;
    row.final_r = traj.final.r1 + traj.final.r2;
    for (const auto& s : traj.samples) {
        if (s.state.s1 > row.peak_s1) {
            row.peak_s1 = s.state.s1;
            row.t_peak_s1 = s.t;
        }
    }
    return row;
}

std::vector<std::string> params_comment(const ModelParams& p,
                                        const IntegrationOptions& o) {
    std::vector<std::string> lines;
    const auto add = [&lines](const std::string& k, const std::string& v) {
        lines.push_back(k + " = " + v);
    };
    add("lambda1", csv::format(p.lambda1));
    add("lambda2", csv::format(p.lambda2));
    add("eta", csv::format(p.eta));
    add("theta1", csv::format(p.theta1));
    add("theta2", csv::format(p.theta2));
    add("beta1", csv::format(p.beta1));
    add("beta2", csv::format(p.beta2));
    add("gamma1", csv::format(p.gamma1));
    add("gamma2", csv::format(p.gamma2));
    add("omega", csv::format(p.omega));
    add("alpha", csv::format(p.alpha));
    add("m", csv::format(p.m));
    add("f_mode", p.f_spec.mode == DiscernibilitySpec::Mode::linear ? "linear"
                                                                    : "constant");
    if (p.f_spec.mode == DiscernibilitySpec::Mode::linear) {
        add("f_coeff", csv::format(p.f_spec.coefficient));
    } else {
        add("f_value", csv::format(p.f_spec.value));
    }
    add("k_avg", csv::format(p.k_avg));
    add("n", std::to_string(p.n));
    add("step", csv::format(o.step));
    add("t_max", csv::format(o.t_max));
    add("sample_every", std::to_string(o.sample_every));
    add("active_tol", csv::format(o.active_tol));
    return lines;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.values.empty()) throw ConfigError("sweep needs at least one value");
    validate_options_or_throw(spec.opts);

    SweepResult result;
    result.swept = spec.swept;
    result.base = spec.base;
    result.opts = spec.opts;
    result.rows.reserve(spec.values.size());

    // Peak statistics need every step, regardless of the caller's recording
    // stride.
    IntegrationOptions dense = spec.opts;
    dense.sample_every = 1;

    for (double v : spec.values) {
        const ModelParams p = with_value(spec.base, spec.swept, v);
        const auto violations = validate(p);
        if (!violations.empty()) {
            std::ostringstream os;
            os << "sweep value " << v << " for " << swept_param_name(spec.swept)
               << " yields invalid parameters: " << violations.front().message;
            throw ConfigError(os.str());
        }
        const Trajectory traj = integrate(p, two_seed_state(p.n), dense);
        result.rows.push_back(summarize(v, traj));
    }
    return result;
}

namespace {

// Near-critical cells approach their steady state slowly; the map runs with
// a longer horizon than ordinary trajectories. Only the final state matters.
IntegrationOptions heatmap_options() {
    IntegrationOptions opts;
    opts.step = 0.01;
    opts.t_max = 2000.0;
    opts.sample_every = 1000000;
    return opts;
}

} // namespace

HeatmapResult heatmap(const std::vector<double>& lambda1_grid,
                      const std::vector<double>& lambda2_grid,
                      const ModelParams& base) {
    if (lambda1_grid.empty() || lambda2_grid.empty()) {
        throw ConfigError("heatmap grids must be non-empty");
    }
    for (double v : lambda1_grid) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("lambda1 grid outside [0,1]");
    }
    for (double v : lambda2_grid) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("lambda2 grid outside [0,1]");
    }

    const IntegrationOptions opts = heatmap_options();

    HeatmapResult res;
    res.lambda1_grid = lambda1_grid;
    res.lambda2_grid = lambda2_grid;
    res.base = base;
    const std::size_t n1 = lambda1_grid.size();
    const std::size_t n2 = lambda2_grid.size();
    res.r.resize(n1 * n2);
    res.analytic_spreads.resize(n1 * n2);
    res.converged.resize(n1 * n2);

    for (std::size_t i1 = 0; i1 < n1; ++i1) {
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            ModelParams p = base;
            p.lambda1 = lambda1_grid[i1];
            p.lambda2 = lambda2_grid[i2];
            const Trajectory traj = integrate(p, two_seed_state(p.n), opts);
            const std::size_t ix = i1 * n2 + i2;
            res.r[ix] = traj.final.r1 + traj.final.r2;
            res.converged[ix] = traj.terminated_by == Termination::steady_state;
            res.analytic_spreads[ix] = spreading_condition(p).spreads;
        }
    }
    return res;
}

std::string sweep_csv(const SweepResult& result,
                      const std::vector<std::string>& comment) {
    std::ostringstream os;
    for (const auto& line : comment) os << "# " << line << "\n";
    for (const auto& line : params_comment(result.base, result.opts)) {
        os << "# " << line << "\n";
    }
    os << "# swept = " << swept_param_name(result.swept) << "\n";
    os << swept_param_name(result.swept)
       << ",final_r1,final_r2,final_r,peak_s1,t_peak_s1,converged\n";
    for (const auto& r : result.rows) {
        os << csv::format17(r.value) << ',' << csv::format17(r.final_r1) << ','
           << csv::format17(r.final_r2) << ',' << csv::format17(r.final_r) << ','
           << csv::format17(r.peak_s1) << ',' << csv::format17(r.t_peak_s1) << ','
           << (r.converged ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string heatmap_csv(const HeatmapResult& result, bool with_boundary,
                        const std::vector<std::string>& comment) {
    std::ostringstream os;
    for (const auto& line : comment) os << "# " << line << "\n";
    for (const auto& line : params_comment(result.base, heatmap_options())) {
        os << "# " << line << "\n";
    }
    std::size_t non_converged = 0;
    for (bool c : result.converged) {
        if (!c) ++non_converged;
    }
    os << "# non_converged_cells = " << non_converged << "\n";
    os << (with_boundary ? "lambda1,lambda2,R,analytic_spreads" : "lambda1,lambda2,R")
       << "\n";
    const std::size_t n2 = result.lambda2_grid.size();
    for (std::size_t i1 = 0; i1 < result.lambda1_grid.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            os << csv::format17(result.lambda1_grid[i1]) << ','
               << csv::format17(result.lambda2_grid[i2]) << ','
               << csv::format17(result.r[i1 * n2 + i2]);
            if (with_boundary) os << ',' << (result.analytic_spreads[i1 * n2 + i2] ? 1 : 0);
            os << "\n";
        }
    }
    return os.str();
}

namespace {

const std::vector<double> kMValues = {0.1, 0.3, 0.5, 0.7, 0.9};
const std::vector<double> kAlphaValues = {0.1, 0.3, 0.5, 0.7, 0.9};
const std::vector<double> kDegreeValues = {4.0, 6.0, 8.0, 10.0, 12.0};
const std::vector<double> kOmegaValues = {0.0, 0.05, 0.1};

std::vector<double> unit_grid(std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t j = 0; j < points; ++j) {
        g[j] = static_cast<double>(j) / static_cast<double>(points - 1);
    }
    return g;
}

// Time-series of one compartment for each swept value, long format.
std::string curves_csv(const ModelParams& base, const IntegrationOptions& opts,
                       SweptParam which, const std::vector<double>& values,
                       const char* column, double StateVector::* member,
                       const std::vector<std::string>& comment) {
    std::ostringstream os;
    for (const auto& line : comment) os << "# " << line << "\n";
    for (const auto& line : params_comment(base, opts)) os << "# " << line << "\n";
    os << "# swept = " << swept_param_name(which) << "\n";
    os << swept_param_name(which) << ",t," << column << "\n";
    for (double v : values) {
        const ModelParams p = with_value(base, which, v);
        const Trajectory traj = integrate(p, two_seed_state(p.n), opts);
        for (const auto& s : traj.samples) {
            os << csv::format17(v) << ',' << csv::format17(s.t) << ','
               << csv::format17(s.state.*member) << "\n";
        }
    }
    return os.str();
}

// Steady-state stifler densities for each swept value.
std::string finals_csv(const ModelParams& base, const IntegrationOptions& opts,
                       SweptParam which, const std::vector<double>& values,
                       bool with_f_column, const std::vector<std::string>& comment) {
    SweepSpec spec;
    spec.base = base;
    spec.swept = which;
    spec.values = values;
    spec.opts = opts;
    const SweepResult res = run_sweep(spec);

    std::ostringstream os;
    for (const auto& line : comment) os << "# " << line << "\n";
    for (const auto& line : params_comment(base, opts)) os << "# " << line << "\n";
    os << "# swept = " << swept_param_name(which) << "\n";
    os << swept_param_name(which) << (with_f_column ? ",f" : "") << ",R1,R2,converged\n";
    for (const auto& r : res.rows) {
        os << csv::format17(r.value);
        if (with_f_column) {
            ModelParams p = with_value(base, which, r.value);
            os << ',' << csv::format17(discernibility(p));
        }
        os << ',' << csv::format17(r.final_r1) << ',' << csv::format17(r.final_r2)
           << ',' << (r.converged ? 1 : 0) << "\n";
    }
    return os.str();
}

ModelParams heatmap_base(const ModelParams& base) {
    // The final-size map is documented for constant f = 0.5, eta = 0.1 and
    // fast forgetting on both sides; everything else comes from the caller.
    ModelParams p = base;
    p.f_spec.mode = DiscernibilitySpec::Mode::constant;
    p.f_spec.value = 0.5;
    p.eta = 0.1;
    p.gamma1 = 0.8;
    p.gamma2 = 0.8;
    return p;
}

} // namespace

std::vector<std::string> reproduce_figure(int id, const ModelParams& base,
                                          const IntegrationOptions& opts,
                                          const std::string& out_dir,
                                          const std::vector<std::string>& comment) {
    if (id < 2 || id > 12) {
        throw ConfigError("figure id must be between 2 and 12");
    }
    validate_or_throw(base);
    validate_options_or_throw(opts);

    const std::string path = out_dir + "/figure" + std::to_string(id) + ".csv";
    std::string text;
    switch (id) {
    case 2: {
        const Trajectory traj = integrate(base, two_seed_state(base.n), opts);
        std::vector<std::string> lines = comment;
        for (const auto& l : params_comment(base, opts)) lines.push_back(l);
        text = csv::trajectory_csv(traj, lines);
        break;
    }
    case 3:
        text = curves_csv(base, opts, SweptParam::m, kMValues, "S1",
                          &StateVector::s1, comment);
        break;
    case 4:
        text = curves_csv(base, opts, SweptParam::m, kMValues, "R1",
                          &StateVector::r1, comment);
        break;
    case 5:
        text = finals_csv(base, opts, SweptParam::m, kMValues, true, comment);
        break;
    case 6:
        text = curves_csv(base, opts, SweptParam::alpha, kAlphaValues, "S1",
                          &StateVector::s1, comment);
        break;
    case 7:
        text = curves_csv(base, opts, SweptParam::alpha, kAlphaValues, "S2",
                          &StateVector::s2, comment);
        break;
    case 8:
        text = finals_csv(base, opts, SweptParam::alpha, kAlphaValues, false, comment);
        break;
    case 9:
        text = curves_csv(base, opts, SweptParam::k_avg, kDegreeValues, "S1",
                          &StateVector::s1, comment);
        break;
    case 10:
        text = finals_csv(base, opts, SweptParam::omega, kOmegaValues, false, comment);
        break;
    case 11:
    case 12: {
        const HeatmapResult hm = heatmap(unit_grid(21), unit_grid(21),
                                         heatmap_base(base));
        text = heatmap_csv(hm, id == 12, comment);
        break;
    }
    default:
        break;
    }
    csv::write_file(path, text);
    return {path};
}

} // namespace rumor
