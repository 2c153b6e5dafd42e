#include "rumor/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rumor/csv.hpp"
#include "rumor/errors.hpp"

namespace rumor {

namespace {

const std::set<std::string> kModelKeys = {
    "lambda1", "lambda2", "eta",    "theta1", "theta2", "beta1",
    "beta2",   "gamma1",  "gamma2", "omega",  "alpha",  "m",
    "f_mode",  "f_coeff", "f_value", "k_avg", "n"};

const std::set<std::string> kEngineKeys = {
    "step", "t_max", "sample_every", "active_tol",
    "dt",   "abm_t_max", "seed", "runs", "record_every", "out_dir"};

// Model keys that must always be present (f_coeff/f_value depend on f_mode).
const std::vector<std::string> kRequiredModelKeys = {
    "lambda1", "lambda2", "eta",    "theta1", "theta2", "beta1", "beta2",
    "gamma1",  "gamma2",  "omega",  "alpha",  "m",      "f_mode", "k_avg", "n"};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    std::ostringstream os;
    os << "config line " << line << ": " << msg;
    throw ConfigError(os.str());
}

struct RawEntry {
    std::string value;
    int line = 0;
};

double parse_double(const RawEntry& e, const std::string& key) {
    double v = 0.0;
    const char* b = e.value.data();
    const char* end = b + e.value.size();
    auto res = std::from_chars(b, end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        fail(e.line, "value '" + e.value + "' for " + key + " is not a number");
    }
    return v;
}

long long parse_int(const RawEntry& e, const std::string& key) {
    long long v = 0;
    const char* b = e.value.data();
    const char* end = b + e.value.size();
    auto res = std::from_chars(b, end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        fail(e.line, "value '" + e.value + "' for " + key + " is not an integer");
    }
    return v;
}

std::uint64_t parse_u64(const RawEntry& e, const std::string& key) {
    std::uint64_t v = 0;
    const char* b = e.value.data();
    const char* end = b + e.value.size();
    auto res = std::from_chars(b, end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        fail(e.line, "value '" + e.value + "' for " + key +
                         " is not a non-negative integer");
    }
    return v;
}

} // namespace

RunConfig parse_config(const std::string& text, const std::string& default_out_dir) {
    std::map<std::string, RawEntry> entries;
    {
        std::istringstream is(text);
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) {
                fail(lineno, "expected 'key = value', got '" + line + "'");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) fail(lineno, "empty key");
            if (value.empty()) fail(lineno, "empty value for key '" + key + "'");
            if (!kModelKeys.count(key) && !kEngineKeys.count(key)) {
                fail(lineno, "unknown key '" + key + "'");
            }
            if (entries.count(key)) {
                std::ostringstream os;
                os << "duplicate key '" << key << "' (first set on line "
                   << entries[key].line << ")";
                fail(lineno, os.str());
            }
            entries[key] = {value, lineno};
        }
    }

    std::vector<std::string> missing;
    for (const auto& k : kRequiredModelKeys) {
        if (!entries.count(k)) missing.push_back(k);
    }
    if (!missing.empty()) {
        std::ostringstream os;
        os << "missing required model key(s):";
        for (const auto& k : missing) os << " " << k;
        throw ConfigError(os.str());
    }

    RunConfig cfg;
    cfg.out_dir = default_out_dir;
    ModelParams& p = cfg.params;
    p.lambda1 = parse_double(entries["lambda1"], "lambda1");
    p.lambda2 = parse_double(entries["lambda2"], "lambda2");
    p.eta = parse_double(entries["eta"], "eta");
    p.theta1 = parse_double(entries["theta1"], "theta1");
    p.theta2 = parse_double(entries["theta2"], "theta2");
    p.beta1 = parse_double(entries["beta1"], "beta1");
    p.beta2 = parse_double(entries["beta2"], "beta2");
    p.gamma1 = parse_double(entries["gamma1"], "gamma1");
    p.gamma2 = parse_double(entries["gamma2"], "gamma2");
    p.omega = parse_double(entries["omega"], "omega");
    p.alpha = parse_double(entries["alpha"], "alpha");
    p.m = parse_double(entries["m"], "m");
    p.k_avg = parse_double(entries["k_avg"], "k_avg");
    p.n = parse_int(entries["n"], "n");

    const RawEntry& mode = entries["f_mode"];
    if (mode.value == "linear") {
        p.f_spec.mode = DiscernibilitySpec::Mode::linear;
        if (!entries.count("f_coeff")) {
            fail(mode.line, "f_coeff required in linear mode");
        }
        if (entries.count("f_value")) {
            fail(entries["f_value"].line, "f_value requires f_mode = constant");
        }
        p.f_spec.coefficient = parse_double(entries["f_coeff"], "f_coeff");
    } else if (mode.value == "constant") {
        p.f_spec.mode = DiscernibilitySpec::Mode::constant;
        if (!entries.count("f_value")) {
            fail(mode.line, "f_value required in constant mode");
        }
        if (entries.count("f_coeff")) {
            fail(entries["f_coeff"].line, "f_coeff requires f_mode = linear");
        }
        p.f_spec.value = parse_double(entries["f_value"], "f_value");
    } else {
        fail(mode.line, "f_mode must be 'linear' or 'constant', got '" +
                            mode.value + "'");
    }

    if (entries.count("step")) cfg.integration.step = parse_double(entries["step"], "step");
    if (entries.count("t_max")) cfg.integration.t_max = parse_double(entries["t_max"], "t_max");
    if (entries.count("sample_every")) {
        cfg.integration.sample_every =
            static_cast<int>(parse_int(entries["sample_every"], "sample_every"));
    }
    if (entries.count("active_tol")) {
        cfg.integration.active_tol = parse_double(entries["active_tol"], "active_tol");
    }
    if (entries.count("dt")) cfg.abm.dt = parse_double(entries["dt"], "dt");
    if (entries.count("abm_t_max")) cfg.abm.t_max = parse_double(entries["abm_t_max"], "abm_t_max");
    if (entries.count("seed")) cfg.abm.seed = parse_u64(entries["seed"], "seed");
    if (entries.count("runs")) cfg.runs = static_cast<int>(parse_int(entries["runs"], "runs"));
    if (entries.count("record_every")) {
        cfg.abm.record_every =
            static_cast<int>(parse_int(entries["record_every"], "record_every"));
    }
    if (entries.count("out_dir")) cfg.out_dir = entries["out_dir"].value;

    // Range checks, attributed back to the offending line where possible.
    const auto violations = validate(p);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "invalid configuration:";
        for (const auto& v : violations) {
            os << " [";
            auto it = entries.find(v.field);
            if (it != entries.end()) os << "line " << it->second.line << ": ";
            os << v.message << "]";
        }
        throw ConfigError(os.str());
    }
    try {
        validate_options_or_throw(cfg.integration);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("invalid integration options: ") + e.what());
    }
    if (!(cfg.abm.dt > 0.0)) {
        fail(entries.count("dt") ? entries["dt"].line : 0, "dt must be > 0");
    }
    check_probability_bounds(p, cfg.abm.dt);
    if (!(cfg.abm.t_max > 0.0)) {
        fail(entries.count("abm_t_max") ? entries["abm_t_max"].line : 0,
             "abm_t_max must be > 0");
    }
    if (cfg.abm.record_every < 1) {
        fail(entries.count("record_every") ? entries["record_every"].line : 0,
             "record_every must be >= 1");
    }
    if (cfg.runs < 1) {
        fail(entries.count("runs") ? entries["runs"].line : 0, "runs must be >= 1");
    }
    return cfg;
}

RunConfig load_config(const std::string& path, const std::string& default_out_dir) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), default_out_dir);
}

std::vector<std::string> RunConfig::dump() const {
    std::vector<std::string> lines;
    const auto add = [&lines](const std::string& k, const std::string& v) {
        lines.push_back(k + " = " + v);
    };
    add("lambda1", csv::format(params.lambda1));
    add("lambda2", csv::format(params.lambda2));
    add("eta", csv::format(params.eta));
    add("theta1", csv::format(params.theta1));
    add("theta2", csv::format(params.theta2));
    add("beta1", csv::format(params.beta1));
    add("beta2", csv::format(params.beta2));
    add("gamma1", csv::format(params.gamma1));
    add("gamma2", csv::format(params.gamma2));
    add("omega", csv::format(params.omega));
    add("alpha", csv::format(params.alpha));
    add("m", csv::format(params.m));
    if (params.f_spec.mode == DiscernibilitySpec::Mode::linear) {
        add("f_mode", "linear");
        add("f_coeff", csv::format(params.f_spec.coefficient));
    } else {
        add("f_mode", "constant");
        add("f_value", csv::format(params.f_spec.value));
    }
    add("k_avg", csv::format(params.k_avg));
    add("n", std::to_string(params.n));
    add("step", csv::format(integration.step));
    add("t_max", csv::format(integration.t_max));
    add("sample_every", std::to_string(integration.sample_every));
    add("active_tol", csv::format(integration.active_tol));
    add("dt", csv::format(abm.dt));
    add("abm_t_max", csv::format(abm.t_max));
    add("seed", std::to_string(abm.seed));
    add("runs", std::to_string(runs));
    add("record_every", std::to_string(abm.record_every));
    add("out_dir", out_dir);
    return lines;
}

} // namespace rumor
