#ifndef RUMOR_ANALYSIS_HPP
#define RUMOR_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "rumor/model.hpp"

namespace rumor {

/// Critical rumor rate. When the hesitant channel alone sustains spreading
/// (non-positive closed-form value) there is no finite threshold in [0,1]
/// and always_spreads is set instead.
struct RumorThreshold {
    bool always_spreads = false;
    double value = 0.0; // meaningful only when !always_spreads
};

/// Verdict of the general two-source spreading condition, with the two sides
/// of the inequality and their difference exposed for inspection.
struct SpreadingCondition {
    bool spreads = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // lhs - rhs
};

/// c = 1 - (1-f(m))*lambda1 - f(m)*eta: probability that an
/// ignorant-spreader1 contact produces a stifler.
double c_constant(const ModelParams& params);

/// epsilon = (beta1 - c + 1) / (beta1 + gamma1/k_avg). The rumor-only final
/// size is nonzero exactly when epsilon > 1.
/// Throws ParamError when beta1 + gamma1/k_avg == 0 (no removal mechanism).
double epsilon(const ModelParams& params);

/// Final stifler density R of the single-source rumor scenario: 0 when
/// epsilon <= 1, otherwise the unique root in (0,1) of R = 1 - exp(-eps*R),
/// bisected to a bracket then polished until |R - 1 + exp(-eps*R)| < 1e-12.
///
/// Exact correspondence with the integrated system requires the scenario it
/// was derived in: s2(0) = 0, omega = 0 and theta2 = 0 (a nonzero theta2
/// leaks hesitants to the truth side and the closed form becomes an
/// approximation).
double final_size_rumor_only(const ModelParams& params);

/// Critical rumor spreading rate. Pre: f(m) != 1 (throws ParamError).
RumorThreshold threshold_lambda1(const ModelParams& params);

/// Critical truth spreading rate gamma2 / k_avg.
double threshold_lambda2(const ModelParams& params);

/// Instantaneous derivatives at t = 0 for the two-seed initial condition
/// i = (n-2)/n, s1 = s2 = 1/n, evaluated from their closed forms.
/// Components sum to zero.
DerivVector initial_rates(const ModelParams& params, std::int64_t n);

/// General spreading condition for the two-seed scenario. With a population
/// size the finite-n form is used; otherwise the n->infinity limit.
SpreadingCondition spreading_condition(const ModelParams& params,
                                       std::optional<std::int64_t> n = std::nullopt);

/// All closed-form quantities for one parameter set.
struct ThresholdReport {
    RumorThreshold lambda1_c;
    double lambda2_c = 0.0;
    double epsilon = 0.0;
    double c_const = 0.0;
    double general_lhs = 0.0;
    double general_rhs = 0.0;
    double general_margin = 0.0;
    bool spreads = false;

    /// Flat `key = value` block, one line per field.
    std::string to_key_value() const;
    /// One CSV row (with header line) of the same fields.
    std::string to_csv() const;
};

ThresholdReport compute_report(const ModelParams& params);

} // namespace rumor

#endif
