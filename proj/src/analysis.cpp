#include "rumor/analysis.hpp"

#include <cmath>
#include <sstream>

#include "rumor/csv.hpp"
#include "rumor/errors.hpp"

namespace rumor {

double c_constant(const ModelParams& params) {
    validate_or_throw(params);
    const double f = discernibility(params);
    return 1.0 - (1.0 - f) * params.lambda1 - f * params.eta;
}

double epsilon(const ModelParams& params) {
    const double c = c_constant(params);
    const double removal = params.beta1 + params.gamma1 / params.k_avg;
    if (removal == 0.0) {
        throw ParamError(
            "beta1 + gamma1/k_avg = 0: no removal mechanism, final-size law undefined");
    }
    return (params.beta1 - c + 1.0) / removal;
}

double final_size_rumor_only(const ModelParams& params) {
    const double eps = epsilon(params);
    if (eps <= 1.0) return 0.0;

    const auto g = [eps](double r) { return r - 1.0 + std::exp(-eps * r); };

    // g(0) = 0 is always a root; the spreading root is bracketed away from it.
    // g((eps-1)/eps^2) < 0 for every eps > 1 (expand exp to second order),
    // and g(1) = exp(-eps) >= 0.
    double lo = (eps - 1.0) / (eps * eps);
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Newton polish.
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 8 && std::abs(g(r)) >= 1e-12; ++it) {
        const double slope = 1.0 - eps * std::exp(-eps * r);
        if (slope == 0.0) break;
        r -= g(r) / slope;
    }
    return r;
}

RumorThreshold threshold_lambda1(const ModelParams& params) {
    validate_or_throw(params);
    const double f = discernibility(params);
    if (f == 1.0) {
        throw ParamError("lambda1 threshold undefined for f(m) = 1");
    }
    const double numer = params.gamma1 - params.k_avg * f * params.eta;
    RumorThreshold th;
    if (numer <= 0.0) {
        // The hesitant channel alone sustains spreading for any lambda1.
        th.always_spreads = true;
        return th;
    }
    th.value = numer / (params.k_avg * (1.0 - f));
    return th;
}

double threshold_lambda2(const ModelParams& params) {
    validate_or_throw(params);
    return params.gamma2 / params.k_avg;
}

DerivVector initial_rates(const ModelParams& params, std::int64_t n) {
    validate_or_throw(params);
    if (n < 3) throw ParamError("initial_rates requires n >= 3");
    const double f = discernibility(params);
    const double nn = static_cast<double>(n);
    const double seed_pair = (nn - 2.0) / (nn * nn); // (N-2)/N^2
    const double cross = 1.0 / (nn * nn);            // 1/N^2
    const double k = params.k_avg;
    const double believe = (1.0 - f) * params.lambda1;
    const double hesitate = f * params.eta;

    DerivVector d;
    d.di = -2.0 * k * seed_pair;
    d.ds1 = believe * k * seed_pair - (params.alpha + params.beta1) * k * cross -
            params.gamma1 / nn;
    d.ds2 = params.lambda2 * k * seed_pair - params.beta2 * k * cross -
            params.gamma2 / nn;
    d.dh = hesitate * k * seed_pair;
    d.dr1 = (1.0 - believe - hesitate) * k * seed_pair + params.beta1 * k * cross +
            params.gamma1 / nn;
    d.dr2 = (1.0 - params.lambda2) * k * seed_pair + params.alpha * k * cross +
            params.beta2 * k * cross + params.gamma2 / nn;
    return d;
}

SpreadingCondition spreading_condition(const ModelParams& params,
                                       std::optional<std::int64_t> n) {
    validate_or_throw(params);
    const double f = discernibility(params);

    SpreadingCondition sc;
    sc.lhs = (1.0 - f) * params.lambda1 + params.lambda2 + f * params.eta;
    if (n) {
        if (*n < 3) throw ParamError("spreading_condition requires n >= 3");
        const double nn = static_cast<double>(*n);
        sc.rhs = (params.alpha + params.beta1 + params.beta2) / (nn - 2.0) +
                 nn * (params.gamma1 + params.gamma2) / ((nn - 2.0) * params.k_avg);
    } else {
        sc.rhs = (params.gamma1 + params.gamma2) / params.k_avg;
    }
    sc.margin = sc.lhs - sc.rhs;
    sc.spreads = sc.margin > 0.0;
    return sc;
}

std::string ThresholdReport::to_key_value() const {
    std::ostringstream os;
    os << "lambda1_c = "
       << (lambda1_c.always_spreads ? std::string("always-spreads")
                                    : csv::format(lambda1_c.value))
       << "\n";
    os << "lambda2_c = " << csv::format(lambda2_c) << "\n";
    os << "epsilon = " << csv::format(epsilon) << "\n";
    os << "c_const = " << csv::format(c_const) << "\n";
    os << "general_lhs = " << csv::format(general_lhs) << "\n";
    os << "general_rhs = " << csv::format(general_rhs) << "\n";
    os << "general_margin = " << csv::format(general_margin) << "\n";
    os << "spreads = " << (spreads ? "true" : "false") << "\n";
    return os.str();
}

std::string ThresholdReport::to_csv() const {
    std::ostringstream os;
    os << "lambda1_c,lambda2_c,epsilon,c_const,general_lhs,general_rhs,"
          "general_margin,spreads\n";
    os << (lambda1_c.always_spreads ? std::string("always-spreads")
                                    : csv::format(lambda1_c.value))
       << ',' << csv::format(lambda2_c) << ',' << csv::format(epsilon) << ','
       << csv::format(c_const) << ',' << csv::format(general_lhs) << ','
       << csv::format(general_rhs) << ',' << csv::format(general_margin) << ','
       << (spreads ? 1 : 0) << "\n";
    return os.str();
}

ThresholdReport compute_report(const ModelParams& params) {
    ThresholdReport rep;
    rep.lambda1_c = threshold_lambda1(params);
    rep.lambda2_c = threshold_lambda2(params);
    rep.epsilon = epsilon(params);
    rep.c_const = c_constant(params);
    const SpreadingCondition sc = spreading_condition(params);
    rep.general_lhs = sc.lhs;
    rep.general_rhs = sc.rhs;
    rep.general_margin = sc.margin;
    rep.spreads = sc.spreads;
    return rep;
}

} // namespace rumor
