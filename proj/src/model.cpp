#include "rumor/model.hpp"

#include <cmath>
#include <sstream>

#include "rumor/errors.hpp"

namespace rumor {

double discernibility(const ModelParams& params) {
    double f = 0.0;
    switch (params.f_spec.mode) {
    case DiscernibilitySpec::Mode::linear:
        f = params.f_spec.coefficient * params.m;
        break;
    case DiscernibilitySpec::Mode::constant:
        f = params.f_spec.value;
        break;
    }
    if (!(f >= 0.0 && f <= 1.0)) {
        std::ostringstream os;
        os << "f(m) = " << f << " outside [0,1]";
        throw ParamError(os.str());
    }
    return f;
}

namespace {

void check_range(std::vector<Violation>& out, const char* name, double v,
                 double lo, double hi) {
    if (!(v >= lo && v <= hi)) {
        std::ostringstream os;
        os << name << " = " << v << " outside [" << lo << "," << hi << "]";
        out.push_back({name, os.str()});
    }
}

} // namespace

std::vector<Violation> validate(const ModelParams& p) {
    std::vector<Violation> out;
    check_range(out, "lambda1", p.lambda1, 0.0, 1.0);
    check_range(out, "lambda2", p.lambda2, 0.0, 1.0);
    check_range(out, "eta", p.eta, 0.0, 1.0);
    check_range(out, "beta1", p.beta1, 0.0, 1.0);
    check_range(out, "beta2", p.beta2, 0.0, 1.0);
    check_range(out, "gamma1", p.gamma1, 0.0, 1.0);
    check_range(out, "gamma2", p.gamma2, 0.0, 1.0);
    check_range(out, "omega", p.omega, 0.0, 1.0);
    check_range(out, "alpha", p.alpha, 0.0, 1.0);
    check_range(out, "m", p.m, 0.0, 1.0);

    if (!(p.theta1 >= 0.0)) {
        out.push_back({"theta1", "theta1 must be >= 0"});
    }
    if (!(p.theta2 >= 0.0)) {
        out.push_back({"theta2", "theta2 must be >= 0"});
    }
    if (p.theta1 >= 0.0 && p.theta2 >= 0.0 && !(p.theta1 + p.theta2 <= 1.0)) {
        std::ostringstream os;
        os << "theta1 + theta2 = " << p.theta1 + p.theta2
           << " exceeds 1 (per-step probability budget)";
        out.push_back({"theta1", os.str()});
    }
    if (!(p.k_avg > 0.0)) {
        out.push_back({"k_avg", "k_avg must be > 0"});
    }
    if (p.n < 3) {
        out.push_back({"n", "n must be >= 3"});
    }

    // f(m) itself, then the rule that the three outcomes of an
    // ignorant-spreader1 contact form a probability partition.
    double f = 0.0;
    bool f_ok = true;
    switch (p.f_spec.mode) {
    case DiscernibilitySpec::Mode::linear:
        if (!(p.f_spec.coefficient >= 0.0)) {
            out.push_back({"f_coeff", "linear f(m) requires coefficient >= 0"});
            f_ok = false;
        }
        f = p.f_spec.coefficient * p.m;
        break;
    case DiscernibilitySpec::Mode::constant:
        f = p.f_spec.value;
        break;
    }
    if (f_ok && !(f >= 0.0 && f <= 1.0)) {
        std::ostringstream os;
        os << "f(m) = " << f << " outside [0,1]";
        out.push_back({"f_spec", os.str()});
        f_ok = false;
    }
    if (f_ok) {
        const double partition = (1.0 - f) * p.lambda1 + f * p.eta;
        if (!(partition <= 1.0)) {
            std::ostringstream os;
            os << "(1-f)*lambda1 + f*eta = " << partition
               << " exceeds 1 (contact outcomes must partition)";
            out.push_back({"lambda1", os.str()});
        }
    }
    return out;
}

void validate_or_throw(const ModelParams& params) {
    auto v = validate(params);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid parameters:";
    for (const auto& x : v) os << " [" << x.message << "]";
    throw ParamError(os.str());
}

std::vector<Violation> validate_state(const StateVector& s) {
    std::vector<Violation> out;
    const double* vals[] = {&s.i, &s.s1, &s.s2, &s.h, &s.r1, &s.r2};
    const char* names[] = {"i", "s1", "s2", "h", "r1", "r2"};
    for (int j = 0; j < 6; ++j) {
        const double v = *vals[j];
        if (!(v >= -kNegativeTol) || !(v <= 1.0 + kSumTol)) {
            std::ostringstream os;
            os << names[j] << " = " << v << " outside [0,1]";
            out.push_back({names[j], os.str()});
        }
    }
    if (!(std::abs(s.sum() - 1.0) <= kSumTol)) {
        std::ostringstream os;
        os << "density sum = " << s.sum() << " deviates from 1 by more than "
           << kSumTol;
        out.push_back({"sum", os.str()});
    }
    return out;
}

void validate_state_or_throw(const StateVector& state) {
    auto v = validate_state(state);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid state:";
    for (const auto& x : v) os << " [" << x.message << "]";
    throw StateError(os.str());
}

namespace detail {

DerivVector rhs_unchecked(const StateVector& y, const ModelParams& p,
                          double f) {
    const double believe = (1.0 - f) * p.lambda1; // contact -> spreader1
    const double hesitate = f * p.eta;            // contact -> hesitant1
    const double stifle = 1.0 - believe - hesitate;

    const double flow1 = p.k_avg * y.s1 * y.i; // ignorant-spreader1 contacts
    const double flow2 = p.k_avg * y.s2 * y.i; // ignorant-spreader2 contacts
    const double confront = p.alpha * p.k_avg * y.s1 * y.s2;
    const double bored1 = p.beta1 * p.k_avg * y.s1 * (y.s1 + y.r1 + y.h);
    const double bored2 = p.beta2 * p.k_avg * y.s2 * (y.s2 + y.r2);
    const double forget1 = p.gamma1 * y.s1;
    const double forget2 = p.gamma2 * y.s2;
    const double wake1 = p.theta1 * y.h;
    const double wake2 = p.theta2 * y.h;
    const double drift = p.omega * y.r1;

    DerivVector d;
    d.di = -(flow1 + flow2);
    d.ds1 = believe * flow1 + wake1 - confront - bored1 - forget1;
    d.ds2 = p.lambda2 * flow2 + wake2 - bored2 - forget2;
    d.dh = hesitate * flow1 - (wake1 + wake2);
    d.dr1 = stifle * flow1 + bored1 + forget1 - drift;
    d.dr2 = (1.0 - p.lambda2) * flow2 + confront + bored2 + forget2 + drift;
    return d;
}

} // namespace detail

DerivVector rhs(const StateVector& state, const ModelParams& params) {
    validate_state_or_throw(state);
    return detail::rhs_unchecked(state, params, discernibility(params));
}

} // namespace rumor
