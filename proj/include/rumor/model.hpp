#ifndef RUMOR_MODEL_HPP
#define RUMOR_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rumor {

/// How the rumor's discernible rate m maps to the population's ability to
/// doubt it, f(m). Two forms are supported: f(m) = coefficient * m and a
/// constant f independent of m.
struct DiscernibilitySpec {
    enum class Mode { linear, constant };

    Mode mode = Mode::linear;
    double coefficient = 0.0; // used in linear mode, must be >= 0
    double value = 0.0;       // used in constant mode, must be in [0,1]
};

/// All rate constants of the two-spreader model plus the network context
/// (mean degree, population size) the rates are interpreted against.
///
/// Rates are per contact (lambda1, lambda2, eta, beta1, beta2, alpha) or per
/// unit time (theta1, theta2, gamma1, gamma2, omega).
struct ModelParams {
    double lambda1 = 0.0; // rumor spreading rate, [0,1]
    double lambda2 = 0.0; // truth spreading rate, [0,1]
    double eta = 0.0;     // potential (hesitant) spreading rate, [0,1]
    double theta1 = 0.0;  // hesitant -> spreader1 rate, >= 0
    double theta2 = 0.0;  // hesitant -> spreader2 rate, >= 0
    double beta1 = 0.0;   // rumor losing-interest rate, [0,1]
    double beta2 = 0.0;   // truth losing-interest rate, [0,1]
    double gamma1 = 0.0;  // rumor forgetting rate, [0,1]
    double gamma2 = 0.0;  // truth forgetting rate, [0,1]
    double omega = 0.0;   // stifler1 -> stifler2 rate, [0,1]
    double alpha = 0.0;   // confrontation rate, [0,1]
    double m = 0.0;       // discernible rate of the rumor, [0,1]
    DiscernibilitySpec f_spec;
    double k_avg = 0.0;   // mean degree, > 0
    std::int64_t n = 0;   // population size, >= 3
};

/// One violated parameter invariant: which field and what bound it broke.
struct Violation {
    std::string field;
    std::string message;
};

/// Densities of the six compartments at one instant. Components must lie in
/// [0,1] (values in [-1e-12, 0) are tolerated as roundoff-zero) and sum to 1
/// within 1e-9.
struct StateVector {
    double i = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double h = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;

    double sum() const { return i + s1 + s2 + h + r1 + r2; }
    double active() const { return s1 + s2 + h; }
};

/// Time derivative of a StateVector. Components sum to zero: the model moves
/// people between compartments, it never creates or destroys them.
struct DerivVector {
    double di = 0.0;
    double ds1 = 0.0;
    double ds2 = 0.0;
    double dh = 0.0;
    double dr1 = 0.0;
    double dr2 = 0.0;

    double sum() const { return di + ds1 + ds2 + dh + dr1 + dr2; }
};

// Component-wise tolerance below zero accepted as roundoff before erroring.
inline constexpr double kNegativeTol = 1e-12;
// Allowed deviation of a state's density sum from 1.
inline constexpr double kSumTol = 1e-9;

/// Evaluate f(m) for the given parameters. Errors (rather than clamps) if the
/// configured spec yields a value outside [0,1].
double discernibility(const ModelParams& params);

/// Check every ModelParams invariant. Returns an empty vector when the
/// parameters are valid; otherwise one entry per violated invariant.
std::vector<Violation> validate(const ModelParams& params);

/// validate() that throws ParamError listing all violations.
void validate_or_throw(const ModelParams& params);

/// Check StateVector invariants; empty result means valid.
std::vector<Violation> validate_state(const StateVector& state);

/// validate_state() that throws StateError.
void validate_state_or_throw(const StateVector& state);

/// Mean-field right-hand side of the six compartment equations.
/// Pre: params valid (caller's responsibility); state is checked here.
DerivVector rhs(const StateVector& state, const ModelParams& params);

namespace detail {
// Unchecked evaluation used by the integrator's inner loop. Same arithmetic
// as rhs(), no state validation.
DerivVector rhs_unchecked(const StateVector& state, const ModelParams& params,
                          double f);
} // namespace detail

} // namespace rumor

#endif
