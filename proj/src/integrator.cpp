#include "rumor/integrator.hpp"

#include <cmath>
#include <sstream>

#include "rumor/errors.hpp"

namespace rumor {

namespace {

StateVector axpy(const StateVector& y, double a, const DerivVector& d) {
    StateVector out;
    out.i = y.i + a * d.di;
    out.s1 = y.s1 + a * d.ds1;
    out.s2 = y.s2 + a * d.ds2;
    out.h = y.h + a * d.dh;
    out.r1 = y.r1 + a * d.dr1;
    out.r2 = y.r2 + a * d.dr2;
    return out;
}

StateVector rk4_step(const StateVector& y, const ModelParams& p, double f,
                     double h) {
    using detail::rhs_unchecked;
    const DerivVector k1 = rhs_unchecked(y, p, f);
    const DerivVector k2 = rhs_unchecked(axpy(y, 0.5 * h, k1), p, f);
    const DerivVector k3 = rhs_unchecked(axpy(y, 0.5 * h, k2), p, f);
    const DerivVector k4 = rhs_unchecked(axpy(y, h, k3), p, f);

    StateVector out;
    const double w = h / 6.0;
    out.i = y.i + w * (k1.di + 2.0 * (k2.di + k3.di) + k4.di);
    out.s1 = y.s1 + w * (k1.ds1 + 2.0 * (k2.ds1 + k3.ds1) + k4.ds1);
    out.s2 = y.s2 + w * (k1.ds2 + 2.0 * (k2.ds2 + k3.ds2) + k4.ds2);
    out.h = y.h + w * (k1.dh + 2.0 * (k2.dh + k3.dh) + k4.dh);
    out.r1 = y.r1 + w * (k1.dr1 + 2.0 * (k2.dr1 + k3.dr1) + k4.dr1);
    out.r2 = y.r2 + w * (k1.dr2 + 2.0 * (k2.dr2 + k3.dr2) + k4.dr2);
    return out;
}

// Drift bound before the run is declared numerically unstable. Recorded
// samples are held to the tighter kSumTol.
constexpr double kDriftTol = 1e-6;

void check_step(const StateVector& y, double t) {
    const double* vals[] = {&y.i, &y.s1, &y.s2, &y.h, &y.r1, &y.r2};
    const char* names[] = {"i", "s1", "s2", "h", "r1", "r2"};
    for (int j = 0; j < 6; ++j) {
        if (!(*vals[j] >= -kNegativeTol)) {
            std::ostringstream os;
            os << "negative density " << names[j] << " = " << *vals[j]
               << " at t = " << t << " (step size too large?)";
            throw NumericalError(os.str());
        }
    }
    if (!(std::abs(y.sum() - 1.0) <= kDriftTol)) {
        std::ostringstream os;
        os << "density sum drifted to " << y.sum() << " at t = " << t;
        throw NumericalError(os.str());
    }
}

bool is_stationary(const StateVector& y, const ModelParams& p,
                   const IntegrationOptions& o) {
    // s1+s2+h exhausted and no outstanding stifler1->stifler2 flow: nothing
    // can change any more (up to active_tol).
    return y.active() < o.active_tol && p.omega * y.r1 < o.active_tol;
}

} // namespace

void validate_options_or_throw(const IntegrationOptions& o) {
    if (!(o.step > 0.0)) throw ConfigError("integration step must be > 0");
    if (!(o.t_max > 0.0)) throw ConfigError("t_max must be > 0");
    if (!(o.step < o.t_max)) throw ConfigError("step must be < t_max");
    if (o.sample_every < 1) throw ConfigError("sample_every must be >= 1");
    if (!(o.active_tol > 0.0)) throw ConfigError("active_tol must be > 0");
}

Trajectory integrate(const ModelParams& params, const StateVector& init,
                     const IntegrationOptions& opts) {
    validate_or_throw(params);
    validate_state_or_throw(init);
    validate_options_or_throw(opts);
    const double f = discernibility(params);

    Trajectory traj;
    traj.samples.push_back({0.0, init});

    StateVector y = init;
    if (is_stationary(y, params, opts)) {
        traj.terminated_by = Termination::steady_state;
        traj.final = y;
        traj.final_time = 0.0;
        return traj;
    }

    const auto record = [&traj](double t, const StateVector& s) {
        if (std::abs(s.sum() - 1.0) > kSumTol) {
            std::ostringstream os;
            os << "density sum " << s.sum() << " at sample t = " << t
               << " exceeds the recording tolerance";
            throw NumericalError(os.str());
        }
        traj.samples.push_back({t, s});
    };

    // Last full step that does not overshoot the horizon.
    const long n_steps = static_cast<long>(std::floor(opts.t_max / opts.step + 1e-9));
    double t = 0.0;
    bool steady = false;
    for (long n = 1; n <= n_steps; ++n) {
        y = rk4_step(y, params, f, opts.step);
        t = static_cast<double>(n) * opts.step;
        check_step(y, t);
        if (n % opts.sample_every == 0) record(t, y);
        if (is_stationary(y, params, opts)) {
            steady = true;
            break;
        }
    }
    if (traj.samples.back().t != t) record(t, y);

    traj.terminated_by = steady ? Termination::steady_state : Termination::horizon;
    traj.final = y;
    traj.final_time = t;
    return traj;
}

StateVector final_state(const Trajectory& traj) {
    if (traj.terminated_by != Termination::steady_state) {
        std::ostringstream os;
        os << "trajectory hit the horizon at t = " << traj.final_time
           << " with active density " << traj.final.active()
           << "; no steady state to report";
        throw NotConvergedError(os.str());
    }
    return traj.final;
}

} // namespace rumor
