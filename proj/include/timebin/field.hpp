#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "timebin/error.hpp"
#include "timebin/fft.hpp"
#include "timebin/params.hpp"

namespace timebin {

/// Reporting convention for time samples. Integration always happens in the
/// frame co-moving with the faster field (the only frame where a bounded
/// window suffices); `lab` restores absolute timestamps per snapshot.
enum class Frame { lab, comoving };

/// Uniform retarded-time grid. Window coordinates are co-moving times; at
/// z = 0 they coincide with lab times.
struct TimeGrid {
    double t_min = 0;
    double t_max = 0;
    int n_t = 0;
    Frame frame = Frame::comoving;

    TimeGrid() = default;
    TimeGrid(double t_min_, double t_max_, int n_t_, Frame frame_ = Frame::comoving)
        : t_min(t_min_), t_max(t_max_), n_t(n_t_), frame(frame_)
    {
        if (n_t < 2)
            throw Error(ErrorKind::invalid_parameter, "time grid needs at least 2 samples");
        if (!(t_max > t_min))
            throw Error(ErrorKind::invalid_parameter, "time grid window must have t_max > t_min");
    }

    double dt() const { return (t_max - t_min) / (n_t - 1); }
    double time(int k) const { return t_min + k * dt(); }

    std::vector<double> times() const
    {
        std::vector<double> t(n_t);
        for (int k = 0; k < n_t; ++k) t[k] = time(k);
        return t;
    }
};

/// Input photon wave packet: amplitude profile plus the channel (field 1 or 2)
/// that carries it. The Gaussian profile is A exp[-2 (t-t0)^2 / T^2];
/// user-sampled profiles live on the solver's time grid.
struct InputPulse {
    enum class Shape { gaussian, sampled };

    Shape shape = Shape::gaussian;
    int channel = 1;
    double duration = 0;   ///< T (s), gaussian only
    double amplitude = 1;  ///< peak amplitude, gaussian only
    double center = 0;     ///< t0 (s), gaussian only
    ComplexVec samples;    ///< sampled only, one value per grid point

    static InputPulse gaussian(double duration, int channel = 1, double amplitude = 1.0,
                               double center = 0.0)
    {
        if (!(duration > 0))
            throw Error(ErrorKind::invalid_parameter, "pulse duration must be positive");
        if (channel != 1 && channel != 2)
            throw Error(ErrorKind::invalid_parameter, "input channel must be 1 or 2");
        if (!(amplitude > 0))
            throw Error(ErrorKind::invalid_parameter, "pulse amplitude must be positive");
        InputPulse p;
        p.shape = Shape::gaussian;
        p.channel = channel;
        p.duration = duration;
        p.amplitude = amplitude;
        p.center = center;
        return p;
    }

    static InputPulse from_samples(ComplexVec samples, int channel = 1)
    {
        if (channel != 1 && channel != 2)
            throw Error(ErrorKind::invalid_parameter, "input channel must be 1 or 2");
        double norm2 = 0;
        for (const auto& s : samples) {
            if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
                throw Error(ErrorKind::invalid_parameter, "sampled pulse contains non-finite values");
            norm2 += std::norm(s);
        }
        if (!(norm2 > 0))
            throw Error(ErrorKind::invalid_parameter, "sampled pulse must have nonzero norm");
        InputPulse p;
        p.shape = Shape::sampled;
        p.channel = channel;
        p.samples = std::move(samples);
        return p;
    }
};

/// Profile value at arbitrary time. Gaussian pulses are evaluated exactly;
/// sampled pulses use Catmull-Rom interpolation on the grid, zero outside.
inline Complex pulse_value(const InputPulse& pulse, const TimeGrid& grid, double t)
{
    if (pulse.shape == InputPulse::Shape::gaussian) {
        const double u = (t - pulse.center) / pulse.duration;
        return Complex(pulse.amplitude * std::exp(-2.0 * u * u), 0.0);
    }
    const double dt = grid.dt();
    const double s = (t - grid.t_min) / dt;
    if (s < 0.0 || s > grid.n_t - 1) return Complex(0, 0);
    const int i1 = std::min(static_cast<int>(std::floor(s)), grid.n_t - 2);
    const double u = s - i1;
    auto at = [&](int i) -> Complex {
        if (i < 0 || i >= grid.n_t) return Complex(0, 0);
        return pulse.samples[i];
    };
    const Complex p0 = at(i1 - 1), p1 = at(i1), p2 = at(i1 + 1), p3 = at(i1 + 2);
    const Complex m1 = 0.5 * (p2 - p0);
    const Complex m2 = 0.5 * (p3 - p1);
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * p1 + (u3 - 2 * u2 + u) * m1 +
           (-2 * u3 + 3 * u2) * p2 + (u3 - u2) * m2;
}

/// Samples of the profile on the whole grid (z = 0, where co-moving and lab
/// time coincide).
inline ComplexVec sample_pulse(const InputPulse& pulse, const TimeGrid& grid)
{
    if (pulse.shape == InputPulse::Shape::sampled) {
        if (static_cast<int>(pulse.samples.size()) != grid.n_t)
            throw Error(ErrorKind::invalid_parameter,
                        "sampled pulse length does not match the time grid");
        return pulse.samples;
    }
    ComplexVec out(grid.n_t);
    for (int k = 0; k < grid.n_t; ++k) out[k] = pulse_value(pulse, grid, grid.time(k));
    return out;
}

/// Complex envelope pair at one propagation distance. Sample times follow
/// grid.frame: co-moving times as-is, or lab times t = tau + z/v_ref.
struct FieldState {
    double z = 0;             ///< position in the medium (m)
    double retardation = 0;   ///< z / v_ref, lab-time offset of the window (s)
    TimeGrid grid;
    ComplexVec e1;
    ComplexVec e2;

    std::vector<double> lab_times() const
    {
        std::vector<double> t(grid.n_t);
        for (int k = 0; k < grid.n_t; ++k) t[k] = grid.time(k) + retardation;
        return t;
    }

    std::vector<double> times() const
    {
        return grid.frame == Frame::lab ? lab_times() : grid.times();
    }
};

/// Pointwise squared magnitudes |e1|^2, |e2|^2.
inline std::pair<std::vector<double>, std::vector<double>> intensity(const FieldState& state)
{
    std::vector<double> i1(state.e1.size()), i2(state.e2.size());
    for (std::size_t k = 0; k < state.e1.size(); ++k) i1[k] = std::norm(state.e1[k]);
    for (std::size_t k = 0; k < state.e2.size(); ++k) i2[k] = std::norm(state.e2[k]);
    return {std::move(i1), std::move(i2)};
}

/// Total flux integral dt (|e1|^2 + |e2|^2); Riemann sum, consistent with the
/// unitary solver steps.
inline double flux_integral(const FieldState& state, double dt)
{
    double sum = 0;
    for (std::size_t k = 0; k < state.e1.size(); ++k)
        sum += std::norm(state.e1[k]) + std::norm(state.e2[k]);
    return sum * dt;
}

enum class Method { numeric, analytic, closed_form };

struct SolverInfo {
    int n_z = 0;
    double dz = 0;
    double dt = 0;
};

/// Snapshots over z (always including z = 0 and z = L) plus conserved-flux
/// diagnostics for each.
struct PropagationResult {
    std::vector<FieldState> states;
    std::vector<double> flux;
    Method method = Method::numeric;
    SolverInfo info;

    const FieldState& state_at(double z, double tol) const
    {
        for (const auto& s : states)
            if (std::abs(s.z - z) <= tol) return s;
        throw Error(ErrorKind::invalid_parameter, "no snapshot recorded at requested z");
    }
};

/// Default co-moving window [t0 - pad T, t0 + pad T + walkoff].
inline TimeGrid default_grid(const InputPulse& pulse, const DerivedQuantities& q,
                             int n_t = 4096, double padding = 5.0)
{
    if (pulse.shape != InputPulse::Shape::gaussian)
        throw Error(ErrorKind::invalid_parameter,
                    "default_grid needs a gaussian pulse; supply an explicit grid otherwise");
    const double T = pulse.duration;
    return TimeGrid(pulse.center - padding * T,
                    pulse.center + padding * T + q.walkoff_time, n_t);
}

namespace detail {

/// Window adequacy: the window must contain the pulse support plus walk-off.
inline void check_window(const InputPulse& pulse, const TimeGrid& grid, double walkoff)
{
    double support_lo, support_hi;
    if (pulse.shape == InputPulse::Shape::gaussian) {
        support_lo = pulse.center - 4.0 * pulse.duration;
        support_hi = pulse.center + 4.0 * pulse.duration;
    } else {
        double max_abs = 0;
        for (const auto& s : pulse.samples) max_abs = std::max(max_abs, std::abs(s));
        int lo = 0, hi = static_cast<int>(pulse.samples.size()) - 1;
        while (lo < hi && std::abs(pulse.samples[lo]) < 1e-6 * max_abs) ++lo;
        while (hi > lo && std::abs(pulse.samples[hi]) < 1e-6 * max_abs) --hi;
        support_lo = grid.time(lo);
        support_hi = grid.time(hi);
    }
    if (grid.t_min > support_lo || grid.t_max < support_hi + walkoff)
        throw Error(ErrorKind::window_overflow,
                    "time window too small for the pulse support plus walk-off");
}

/// Edge-decay check: envelopes must stay below 1e-6 of their running maximum
/// at both window borders.
inline bool edges_clean(const ComplexVec& e1, const ComplexVec& e2)
{
    double max_abs = 0;
    for (const auto& v : e1) max_abs = std::max(max_abs, std::abs(v));
    for (const auto& v : e2) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0) return true;
    const std::size_t n = e1.size();
    const std::size_t m = std::min<std::size_t>(4, n / 2);
    double edge = 0;
    for (std::size_t k = 0; k < m; ++k) {
        edge = std::max({edge, std::abs(e1[k]), std::abs(e2[k]),
                         std::abs(e1[n - 1 - k]), std::abs(e2[n - 1 - k])});
    }
    return edge <= 1e-6 * max_abs;
}

}

}
