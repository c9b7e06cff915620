#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "timebin/error.hpp"

namespace timebin {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s

/// Raw physical inputs, SI units throughout. Group velocities are the
/// canonical representation; an atomic-coupling representation (the products
/// g_i^2 N, in s^-2) is accepted and converted via v_i = c Omega^2 / (g_i^2 N).
struct PhysicalParams {
    double gamma = 0;           ///< optical decay rate Gamma (rad/s)
    double omega = 0;           ///< driving Rabi frequency Omega (rad/s)
    double v1 = 0;              ///< group velocity of field 1 (m/s)
    double v2 = 0;              ///< group velocity of field 2 (m/s)
    double density = 0;         ///< atomic number density (m^-3)
    double length = 0;          ///< medium length L (m)
    double wavelength = 0;      ///< resonant wavelength (m)
    double pulse_duration = 0;  ///< input pulse duration T (s)

    /// g_i^2 N products recovered from the canonical velocities (s^-2).
    double coupling1() const { return speed_of_light * omega * omega / v1; }
    double coupling2() const { return speed_of_light * omega * omega / v2; }

    static PhysicalParams from_velocities(double gamma, double omega, double v1,
                                          double v2, double density, double length,
                                          double wavelength, double pulse_duration)
    {
        PhysicalParams p{gamma, omega, v1, v2, density, length, wavelength, pulse_duration};
        p.check();
        return p;
    }

    static PhysicalParams from_couplings(double gamma, double omega, double g1sq_n,
                                         double g2sq_n, double density, double length,
                                         double wavelength, double pulse_duration)
    {
        if (g1sq_n <= 0 || g2sq_n <= 0)
            throw Error(ErrorKind::invalid_parameter, "coupling products g_i^2 N must be positive");
        if (omega <= 0)
            throw Error(ErrorKind::invalid_parameter, "omega must be positive");
        const double v1 = speed_of_light * omega * omega / g1sq_n;
        const double v2 = speed_of_light * omega * omega / g2sq_n;
        return from_velocities(gamma, omega, v1, v2, density, length, wavelength, pulse_duration);
    }

    void check() const
    {
        auto require_positive = [](double v, const char* name) {
            if (!(v > 0) || !std::isfinite(v))
                throw Error(ErrorKind::invalid_parameter,
                            std::string(name) + " must be positive and finite");
        };
        require_positive(gamma, "gamma");
        require_positive(omega, "omega");
        require_positive(v1, "v1");
        require_positive(v2, "v2");
        require_positive(density, "density");
        require_positive(length, "length");
        require_positive(wavelength, "wavelength");
        require_positive(pulse_duration, "pulse_duration");
        if (v1 >= speed_of_light || v2 >= speed_of_light)
            throw Error(ErrorKind::invalid_parameter, "group velocities must be below c");
    }
};

/// Propagation coefficients computed from PhysicalParams.
struct DerivedQuantities {
    double v1 = 0;            ///< group velocity, field 1 (m/s)
    double v2 = 0;            ///< group velocity, field 2 (m/s)
    double beta = 0;          ///< parametric coupling (m^-1)
    double k1 = 0;            ///< absorption coefficient, field 1 (m^-1)
    double k2 = 0;            ///< absorption coefficient, field 2 (m^-1)
    double sigma = 0;         ///< resonant cross-section (m^2)
    double alpha = 0;         ///< optical depth (dimensionless)
    double eit_width = 0;     ///< EIT transparency bandwidth (rad/s)
    double walkoff_time = 0;  ///< L |v1-v2| / (v1 v2), output bin separation scale (s)
    double length = 0;        ///< medium length carried through for the solvers (m)
};

/// Compute every derived quantity:
///   beta        = g1 g2 N / (c Omega) = Omega / sqrt(v1 v2)
///   k_i         = g_i^2 Gamma N / (c Omega^2) = Gamma / v_i
///   sigma       = (3/4pi) lambda^2
///   alpha       = density * sigma * L
///   eit_width   = (Omega^2/Gamma) / sqrt(alpha)
inline DerivedQuantities derive(const PhysicalParams& p)
{
    p.check();
    DerivedQuantities q;
    q.v1 = p.v1;
    q.v2 = p.v2;
    q.beta = p.omega / std::sqrt(p.v1 * p.v2);
    q.k1 = p.gamma / p.v1;
    q.k2 = p.gamma / p.v2;
    q.sigma = 3.0 / (4.0 * M_PI) * p.wavelength * p.wavelength;
    q.alpha = p.density * q.sigma * p.length;
    q.eit_width = p.omega * p.omega / p.gamma / std::sqrt(q.alpha);
    q.walkoff_time = p.length * std::abs(p.v1 - p.v2) / (p.v1 * p.v2);
    q.length = p.length;
    return q;
}

enum class CheckStatus { pass, warn, fail };

inline const char* check_status_name(CheckStatus s)
{
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::warn: return "warn";
        case CheckStatus::fail: return "fail";
    }
    return "unknown";
}

struct ConstraintCheck {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    std::string relation;  ///< ">>", "<<", "<", ">="
    CheckStatus status = CheckStatus::pass;
};

struct ConstraintReport {
    double strictness = 3.0;
    std::vector<ConstraintCheck> checks;
    CheckStatus overall = CheckStatus::pass;
};

/// Operating-regime validation. Asymmetric ("much greater/less than") checks
/// pass when they hold with margin `strictness`, warn when only the bare
/// inequality holds, and fail otherwise; sharp checks pass or fail outright.
///
/// Checks, in report order:
///   omega_vs_alpha              (Omega/Gamma)^2  >>  alpha
///   pulse_fits_window_i{1,2}    T v_i / L        >>  1/sqrt(alpha)
///   pulse_shorter_than_medium_i{1,2}  T v_i / L  <   1
///   absorption_small_i{1,2}     k_i L            <<  1
///   eit_bandwidth               eit_width * T    >=  1
inline ConstraintReport validate(const DerivedQuantities& q, const PhysicalParams& p,
                                 double strictness = 3.0)
{
    if (!(strictness > 0) || !std::isfinite(strictness))
        throw Error(ErrorKind::invalid_parameter, "strictness must be a positive ratio");

    ConstraintReport report;
    report.strictness = strictness;

    auto graded = [&](double ratio) {
        if (!(ratio >= 1.0)) return CheckStatus::fail;
        if (ratio >= strictness) return CheckStatus::pass;
        return CheckStatus::warn;
    };
    auto sharp = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };

    const double omega_ratio_sq = (p.omega / p.gamma) * (p.omega / p.gamma);
    report.checks.push_back({"omega_vs_alpha", omega_ratio_sq, q.alpha, ">>",
                             graded(omega_ratio_sq / q.alpha)});

    const double inv_sqrt_alpha = 1.0 / std::sqrt(q.alpha);
    const double tv[2] = {p.pulse_duration * p.v1 / p.length,
                          p.pulse_duration * p.v2 / p.length};
    for (int i = 0; i < 2; ++i) {
        report.checks.push_back({std::string("pulse_fits_window_i") + (i ? "2" : "1"),
                                 tv[i], inv_sqrt_alpha, ">>",
                                 graded(tv[i] / inv_sqrt_alpha)});
    }
    for (int i = 0; i < 2; ++i) {
        report.checks.push_back({std::string("pulse_shorter_than_medium_i") + (i ? "2" : "1"),
                                 tv[i], 1.0, "<", sharp(tv[i] < 1.0)});
    }
    const double kl[2] = {q.k1 * p.length, q.k2 * p.length};
    for (int i = 0; i < 2; ++i) {
        report.checks.push_back({std::string("absorption_small_i") + (i ? "2" : "1"),
                                 kl[i], 1.0, "<<", graded(1.0 / kl[i])});
    }
    const double eit_t = q.eit_width * p.pulse_duration;
    report.checks.push_back({"eit_bandwidth", eit_t, 1.0, ">=", sharp(eit_t >= 1.0)});

    report.overall = CheckStatus::pass;
    for (const auto& c : report.checks)
        if (static_cast<int>(c.status) > static_cast<int>(report.overall))
            report.overall = c.status;
    return report;
}

}
