#pragma once

#include <cmath>
#include <cstdlib>

// Bessel functions J0 and J1, self-contained.
//
// Power series below |x| = 12, Hankel's asymptotic expansion with optimal
// truncation above. Both branches keep the absolute error under 1e-10
// across the working range |x| <= 1e3 (the series loses ~2e-11 to
// cancellation near the switch point, the truncated asymptotic tail is
// ~e^{-2x} there).

namespace timebin {

namespace detail {

inline constexpr double bessel_series_cutoff = 12.0;

inline double j0_series(double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

inline double j1_series(double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 0.5 * x * sum;
}

// Hankel expansion: J_nu(x) ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
// chi = x - (nu/2 + 1/4) pi, with
//   P = sum_k (-1)^k h_{2k} / x^{2k},  Q = sum_k (-1)^k h_{2k+1} / x^{2k+1},
//   h_m = prod_{j=1..m} (4 nu^2 - (2j-1)^2) / (m! 8^m).
// The series is summed to its smallest term (optimal truncation).
inline double j_asymptotic(int nu, double x)
{
    const double nu4sq = 4.0 * nu * nu;
    double p = 0.0, q = 0.0;
    double u = 1.0;              // h_m / x^m
    double prev_mag = std::abs(u);
    for (int m = 0; m <= 40; ++m) {
        const double mag = std::abs(u);
        if (m > 0 && mag >= prev_mag) break;   // divergence sets in
        const int k = m / 2;
        const double signed_u = (k % 2 == 0) ? u : -u;
        if (m % 2 == 0) p += signed_u;
        else q += signed_u;
        prev_mag = mag;
        if (mag < 1e-18) break;
        const double odd = 2.0 * m + 1.0;
        u *= (nu4sq - odd * odd) / (8.0 * (m + 1) * x);
    }
    const double chi = x - (0.5 * nu + 0.25) * M_PI;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}

inline double bessel_j0(double x)
{
    x = std::abs(x);
    if (x <= detail::bessel_series_cutoff) return detail::j0_series(x);
    return detail::j_asymptotic(0, x);
}

inline double bessel_j1(double x)
{
    const double ax = std::abs(x);
    const double v = (ax <= detail::bessel_series_cutoff)
                         ? detail::j1_series(ax)
                         : detail::j_asymptotic(1, ax);
    return x < 0 ? -v : v;
}

}
