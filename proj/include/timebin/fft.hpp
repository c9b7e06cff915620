#pragma once

#include <complex>
#include <vector>
#include <cmath>
#include <cstddef>

#include "timebin/error.hpp"

namespace timebin {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

namespace fft {

inline bool is_power_of_two(std::size_t n)
{
    return n != 0 && (n & (n - 1)) == 0;
}

// Iterative radix-2 Cooley-Tukey, unnormalized. sign = -1 forward, +1 inverse.
inline void radix2_inplace(ComplexVec& a, int sign)
{
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const Complex wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Bluestein's chirp-z reduction of an arbitrary-length DFT to a power-of-two
// cyclic convolution. Unnormalized forward transform.
inline void bluestein_forward(ComplexVec& a)
{
    const std::size_t n = a.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    // chirp[k] = exp(-i pi k^2 / n); k^2 mod 2n keeps the phase argument small
    ComplexVec chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 = (k * k) % (2 * n);
        const double ang = -M_PI * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = Complex(std::cos(ang), std::sin(ang));
    }

    ComplexVec u(m, Complex(0, 0)), v(m, Complex(0, 0));
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
    v[0] = Complex(1, 0);
    for (std::size_t k = 1; k < n; ++k) {
        v[k] = std::conj(chirp[k]);
        v[m - k] = v[k];
    }

    radix2_inplace(u, -1);
    radix2_inplace(v, -1);
    for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
    radix2_inplace(u, +1);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * inv_m * chirp[k];
}

/// Forward DFT, X_k = sum_j x_j exp(-2 pi i j k / n). Any length.
inline void forward(ComplexVec& a)
{
    if (a.empty()) return;
    if (is_power_of_two(a.size())) radix2_inplace(a, -1);
    else bluestein_forward(a);
}

/// Inverse DFT including the 1/n normalization.
inline void inverse(ComplexVec& a)
{
    if (a.empty()) return;
    const std::size_t n = a.size();
    if (is_power_of_two(n)) {
        radix2_inplace(a, +1);
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv_n;
    } else {
        for (auto& x : a) x = std::conj(x);
        bluestein_forward(a);
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x = std::conj(x) * inv_n;
    }
}

/// Angular frequency of DFT bin k on a grid with spacing dt (fftfreq layout:
/// non-negative bins first, then negative).
inline double angular_frequency(std::size_t k, std::size_t n, double dt)
{
    const double f = (k < (n + 1) / 2)
                         ? static_cast<double>(k)
                         : static_cast<double>(k) - static_cast<double>(n);
    return 2.0 * M_PI * f / (static_cast<double>(n) * dt);
}

/// Phase ramp implementing an exact band-limited delay by `delay` seconds:
/// multiply the spectrum by exp(-i w_k delay).
inline ComplexVec delay_ramp(std::size_t n, double dt, double delay)
{
    ComplexVec ramp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = -angular_frequency(k, n, dt) * delay;
        ramp[k] = Complex(std::cos(ang), std::sin(ang));
    }
    return ramp;
}

/// Cyclically shift samples so that out(t) = in(t - delay); exact for
/// band-limited data. The caller is responsible for keeping the signal away
/// from the window edges.
inline void apply_delay(ComplexVec& a, double dt, double delay)
{
    if (delay == 0.0 || a.empty()) return;
    const ComplexVec ramp = delay_ramp(a.size(), dt, delay);
    forward(a);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] *= ramp[k];
    inverse(a);
}

}

}
