#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "timebin/error.hpp"

namespace timebin {

namespace quad {

inline constexpr int gl_order = 16;

struct GaussLegendreRule {
    std::array<double, gl_order> nodes{};    // on (-1, 1)
    std::array<double, gl_order> weights{};
};

// Nodes from Newton iteration on P_n (Golub-Welsch-free; the cos initial
// guess converges in a handful of steps for n = 16).
inline const GaussLegendreRule& gauss_legendre_rule()
{
    static const GaussLegendreRule rule = [] {
        GaussLegendreRule r;
        const int n = gl_order;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            r.nodes[i] = x;
            r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

template <typename F>
auto panel_sum(F&& f, double a, double b, int panels) -> decltype(f(0.0))
{
    const auto& rule = gauss_legendre_rule();
    using R = decltype(f(0.0));
    R total{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        for (int i = 0; i < gl_order; ++i)
            total += f(mid + half * rule.nodes[i]) * (half * rule.weights[i]);
    }
    return total;
}

/// Adaptive panel-count doubling: integrate with 1, 2, 4, ... panels of
/// 16-point Gauss-Legendre until successive results agree to rel_tol (with
/// abs_floor guarding the zero-integral case). Throws on non-convergence.
template <typename F>
auto adaptive(F&& f, double a, double b, double rel_tol = 1e-8, double abs_floor = 1e-30,
              int max_panels = 256) -> decltype(f(0.0))
{
    using R = decltype(f(0.0));
    R prev = panel_sum(f, a, b, 1);
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        const R cur = panel_sum(f, a, b, panels);
        const double change = std::abs(cur - prev);
        if (change <= rel_tol * std::abs(cur) + abs_floor) return cur;
        prev = cur;
    }
    throw Error(ErrorKind::quadrature_nonconvergence,
                "quadrature failed to converge after panel refinement");
}

}

}
