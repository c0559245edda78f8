#pragma once

#include "egfem/mesh.hpp"

#include <cmath>
#include <complex>

namespace egfem::burgers {

inline constexpr double kViscosity = 0.01;

/// Manufactured Burgers solution
///   u(x,t) = 10 x1 x2 (x1-1)(x2-1) [sin(2 x1 t) e^{-t/2}
///            + cos(x2 t) e^{-t/4} + sin(x1 x2 t) e^{-t}],
/// templated so tests can differentiate it with complex-step arguments.
template <class T>
T exact(T x1, T x2, T t) {
    using std::cos;
    using std::exp;
    using std::sin;
    const T poly = 10.0 * x1 * x2 * (x1 - 1.0) * (x2 - 1.0);
    const T s = sin(2.0 * x1 * t) * exp(-t / 2.0) + cos(x2 * t) * exp(-t / 4.0) +
                sin(x1 * x2 * t) * exp(-t);
    return poly * s;
}

template <class T>
T exact_dx1(T x1, T x2, T t) {
    using std::cos;
    using std::exp;
    using std::sin;
    const T g1 = x1 * (x1 - 1.0), g2 = x2 * (x2 - 1.0);
    const T s = sin(2.0 * x1 * t) * exp(-t / 2.0) + cos(x2 * t) * exp(-t / 4.0) +
                sin(x1 * x2 * t) * exp(-t);
    const T s_x1 = 2.0 * t * cos(2.0 * x1 * t) * exp(-t / 2.0) +
                   x2 * t * cos(x1 * x2 * t) * exp(-t);
    return 10.0 * (2.0 * x1 - 1.0) * g2 * s + 10.0 * g1 * g2 * s_x1;
}

template <class T>
T exact_dx2(T x1, T x2, T t) {
    using std::cos;
    using std::exp;
    using std::sin;
    const T g1 = x1 * (x1 - 1.0), g2 = x2 * (x2 - 1.0);
    const T s = sin(2.0 * x1 * t) * exp(-t / 2.0) + cos(x2 * t) * exp(-t / 4.0) +
                sin(x1 * x2 * t) * exp(-t);
    const T s_x2 = -t * sin(x2 * t) * exp(-t / 4.0) + x1 * t * cos(x1 * x2 * t) * exp(-t);
    return 10.0 * g1 * (2.0 * x2 - 1.0) * s + 10.0 * g1 * g2 * s_x2;
}

template <class T>
T exact_dt(T x1, T x2, T t) {
    using std::cos;
    using std::exp;
    using std::sin;
    const T poly = 10.0 * x1 * x2 * (x1 - 1.0) * (x2 - 1.0);
    const T s_t = exp(-t / 2.0) * (2.0 * x1 * cos(2.0 * x1 * t) - 0.5 * sin(2.0 * x1 * t)) +
                  exp(-t / 4.0) * (-x2 * sin(x2 * t) - 0.25 * cos(x2 * t)) +
                  exp(-t) * (x1 * x2 * cos(x1 * x2 * t) - sin(x1 * x2 * t));
    return poly * s_t;
}

double exact(const Vec2& x, double t);
double exact_dt(const Vec2& x, double t);
Vec2 exact_grad(const Vec2& x, double t);
double exact_laplacian(const Vec2& x, double t);

/// Source q = u_t - nu Lap(u) + u (u_x1 + u_x2) that makes `exact` solve the
/// viscous Burgers equation.
double source(const Vec2& x, double t);

} // namespace egfem::burgers
