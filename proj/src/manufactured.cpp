#include "egfem/manufactured.hpp"

namespace egfem::burgers {

double exact(const Vec2& x, double t) { return exact(x.x(), x.y(), t); }

double exact_dt(const Vec2& x, double t) { return exact_dt(x.x(), x.y(), t); }

Vec2 exact_grad(const Vec2& x, double t) {
    return {exact_dx1(x.x(), x.y(), t), exact_dx2(x.x(), x.y(), t)};
}

double exact_laplacian(const Vec2& x, double t) {
    const double x1 = x.x(), x2 = x.y();
    const double g1 = x1 * (x1 - 1.0), g2 = x2 * (x2 - 1.0);
    const double s = std::sin(2.0 * x1 * t) * std::exp(-t / 2.0) +
                     std::cos(x2 * t) * std::exp(-t / 4.0) +
                     std::sin(x1 * x2 * t) * std::exp(-t);
    const double s_x1 = 2.0 * t * std::cos(2.0 * x1 * t) * std::exp(-t / 2.0) +
                        x2 * t * std::cos(x1 * x2 * t) * std::exp(-t);
    const double s_x2 = -t * std::sin(x2 * t) * std::exp(-t / 4.0) +
                        x1 * t * std::cos(x1 * x2 * t) * std::exp(-t);
    const double s_x1x1 = -4.0 * t * t * std::sin(2.0 * x1 * t) * std::exp(-t / 2.0) -
                          x2 * x2 * t * t * std::sin(x1 * x2 * t) * std::exp(-t);
    const double s_x2x2 = -t * t * std::cos(x2 * t) * std::exp(-t / 4.0) -
                          x1 * x1 * t * t * std::sin(x1 * x2 * t) * std::exp(-t);
    const double uxx = 20.0 * g2 * s + 20.0 * (2.0 * x1 - 1.0) * g2 * s_x1 + 10.0 * g1 * g2 * s_x1x1;
    const double uyy = 20.0 * g1 * s + 20.0 * g1 * (2.0 * x2 - 1.0) * s_x2 + 10.0 * g1 * g2 * s_x2x2;
    return uxx + uyy;
}

double source(const Vec2& x, double t) {
    const double u = exact(x, t);
    const Vec2 g = exact_grad(x, t);
    return exact_dt(x, t) - kViscosity * exact_laplacian(x, t) + u * (g.x() + g.y());
}

} // namespace egfem::burgers
