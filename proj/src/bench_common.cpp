#include "egfem/problems.hpp"

#include "egfem/manufactured.hpp"

#include <cmath>
#include <numbers>

namespace egfem {

ProblemDefinition semilinear_problem() {
    ProblemDefinition p;
    p.a_constant = true;
    p.a_value = 1.0;
    p.c_present = true;
    p.c.depends_on_u = true;
    p.c.value = [](const Vec2&, double u, const Vec2&, const Eigen::VectorXd& mu) {
        return mu[0] / mu[1] * (std::exp(mu[1] * u) - 1.0);
    };
    p.c.du = [](const Vec2&, double u, const Vec2&, const Eigen::VectorXd& mu) {
        return mu[0] * std::exp(mu[1] * u);
    };
    p.q = [](const Vec2& x, const Eigen::VectorXd&) {
        return 100.0 * std::sin(2.0 * std::numbers::pi * x.x()) *
               std::sin(2.0 * std::numbers::pi * x.y());
    };
    p.param_box.resize(2, 2);
    p.param_box << 0.01, 10.0, 0.01, 10.0;
    return p;
}

ProblemDefinition minsurface_problem() {
    ProblemDefinition p;
    p.a_constant = false;
    p.a.depends_on_grad = true;
    p.a.value = [](const Vec2&, double, const Vec2& g, const Eigen::VectorXd&) {
        return 1.0 / std::sqrt(1.0 + g.squaredNorm());
    };
    p.a.dgrad = [](const Vec2&, double, const Vec2& g, const Eigen::VectorXd&) -> Vec2 {
        return -g * std::pow(1.0 + g.squaredNorm(), -1.5);
    };
    p.c_present = false;
    p.q = [](const Vec2& x, const Eigen::VectorXd& mu) {
        return 2.0 * (std::exp(x.squaredNorm()) - std::exp(-1.0)) *
               std::exp(mu[0] * x.x() + mu[1] * x.y());
    };
    p.param_box.resize(2, 2);
    p.param_box << 0.0, 1.0, 0.0, 1.0;
    return p;
}

ProblemDefinition burgers_problem() {
    ProblemDefinition p;
    p.a_constant = true;
    p.a_value = burgers::kViscosity;
    p.nu = burgers::kViscosity;
    p.c_present = true;
    p.c.depends_on_u = true;
    p.c.value = [](const Vec2&, double u, const Vec2&, const Eigen::VectorXd&) { return u * u; };
    p.c.du = [](const Vec2&, double u, const Vec2&, const Eigen::VectorXd&) { return 2.0 * u; };
    p.q = [](const Vec2& x, const Eigen::VectorXd& tau) { return burgers::source(x, tau[0]); };
    return p;
}

} // namespace egfem
