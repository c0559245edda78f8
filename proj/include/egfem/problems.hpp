#pragma once

#include "egfem/assembly.hpp"

namespace egfem {

/// Parametric semilinear benchmark: a = 1,
/// c(u; mu) = mu1/mu2 (e^{mu2 u} - 1), q = 100 sin(2 pi x1) sin(2 pi x2),
/// P = [0.01, 10]^2.
ProblemDefinition semilinear_problem();

/// Minimal surface benchmark: a(grad u) = (1 + |grad u|^2)^{-1/2}, c = 0,
/// q(x; mu) = 2 (e^{|x|^2} - e^{-1}) e^{mu1 x1 + mu2 x2}, P = [0, 1]^2.
ProblemDefinition minsurface_problem();

/// Viscous Burgers benchmark: a = nu = 1/100, the convection coefficient
/// d(u) = u^2 enters through the partially integrated (derivative-test)
/// load, q(x; [t]) is the manufactured source.
ProblemDefinition burgers_problem();

} // namespace egfem
