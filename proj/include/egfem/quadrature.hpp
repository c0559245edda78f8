#pragma once

#include <array>
#include <vector>

namespace egfem {

/// Symmetric quadrature rule on the reference triangle, given in barycentric
/// coordinates. Weights sum to 1; multiply by the element area to integrate.
struct QuadRule {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;
    int degree = 0; // exact for polynomials up to this total degree

    std::size_t size() const { return points.size(); }
};

/// Smallest available rule exact for polynomials of the given total degree.
/// Rules of degree 1, 2, 4 and 5 are provided (Dunavant family).
const QuadRule& triangle_rule(int degree);

} // namespace egfem
