#pragma once

#include "egfem/fe_space.hpp"

#include <Eigen/SparseCore>

namespace egfem {

using SpMat = Eigen::SparseMatrix<double>;

/// Point-evaluation operators from a P1 solution space onto the dofs of a
/// coefficient space W_h: `pi_u` evaluates u_h, `pi_gx`/`pi_gy` the two
/// components of (the piecewise constant) grad u_h. Where a W_h dof sits on
/// an element interface the gradient is taken from the incident element with
/// the lowest index. All operators act on free-dof coefficient vectors.
struct InterpolationOps {
    SpMat pi_u;  // N_f x N_u
    SpMat pi_gx; // N_f x N_u
    SpMat pi_gy; // N_f x N_u
    std::vector<int> owner_elem; // evaluation element per W_h dof
    std::vector<Vec2> coords;    // W_h dof locations x_j^f

    int n_points() const { return static_cast<int>(coords.size()); }
};

InterpolationOps build_interpolation(const FeSpace& v_space, const FeSpace& w_space);

} // namespace egfem
