#pragma once

#include "egfem/mesh.hpp"

#include <Eigen/Core>

#include <memory>
#include <vector>

namespace egfem {

/// Per-element geometric quantities; P1 barycentric gradients are constant.
struct ElementGeometry {
    double area = 0.0;
    Vec2 grad_lambda[3];
};

ElementGeometry element_geometry(const Mesh& mesh, int t);

/// Barycentric coordinates of x in triangle t (may be negative outside).
std::array<double, 3> barycentric(const Mesh& mesh, int t, const Vec2& x);

/// Lagrange finite element space of degree 0, 1 or 2 on a triangulation.
/// Dof layout: P0 one per triangle (centroid); P1 one per vertex; P2 one per
/// vertex plus one per edge (midpoint). With `dirichlet`, dofs on the
/// boundary are constrained to zero and excluded from `free_dofs`
/// (degree >= 1 only; P0 has no boundary dofs).
struct FeSpace {
    std::shared_ptr<const Mesh> mesh;
    int degree = 1;
    bool dirichlet = false;

    int n_dofs = 0;
    std::vector<Vec2> dof_coords;
    std::vector<std::vector<int>> elem_dofs; // size 1 / 3 / 6 per element
    std::vector<int> free_dofs;              // ascending
    std::vector<int> full_to_free;           // -1 where constrained

    int n_free() const { return static_cast<int>(free_dofs.size()); }
    int n_local() const { return degree == 0 ? 1 : (degree == 1 ? 3 : 6); }
    bool same_mesh(const FeSpace& other) const { return mesh.get() == other.mesh.get(); }

    /// Lowest-index element containing each dof (ownership rule for
    /// evaluating discontinuous quantities at element interfaces).
    std::vector<int> dof_owner_element() const;

    /// Elements incident to each dof, ascending.
    std::vector<std::vector<int>> dof_to_elements() const;
};

FeSpace build_space(std::shared_ptr<const Mesh> mesh, int degree, bool dirichlet);

/// Local shape function values at a barycentric point (size n_local).
void shape_values(int degree, const std::array<double, 3>& lambda, double* out);

/// Local shape gradients; `gl` are the barycentric gradients of the element.
void shape_gradients(int degree, const std::array<double, 3>& lambda, const Vec2 gl[3], Vec2* out);

/// Point evaluation of a function given by coefficients on the free dofs
/// (constrained dofs are zero). Locates the element by brute force; intended
/// for tests and small diagnostics.
double evaluate(const FeSpace& space, const Eigen::VectorXd& free_coeffs, const Vec2& x);

} // namespace egfem
