#include "egfem/interpolation.hpp"

#include "egfem/errors.hpp"

#include <vector>

namespace egfem {

InterpolationOps build_interpolation(const FeSpace& v_space, const FeSpace& w_space) {
    if (!v_space.same_mesh(w_space)) throw MeshMismatch("spaces live on different meshes");
    if (v_space.degree != 1) throw InvalidParameter("solution space must be P1");

    const Mesh& mesh = *v_space.mesh;
    const int n_u = v_space.n_free();
    const int n_f = w_space.n_free(); // active W_h dofs (all of them when unconstrained)
    const auto owner = w_space.dof_owner_element();

    InterpolationOps ops;
    ops.owner_elem.resize(n_f);
    ops.coords.resize(n_f);

    std::vector<Eigen::Triplet<double>> tu, tx, ty;
    tu.reserve(3u * n_f);
    tx.reserve(3u * n_f);
    ty.reserve(3u * n_f);

    for (int j = 0; j < n_f; ++j) {
        const int dof = w_space.free_dofs[j];
        const int t = owner[dof];
        ops.owner_elem[j] = t;
        ops.coords[j] = w_space.dof_coords[dof];
        const auto lambda = barycentric(mesh, t, w_space.dof_coords[dof]);
        const ElementGeometry geo = element_geometry(mesh, t);
        const auto& vdofs = v_space.elem_dofs[t];
        for (int l = 0; l < 3; ++l) {
            const int f = v_space.full_to_free[vdofs[l]];
            if (f < 0) continue; // boundary coefficient is zero
            if (lambda[l] != 0.0) tu.emplace_back(j, f, lambda[l]);
            tx.emplace_back(j, f, geo.grad_lambda[l].x());
            ty.emplace_back(j, f, geo.grad_lambda[l].y());
        }
    }

    ops.pi_u.resize(n_f, n_u);
    ops.pi_gx.resize(n_f, n_u);
    ops.pi_gy.resize(n_f, n_u);
    ops.pi_u.setFromTriplets(tu.begin(), tu.end());
    ops.pi_gx.setFromTriplets(tx.begin(), tx.end());
    ops.pi_gy.setFromTriplets(ty.begin(), ty.end());
    return ops;
}

} // namespace egfem
