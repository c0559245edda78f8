#include "egfem/fe_space.hpp"

#include "egfem/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace egfem {

ElementGeometry element_geometry(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    const Vec2 p0 = mesh.nodes[tri[0]], p1 = mesh.nodes[tri[1]], p2 = mesh.nodes[tri[2]];
    ElementGeometry g;
    g.area = signed_area(p0, p1, p2);
    const double inv = 1.0 / (2.0 * g.area);
    // grad lambda_i is the inward normal of the opposite edge over 2A
    g.grad_lambda[0] = Vec2(p1.y() - p2.y(), p2.x() - p1.x()) * inv;
    g.grad_lambda[1] = Vec2(p2.y() - p0.y(), p0.x() - p2.x()) * inv;
    g.grad_lambda[2] = Vec2(p0.y() - p1.y(), p1.x() - p0.x()) * inv;
    return g;
}

std::array<double, 3> barycentric(const Mesh& mesh, int t, const Vec2& x) {
    const auto& tri = mesh.triangles[t];
    const Vec2 p0 = mesh.nodes[tri[0]], p1 = mesh.nodes[tri[1]], p2 = mesh.nodes[tri[2]];
    const double a = signed_area(p0, p1, p2);
    return {signed_area(x, p1, p2) / a, signed_area(p0, x, p2) / a, signed_area(p0, p1, x) / a};
}

void shape_values(int degree, const std::array<double, 3>& lambda, double* out) {
    switch (degree) {
    case 0:
        out[0] = 1.0;
        return;
    case 1:
        out[0] = lambda[0];
        out[1] = lambda[1];
        out[2] = lambda[2];
        return;
    case 2:
        for (int i = 0; i < 3; ++i) out[i] = lambda[i] * (2.0 * lambda[i] - 1.0);
        out[3] = 4.0 * lambda[1] * lambda[2];
        out[4] = 4.0 * lambda[2] * lambda[0];
        out[5] = 4.0 * lambda[0] * lambda[1];
        return;
    default:
        throw InvalidParameter("unsupported element degree");
    }
}

void shape_gradients(int degree, const std::array<double, 3>& lambda, const Vec2 gl[3], Vec2* out) {
    switch (degree) {
    case 0:
        out[0] = Vec2::Zero();
        return;
    case 1:
        out[0] = gl[0];
        out[1] = gl[1];
        out[2] = gl[2];
        return;
    case 2:
        for (int i = 0; i < 3; ++i) out[i] = (4.0 * lambda[i] - 1.0) * gl[i];
        out[3] = 4.0 * (lambda[1] * gl[2] + lambda[2] * gl[1]);
        out[4] = 4.0 * (lambda[2] * gl[0] + lambda[0] * gl[2]);
        out[5] = 4.0 * (lambda[0] * gl[1] + lambda[1] * gl[0]);
        return;
    default:
        throw InvalidParameter("unsupported element degree");
    }
}

FeSpace build_space(std::shared_ptr<const Mesh> mesh, int degree, bool dirichlet) {
    if (!mesh) throw InvalidParameter("null mesh");
    if (degree < 0 || degree > 2) throw InvalidParameter("degree must be 0, 1 or 2");

    FeSpace s;
    s.mesh = mesh;
    s.degree = degree;
    s.dirichlet = dirichlet && degree >= 1;

    const Mesh& m = *mesh;
    std::vector<bool> constrained;

    if (degree == 0) {
        s.n_dofs = m.n_triangles();
        s.dof_coords.reserve(s.n_dofs);
        for (int t = 0; t < m.n_triangles(); ++t) {
            s.dof_coords.push_back(m.centroid(t));
            s.elem_dofs.push_back({t});
        }
        constrained.assign(s.n_dofs, false);
    } else if (degree == 1) {
        s.n_dofs = m.n_nodes();
        s.dof_coords.assign(m.nodes.begin(), m.nodes.end());
        for (const auto& tri : m.triangles) s.elem_dofs.push_back({tri[0], tri[1], tri[2]});
        constrained.assign(s.n_dofs, false);
        if (s.dirichlet)
            for (int v : m.boundary_nodes) constrained[v] = true;
    } else {
        // P2: vertices first, then edges in order of first appearance
        std::map<std::array<int, 2>, int> edge_id;
        const int nv = m.n_nodes();
        auto edge_dof = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            auto [it, inserted] = edge_id.try_emplace({a, b}, static_cast<int>(edge_id.size()));
            return nv + it->second;
        };
        for (const auto& tri : m.triangles) {
            std::vector<int> dofs = {tri[0], tri[1], tri[2], edge_dof(tri[1], tri[2]),
                                     edge_dof(tri[2], tri[0]), edge_dof(tri[0], tri[1])};
            s.elem_dofs.push_back(std::move(dofs));
        }
        s.n_dofs = nv + static_cast<int>(edge_id.size());
        s.dof_coords.assign(m.nodes.begin(), m.nodes.end());
        s.dof_coords.resize(s.n_dofs);
        for (const auto& [e, id] : edge_id)
            s.dof_coords[nv + id] = 0.5 * (m.nodes[e[0]] + m.nodes[e[1]]);
        constrained.assign(s.n_dofs, false);
        if (s.dirichlet) {
            for (int v : m.boundary_nodes) constrained[v] = true;
            for (auto e : m.boundary_edges) {
                if (e[0] > e[1]) std::swap(e[0], e[1]);
                auto it = edge_id.find({e[0], e[1]});
                if (it != edge_id.end()) constrained[nv + it->second] = true;
            }
        }
    }

    s.full_to_free.assign(s.n_dofs, -1);
    for (int i = 0; i < s.n_dofs; ++i) {
        if (!constrained[i]) {
            s.full_to_free[i] = static_cast<int>(s.free_dofs.size());
            s.free_dofs.push_back(i);
        }
    }
    return s;
}

std::vector<std::vector<int>> FeSpace::dof_to_elements() const {
    std::vector<std::vector<int>> incident(n_dofs);
    for (int t = 0; t < static_cast<int>(elem_dofs.size()); ++t)
        for (int d : elem_dofs[t]) incident[d].push_back(t);
    return incident;
}

std::vector<int> FeSpace::dof_owner_element() const {
    std::vector<int> owner(n_dofs, -1);
    for (int t = 0; t < static_cast<int>(elem_dofs.size()); ++t)
        for (int d : elem_dofs[t])
            if (owner[d] < 0) owner[d] = t; // elements visited in ascending order
    return owner;
}

double evaluate(const FeSpace& space, const Eigen::VectorXd& free_coeffs, const Vec2& x) {
    if (free_coeffs.size() != space.n_free()) throw DimensionMismatch("coefficient vector size");
    const Mesh& m = *space.mesh;
    for (int t = 0; t < m.n_triangles(); ++t) {
        const auto lambda = barycentric(m, t, x);
        if (lambda[0] < -1e-12 || lambda[1] < -1e-12 || lambda[2] < -1e-12) continue;
        double vals[6];
        shape_values(space.degree, lambda, vals);
        double u = 0.0;
        const auto& dofs = space.elem_dofs[t];
        for (std::size_t l = 0; l < dofs.size(); ++l) {
            const int f = space.full_to_free[dofs[l]];
            if (f >= 0) u += free_coeffs[f] * vals[l];
        }
        return u;
    }
    throw InvalidParameter("point outside mesh");
}

} // namespace egfem
