#pragma once

// Per-element P1 integration kernels shared by the full and the masked
// (DEIM-selected) assembly paths. Both paths must produce bitwise identical
// contributions, so all arithmetic for one element lives here.

#include "egfem/assembly.hpp"

namespace egfem::detail {

inline P1ElementData make_element_data(const Mesh& mesh, int t) {
    P1ElementData ed;
    const ElementGeometry geo = element_geometry(mesh, t);
    ed.area = geo.area;
    for (int l = 0; l < 3; ++l) ed.grad_lambda[l] = geo.grad_lambda[l];
    const auto& tri = mesh.triangles[t];
    for (int l = 0; l < 3; ++l) ed.corner[l] = mesh.nodes[tri[l]];
    return ed;
}

// K(a,u) block k[3x3] and the extra Newton block
// dk[i][m] = int (a_u lam_m + a_g . grad lam_m)(grad u . grad lam_i),
// both accumulated row-major.
inline void stiffness_kernel(const P1ElementData& ed, const QuadRule& rule, const PointFunction& a,
                             const double u_loc[3], const Eigen::VectorXd& tau, double* k,
                             double* dk) {
    const Vec2 grad_u = u_loc[0] * ed.grad_lambda[0] + u_loc[1] * ed.grad_lambda[1] +
                        u_loc[2] * ed.grad_lambda[2];
    for (std::size_t qp = 0; qp < rule.size(); ++qp) {
        const auto& lam = rule.points[qp];
        const double w = rule.weights[qp] * ed.area;
        const Vec2 x = lam[0] * ed.corner[0] + lam[1] * ed.corner[1] + lam[2] * ed.corner[2];
        const double uh = u_loc[0] * lam[0] + u_loc[1] * lam[1] + u_loc[2] * lam[2];
        const double av = a.value(x, uh, grad_u, tau);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                k[3 * i + j] += w * av * ed.grad_lambda[j].dot(ed.grad_lambda[i]);
        if (dk) {
            const double au = a.depends_on_u ? a.du(x, uh, grad_u, tau) : 0.0;
            const Vec2 ag = a.depends_on_grad ? a.dgrad(x, uh, grad_u, tau) : Vec2::Zero();
            for (int i = 0; i < 3; ++i) {
                const double gi = grad_u.dot(ed.grad_lambda[i]);
                for (int m = 0; m < 3; ++m) {
                    const double fm = au * lam[m] + ag.dot(ed.grad_lambda[m]);
                    dk[3 * i + m] += w * fm * gi;
                }
            }
        }
    }
}

// l(c,u) entries l[3] and dl[i][m] = int (c_u lam_m + c_g . grad lam_m) test_i
// with test_i = lam_i, or (dx1 + dx2) lam_i in the derivative-test variant.
inline void load_kernel(const P1ElementData& ed, const QuadRule& rule, const PointFunction& c,
                        const double u_loc[3], const Eigen::VectorXd& tau, bool derivative_test,
                        double* l, double* dl) {
    const Vec2 grad_u = u_loc[0] * ed.grad_lambda[0] + u_loc[1] * ed.grad_lambda[1] +
                        u_loc[2] * ed.grad_lambda[2];
    double test_const[3];
    for (int i = 0; i < 3; ++i)
        test_const[i] = ed.grad_lambda[i].x() + ed.grad_lambda[i].y();
    for (std::size_t qp = 0; qp < rule.size(); ++qp) {
        const auto& lam = rule.points[qp];
        const double w = rule.weights[qp] * ed.area;
        const Vec2 x = lam[0] * ed.corner[0] + lam[1] * ed.corner[1] + lam[2] * ed.corner[2];
        const double uh = u_loc[0] * lam[0] + u_loc[1] * lam[1] + u_loc[2] * lam[2];
        const double cv = c.value(x, uh, grad_u, tau);
        const double cu = c.depends_on_u ? c.du(x, uh, grad_u, tau) : 0.0;
        const Vec2 cg = c.depends_on_grad ? c.dgrad(x, uh, grad_u, tau) : Vec2::Zero();
        for (int i = 0; i < 3; ++i) {
            const double ti = derivative_test ? test_const[i] : lam[i];
            l[i] += w * cv * ti;
            if (dl) {
                for (int m = 0; m < 3; ++m) {
                    const double fm = cu * lam[m] + cg.dot(ed.grad_lambda[m]);
                    dl[3 * i + m] += w * fm * ti;
                }
            }
        }
    }
}

} // namespace egfem::detail
