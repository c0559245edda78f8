#include "egfem/assembly.hpp"

#include "egfem/errors.hpp"
#include "element_kernels.hpp"

#include <algorithm>
#include <map>

namespace egfem {

namespace {

bool finite(const SpMat& m) {
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMat::InnerIterator it(m, k); it; ++it)
            if (!std::isfinite(it.value())) return false;
    return true;
}

} // namespace

SgaAssembler::SgaAssembler(const FeSpace& v, int quad_degree) : v_(&v) {
    if (v.degree != 1) throw InvalidParameter("SGA assembly requires a P1 solution space");
    rule_ = &triangle_rule(quad_degree);

    const Mesh& mesh = *v.mesh;
    const int ne = mesh.n_triangles();
    elems_.reserve(ne);
    for (int t = 0; t < ne; ++t) {
        elems_.push_back(detail::make_element_data(mesh, t));
    }

    // free x free sparsity from element connectivity
    const int n = v.n_free();
    std::vector<std::map<int, int>> rows(n); // col -> slot (filled later)
    for (int t = 0; t < ne; ++t) {
        const auto& dofs = v.elem_dofs[t];
        for (int li = 0; li < 3; ++li) {
            const int fi = v.full_to_free[dofs[li]];
            if (fi < 0) continue;
            for (int lj = 0; lj < 3; ++lj) {
                const int fj = v.full_to_free[dofs[lj]];
                if (fj >= 0) rows[fi].emplace(fj, 0);
            }
        }
    }
    pattern_outer_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) pattern_outer_[i + 1] = pattern_outer_[i] + static_cast<int>(rows[i].size());
    pattern_inner_.resize(pattern_outer_[n]);
    for (int i = 0; i < n; ++i) {
        int pos = pattern_outer_[i];
        for (auto& [col, slot] : rows[i]) {
            slot = pos;
            pattern_inner_[pos++] = col;
        }
    }
    elem_slots_.resize(ne);
    for (int t = 0; t < ne; ++t) {
        const auto& dofs = v.elem_dofs[t];
        for (int li = 0; li < 3; ++li) {
            const int fi = v.full_to_free[dofs[li]];
            for (int lj = 0; lj < 3; ++lj) {
                const int fj = v.full_to_free[dofs[lj]];
                elem_slots_[t][3 * li + lj] =
                    (fi >= 0 && fj >= 0) ? rows[fi].at(fj) : -1;
            }
        }
    }
}

SpMat SgaAssembler::matrix_from_values(const std::vector<double>& values) const {
    const int n = v_->n_free();
    SpMat m(n, n);
    m.reserve(Eigen::VectorXi::Map(pattern_outer_.data() + 1, n) -
              Eigen::VectorXi::Map(pattern_outer_.data(), n));
    for (int i = 0; i < n; ++i)
        for (int p = pattern_outer_[i]; p < pattern_outer_[i + 1]; ++p)
            m.insert(i, pattern_inner_[p]) = values[p];
    m.makeCompressed();
    return m;
}

void SgaAssembler::gather_local(const Eigen::VectorXd& u, int t, double* u_loc) const {
    const auto& dofs = v_->elem_dofs[t];
    for (int l = 0; l < 3; ++l) {
        const int f = v_->full_to_free[dofs[l]];
        u_loc[l] = f >= 0 ? u[f] : 0.0;
    }
}

LinearOperators assemble_linear(const FeSpace& v) {
    return SgaAssembler(v).linear();
}

LinearOperators SgaAssembler::linear() const {
    const int ne = static_cast<int>(elems_.size());
    std::vector<double> mass_vals(pattern_inner_.size(), 0.0);
    std::vector<double> stiff_vals(pattern_inner_.size(), 0.0);
    const QuadRule& rule = triangle_rule(2); // exact for P1 x P1
    for (int t = 0; t < ne; ++t) {
        const P1ElementData& ed = elems_[t];
        for (int li = 0; li < 3; ++li) {
            for (int lj = 0; lj < 3; ++lj) {
                const int slot = elem_slots_[t][3 * li + lj];
                if (slot < 0) continue;
                double mij = 0.0;
                for (std::size_t qp = 0; qp < rule.size(); ++qp)
                    mij += rule.weights[qp] * rule.points[qp][li] * rule.points[qp][lj];
                mass_vals[slot] += ed.area * mij;
                stiff_vals[slot] += ed.area * ed.grad_lambda[lj].dot(ed.grad_lambda[li]);
            }
        }
    }
    return {matrix_from_values(mass_vals), matrix_from_values(stiff_vals)};
}

Eigen::VectorXd SgaAssembler::source(
    const std::function<double(const Vec2&, const Eigen::VectorXd&)>& q,
    const Eigen::VectorXd& tau) const {
    const FeSpace& v = *v_;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(v.n_free());
    for (int t = 0; t < static_cast<int>(elems_.size()); ++t) {
        const P1ElementData& ed = elems_[t];
        const auto& dofs = v.elem_dofs[t];
        for (std::size_t qp = 0; qp < rule_->size(); ++qp) {
            const auto& lam = rule_->points[qp];
            const double w = rule_->weights[qp] * ed.area;
            const Vec2 x = lam[0] * ed.corner[0] + lam[1] * ed.corner[1] + lam[2] * ed.corner[2];
            const double qv = q(x, tau);
            for (int l = 0; l < 3; ++l) {
                const int f = v.full_to_free[dofs[l]];
                if (f >= 0) out[f] += w * qv * lam[l];
            }
        }
    }
    if (!out.allFinite()) throw NonFiniteValue("source assembly produced NaN/Inf");
    return out;
}

std::pair<SpMat, SpMat> SgaAssembler::stiffness_nl(const PointFunction& a,
                                                   const Eigen::VectorXd& u,
                                                   const Eigen::VectorXd& tau) const {
    if (u.size() != v_->n_free()) throw DimensionMismatch("state size != free dofs");
    std::vector<double> k_vals(pattern_inner_.size(), 0.0);
    std::vector<double> dk_vals(pattern_inner_.size(), 0.0);
    for (int t = 0; t < static_cast<int>(elems_.size()); ++t) {
        const P1ElementData& ed = elems_[t];
        double u_loc[3];
        gather_local(u, t, u_loc);
        double k[9] = {0}, dk[9] = {0};
        detail::stiffness_kernel(ed, *rule_, a, u_loc, tau, k, dk);
        for (int p = 0; p < 9; ++p) {
            const int slot = elem_slots_[t][p];
            if (slot < 0) continue;
            k_vals[slot] += k[p];
            dk_vals[slot] += dk[p];
        }
    }
    SpMat k = matrix_from_values(k_vals), dk = matrix_from_values(dk_vals);
    if (!finite(k) || !finite(dk)) throw NonFiniteValue("stiffness integrand produced NaN/Inf");
    return {std::move(k), std::move(dk)};
}

std::pair<Eigen::VectorXd, SpMat> SgaAssembler::load_nl(const PointFunction& c,
                                                        const Eigen::VectorXd& u,
                                                        const Eigen::VectorXd& tau,
                                                        bool derivative_test) const {
    if (u.size() != v_->n_free()) throw DimensionMismatch("state size != free dofs");
    const FeSpace& v = *v_;
    Eigen::VectorXd l_out = Eigen::VectorXd::Zero(v.n_free());
    std::vector<double> dl_vals(pattern_inner_.size(), 0.0);
    for (int t = 0; t < static_cast<int>(elems_.size()); ++t) {
        const P1ElementData& ed = elems_[t];
        double u_loc[3];
        gather_local(u, t, u_loc);
        double l[3] = {0}, dl[9] = {0};
        detail::load_kernel(ed, *rule_, c, u_loc, tau, derivative_test, l, dl);
        const auto& dofs = v.elem_dofs[t];
        for (int li = 0; li < 3; ++li) {
            const int f = v.full_to_free[dofs[li]];
            if (f >= 0) l_out[f] += l[li];
            for (int lj = 0; lj < 3; ++lj) {
                const int slot = elem_slots_[t][3 * li + lj];
                if (slot >= 0) dl_vals[slot] += dl[3 * li + lj];
            }
        }
    }
    SpMat dl = matrix_from_values(dl_vals);
    if (!l_out.allFinite() || !finite(dl)) throw NonFiniteValue("load integrand produced NaN/Inf");
    return {std::move(l_out), std::move(dl)};
}

Eigen::VectorXd assemble_source(const FeSpace& v,
                                const std::function<double(const Vec2&, const Eigen::VectorXd&)>& q,
                                const Eigen::VectorXd& tau) {
    return SgaAssembler(v).source(q, tau);
}

SgaNonlinear assemble_sga_nonlinear(const FeSpace& v, const ProblemDefinition& p,
                                    const Eigen::VectorXd& u, const Eigen::VectorXd& tau,
                                    bool derivative_test) {
    SgaAssembler asmb(v);
    SgaNonlinear out;
    if (p.a_constant) {
        out.k_nl = p.a_value * asmb.linear().stiffness;
        out.dk = SpMat(v.n_free(), v.n_free());
    } else {
        std::tie(out.k_nl, out.dk) = asmb.stiffness_nl(p.a, u, tau);
    }
    if (p.c_present) {
        std::tie(out.l_nl, out.dl) = asmb.load_nl(p.c, u, tau, derivative_test);
    } else {
        out.l_nl = Eigen::VectorXd::Zero(v.n_free());
        out.dl = SpMat(v.n_free(), v.n_free());
    }
    return out;
}

std::pair<Eigen::VectorXd, SpMat> assemble_derivative_load(const FeSpace& v,
                                                           const PointFunction& d,
                                                           const Eigen::VectorXd& u,
                                                           const Eigen::VectorXd& tau) {
    return SgaAssembler(v).load_nl(d, u, tau, true);
}

GroupOperators assemble_group(const FeSpace& v, const FeSpace& w_a, const FeSpace& w_c,
                              GroupVariant variant) {
    if (!v.same_mesh(w_a) || !v.same_mesh(w_c)) throw MeshMismatch("group spaces share no mesh");
    if (v.degree != 1) throw InvalidParameter("group assembly requires a P1 solution space");

    const Mesh& mesh = *v.mesh;
    const int n_u = v.n_free();
    GroupOperators out;
    out.ops_a = build_interpolation(v, w_a);
    out.ops_c = build_interpolation(v, w_c);

    if (variant == GroupVariant::ml_tensor) {
        const QuadRule& rule = triangle_rule(2);
        std::vector<SparseTensor3::Entry> entries;
        entries.reserve(mesh.n_triangles() * 27u);
        for (int t = 0; t < mesh.n_triangles(); ++t) {
            const ElementGeometry geo = element_geometry(mesh, t);
            const auto& dofs = v.elem_dofs[t];
            double test_const[3];
            for (int i = 0; i < 3; ++i)
                test_const[i] = geo.grad_lambda[i].x() + geo.grad_lambda[i].y();
            for (int li = 0; li < 3; ++li) {
                const int fi = v.full_to_free[dofs[li]];
                if (fi < 0) continue;
                for (int lj = 0; lj < 3; ++lj) {
                    const int fj = v.full_to_free[dofs[lj]];
                    if (fj < 0) continue;
                    for (int lk = 0; lk < 3; ++lk) {
                        const int fk = v.full_to_free[dofs[lk]];
                        if (fk < 0) continue;
                        double val = 0.0;
                        for (std::size_t qp = 0; qp < rule.size(); ++qp)
                            val += rule.weights[qp] * rule.points[qp][lj] * rule.points[qp][lk];
                        entries.push_back({fi, fj, fk, geo.area * val * test_const[li]});
                    }
                }
            }
        }
        out.ml = SparseTensor3::from_entries({n_u, n_u, n_u}, std::move(entries));
        return out;
    }

    // K^a over W_a
    {
        const FeSpace& w = w_a;
        const int n_a = w.n_free();
        const QuadRule& rule = triangle_rule(std::max(2, 2 * w.degree));
        std::vector<SparseTensor3::Entry> entries;
        for (int t = 0; t < mesh.n_triangles(); ++t) {
            const ElementGeometry geo = element_geometry(mesh, t);
            const auto& vdofs = v.elem_dofs[t];
            const auto& wdofs = w.elem_dofs[t];
            const int nw = static_cast<int>(wdofs.size());
            // int_T eta_k for every local W dof
            std::vector<double> eta_int(nw, 0.0);
            for (std::size_t qp = 0; qp < rule.size(); ++qp) {
                double vals[6];
                shape_values(w.degree, rule.points[qp], vals);
                for (int lk = 0; lk < nw; ++lk)
                    eta_int[lk] += rule.weights[qp] * vals[lk] * geo.area;
            }
            for (int li = 0; li < 3; ++li) {
                const int fi = v.full_to_free[vdofs[li]];
                if (fi < 0) continue;
                for (int lj = 0; lj < 3; ++lj) {
                    const int fj = v.full_to_free[vdofs[lj]];
                    if (fj < 0) continue;
                    const double gg = geo.grad_lambda[lj].dot(geo.grad_lambda[li]);
                    for (int lk = 0; lk < nw; ++lk) {
                        const int fk = w.full_to_free[wdofs[lk]];
                        if (fk < 0) continue;
                        if (eta_int[lk] * gg != 0.0)
                            entries.push_back({fi, fj, fk, eta_int[lk] * gg});
                    }
                }
            }
        }
        out.k_a = SparseTensor3::from_entries({n_u, n_u, n_a}, std::move(entries));
    }

    // L^c (or the derivative-test M^c) over W_c
    {
        const FeSpace& w = w_c;
        const int n_c = w.n_free();
        const bool deriv = variant == GroupVariant::derivative_test;
        const QuadRule& rule = triangle_rule(std::max(2, w.degree + 1));
        std::vector<Eigen::Triplet<double>> trips;
        for (int t = 0; t < mesh.n_triangles(); ++t) {
            const ElementGeometry geo = element_geometry(mesh, t);
            const auto& vdofs = v.elem_dofs[t];
            const auto& wdofs = w.elem_dofs[t];
            const int nw = static_cast<int>(wdofs.size());
            double test_const[3];
            for (int i = 0; i < 3; ++i)
                test_const[i] = geo.grad_lambda[i].x() + geo.grad_lambda[i].y();
            for (int li = 0; li < 3; ++li) {
                const int fi = v.full_to_free[vdofs[li]];
                if (fi < 0) continue;
                for (int lj = 0; lj < nw; ++lj) {
                    const int fj = w.full_to_free[wdofs[lj]];
                    if (fj < 0) continue;
                    double val = 0.0;
                    for (std::size_t qp = 0; qp < rule.size(); ++qp) {
                        double vals[6];
                        shape_values(w.degree, rule.points[qp], vals);
                        const double ti = deriv ? test_const[li] : rule.points[qp][li];
                        val += rule.weights[qp] * vals[lj] * ti;
                    }
                    trips.emplace_back(fi, fj, geo.area * val);
                }
            }
        }
        SpMat m(n_u, n_c);
        m.setFromTriplets(trips.begin(), trips.end());
        if (deriv)
            out.m_c = std::move(m);
        else
            out.l_c = std::move(m);
    }
    return out;
}

std::pair<Eigen::VectorXd, SpMat> eval_point_nonlinearity(const InterpolationOps& ops,
                                                          const PointFunction& f,
                                                          const Eigen::VectorXd& u,
                                                          const Eigen::VectorXd& tau) {
    if (u.size() != ops.pi_u.cols()) throw DimensionMismatch("state size != free dofs");
    const int n_f = ops.n_points();
    const Eigen::VectorXd up = ops.pi_u * u;
    const Eigen::VectorXd gx = ops.pi_gx * u;
    const Eigen::VectorXd gy = ops.pi_gy * u;

    Eigen::VectorXd vals(n_f), du(n_f), dgx(n_f), dgy(n_f);
    for (int k = 0; k < n_f; ++k) {
        const Vec2 g(gx[k], gy[k]);
        vals[k] = f.value(ops.coords[k], up[k], g, tau);
        du[k] = f.depends_on_u ? f.du(ops.coords[k], up[k], g, tau) : 0.0;
        if (f.depends_on_grad) {
            const Vec2 dg = f.dgrad(ops.coords[k], up[k], g, tau);
            dgx[k] = dg.x();
            dgy[k] = dg.y();
        } else {
            dgx[k] = dgy[k] = 0.0;
        }
    }
    if (!vals.allFinite()) throw NonFiniteValue("point nonlinearity produced NaN/Inf");

    SpMat jac = du.asDiagonal() * ops.pi_u;
    if (f.depends_on_grad) {
        jac = jac + SpMat(dgx.asDiagonal() * ops.pi_gx);
        jac = jac + SpMat(dgy.asDiagonal() * ops.pi_gy);
    }
    if (!finite(jac)) throw NonFiniteValue("point nonlinearity Jacobian produced NaN/Inf");
    return {std::move(vals), std::move(jac)};
}

} // namespace egfem
