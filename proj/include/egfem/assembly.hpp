#pragma once

#include "egfem/fe_space.hpp"
#include "egfem/interpolation.hpp"
#include "egfem/quadrature.hpp"
#include "egfem/sparse_tensor3.hpp"

#include <Eigen/SparseCore>

#include <functional>
#include <utility>

namespace egfem {

/// Scalar coefficient f(x, u, grad u; tau) with analytic partial derivatives.
/// tau is the parameter vector mu, or [t] for time-dependent problems.
struct PointFunction {
    using Fn = std::function<double(const Vec2&, double, const Vec2&, const Eigen::VectorXd&)>;
    using GradFn = std::function<Vec2(const Vec2&, double, const Vec2&, const Eigen::VectorXd&)>;

    Fn value;
    Fn du;        // df/du, used when depends_on_u
    GradFn dgrad; // df/d(grad u), used when depends_on_grad
    bool depends_on_u = false;
    bool depends_on_grad = false;
};

/// Coefficients of the continuous problem
///   -div(a(x,u,grad u; mu) grad u) + c(x,u,grad u; mu) = q(x; mu).
struct ProblemDefinition {
    bool a_constant = true;
    double a_value = 1.0;
    PointFunction a; // used when !a_constant
    bool c_present = false;
    PointFunction c;
    std::function<double(const Vec2&, const Eigen::VectorXd&)> q;
    double nu = 0.0;             // Burgers viscosity
    Eigen::MatrixXd param_box;   // p x 2 parameter bounds
};

struct LinearOperators {
    SpMat mass;      // E
    SpMat stiffness; // K
};

struct SgaNonlinear {
    SpMat k_nl;           // K(a, u; tau)
    Eigen::VectorXd l_nl; // l(c, u; tau)
    SpMat dk;             // d/du [K(a,u) u] - K(a,u)
    SpMat dl;             // d/du l(c, u)
};

enum class GroupVariant { standard, derivative_test, ml_tensor };

/// Precomputed group operators of the extended group formulation.
struct GroupOperators {
    SparseTensor3 k_a; // [K^a]_{i,j,k} = int eta_k^a grad phi_j . grad phi_i
    SpMat l_c;         // [L^c]_{i,j}  = int eta_j^c phi_i
    SpMat m_c;         // derivative-test variant: int eta_j^c (dx1 + dx2) phi_i
    SparseTensor3 ml;  // [M]_{i,j,k}  = int phi_k phi_j (dx1 + dx2) phi_i
    InterpolationOps ops_a, ops_c;
};

/// Geometry of one P1 element as used by the integration kernels.
struct P1ElementData {
    double area;
    Vec2 grad_lambda[3];
    Vec2 corner[3];
};

/// Repeated standard Galerkin assembly over one P1 solution space. Element
/// geometry, quadrature data and the sparsity pattern are precomputed once;
/// element contributions accumulate in ascending element order, which makes
/// assembled values bitwise reproducible.
class SgaAssembler {
public:
    explicit SgaAssembler(const FeSpace& v, int quad_degree = 4);

    const FeSpace& space() const { return *v_; }

    LinearOperators linear() const;
    Eigen::VectorXd source(const std::function<double(const Vec2&, const Eigen::VectorXd&)>& q,
                           const Eigen::VectorXd& tau) const;

    /// K(a,u) and dK; throws NonFiniteValue on NaN/Inf integrands.
    std::pair<SpMat, SpMat> stiffness_nl(const PointFunction& a, const Eigen::VectorXd& u,
                                         const Eigen::VectorXd& tau) const;

    /// l(c,u) and dl; with derivative_test the test function is
    /// (dx1 + dx2) phi_i instead of phi_i.
    std::pair<Eigen::VectorXd, SpMat> load_nl(const PointFunction& c, const Eigen::VectorXd& u,
                                              const Eigen::VectorXd& tau,
                                              bool derivative_test = false) const;

private:
    friend class MaskedAssembler;

    const FeSpace* v_;
    const QuadRule* rule_;
    std::vector<P1ElementData> elems_;

    // fixed free x free sparsity: per element, flat positions of the 3x3 block
    std::vector<int> pattern_outer_, pattern_inner_;
    std::vector<std::array<int, 9>> elem_slots_;

    SpMat matrix_from_values(const std::vector<double>& values) const;
    void gather_local(const Eigen::VectorXd& u, int t, double* u_loc) const;
};

LinearOperators assemble_linear(const FeSpace& v);

Eigen::VectorXd assemble_source(const FeSpace& v,
                                const std::function<double(const Vec2&, const Eigen::VectorXd&)>& q,
                                const Eigen::VectorXd& tau);

SgaNonlinear assemble_sga_nonlinear(const FeSpace& v, const ProblemDefinition& p,
                                    const Eigen::VectorXd& u, const Eigen::VectorXd& tau,
                                    bool derivative_test = false);

/// Burgers convection load m(d, u; t) and its Jacobian.
std::pair<Eigen::VectorXd, SpMat> assemble_derivative_load(const FeSpace& v,
                                                           const PointFunction& d,
                                                           const Eigen::VectorXd& u,
                                                           const Eigen::VectorXd& tau);

GroupOperators assemble_group(const FeSpace& v, const FeSpace& w_a, const FeSpace& w_c,
                              GroupVariant variant);

/// Point-wise coefficient vector f(u) at the W_h dofs and its sparse
/// Jacobian diag(df/du) Pi_u + sum_m diag(df/dg_m) Pi_{grad,m}.
std::pair<Eigen::VectorXd, SpMat> eval_point_nonlinearity(const InterpolationOps& ops,
                                                          const PointFunction& f,
                                                          const Eigen::VectorXd& u,
                                                          const Eigen::VectorXd& tau);

} // namespace egfem
