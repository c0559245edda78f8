#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <array>
#include <filesystem>
#include <vector>

namespace egfem {

using SpMat = Eigen::SparseMatrix<double>;

/// Sparse order-3 tensor in coordinate storage. Entries are kept in
/// canonical form: sorted lexicographically by (i, j, k), duplicates merged,
/// exact zeros dropped. Values are immutable after construction.
class SparseTensor3 {
public:
    struct Entry {
        int i, j, k;
        double v;
    };

    SparseTensor3() = default;
    SparseTensor3(int n1, int n2, int n3) : dims_{n1, n2, n3} {}

    /// Canonicalizes: sorts, merges duplicate index triples, drops zeros.
    static SparseTensor3 from_entries(std::array<int, 3> dims, std::vector<Entry> entries);

    const std::array<int, 3>& dims() const { return dims_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    /// [T . v]_{i,j} = sum_k T_{i,j,k} v_k
    SpMat contract1(const Eigen::VectorXd& v) const;

    /// [T : M]_i = sum_{j,k} T_{i,j,k} M_{j,k}
    Eigen::VectorXd contract2(const Eigen::MatrixXd& m) const;

    /// contract2 against the outer product v (x) w without forming it.
    Eigen::VectorXd contract2_outer(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const;

    /// [sum_j T_{i,j,k} v_j] as an (N1 x N3) matrix; the mode-2 analogue of
    /// contract1, used by Jacobians of the group formulations.
    SpMat contract_middle(const Eigen::VectorXd& v) const;

    /// n-mode product (n in {1,2,3}) with A acting on the n-th dimension,
    /// [T x_n A]_{..i_n'..} = sum_{i_n} T[..i_n..] A[i_n', i_n]. A tall
    /// matrix whose row count matches the n-th dimension is applied as its
    /// transpose, so reductions with a projection basis always shrink.
    SparseTensor3 mode_product(const Eigen::MatrixXd& a, int mode) const;

private:
    std::array<int, 3> dims_{0, 0, 0};
    std::vector<Entry> entries_;
};

/// [v (x) w]_{i,j} = v_i w_j
Eigen::MatrixXd outer(const Eigen::VectorXd& v, const Eigen::VectorXd& w);

/// Binary tensor cache format: magic + version + dims header followed by the
/// entry triples, little-endian.
void save_tensor3(const SparseTensor3& t, const std::filesystem::path& path);
SparseTensor3 load_tensor3(const std::filesystem::path& path);

} // namespace egfem
