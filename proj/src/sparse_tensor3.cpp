#include "egfem/sparse_tensor3.hpp"

#include "egfem/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <tuple>

namespace egfem {

SparseTensor3 SparseTensor3::from_entries(std::array<int, 3> dims, std::vector<Entry> entries) {
    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= dims[0] || e.j < 0 || e.j >= dims[1] || e.k < 0 || e.k >= dims[2])
            throw DimensionMismatch("tensor entry index out of range");
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    SparseTensor3 t(dims[0], dims[1], dims[2]);
    t.entries_.reserve(entries.size());
    for (const auto& e : entries) {
        if (!t.entries_.empty()) {
            Entry& last = t.entries_.back();
            if (last.i == e.i && last.j == e.j && last.k == e.k) {
                last.v += e.v;
                continue;
            }
        }
        t.entries_.push_back(e);
    }
    std::erase_if(t.entries_, [](const Entry& e) { return e.v == 0.0; });
    return t;
}

SpMat SparseTensor3::contract1(const Eigen::VectorXd& v) const {
    if (v.size() != dims_[2]) throw DimensionMismatch("contract1: vector length != N3");
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(entries_.size());
    for (const auto& e : entries_) trips.emplace_back(e.i, e.j, e.v * v[e.k]);
    SpMat out(dims_[0], dims_[1]);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

Eigen::VectorXd SparseTensor3::contract2(const Eigen::MatrixXd& m) const {
    if (m.rows() != dims_[1] || m.cols() != dims_[2])
        throw DimensionMismatch("contract2: matrix shape != (N2, N3)");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dims_[0]);
    for (const auto& e : entries_) out[e.i] += e.v * m(e.j, e.k);
    return out;
}

Eigen::VectorXd SparseTensor3::contract2_outer(const Eigen::VectorXd& v,
                                               const Eigen::VectorXd& w) const {
    if (v.size() != dims_[1] || w.size() != dims_[2])
        throw DimensionMismatch("contract2_outer: vector lengths != (N2, N3)");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dims_[0]);
    for (const auto& e : entries_) out[e.i] += e.v * v[e.j] * w[e.k];
    return out;
}

SpMat SparseTensor3::contract_middle(const Eigen::VectorXd& v) const {
    if (v.size() != dims_[1]) throw DimensionMismatch("contract_middle: vector length != N2");
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(entries_.size());
    for (const auto& e : entries_) trips.emplace_back(e.i, e.k, e.v * v[e.j]);
    SpMat out(dims_[0], dims_[2]);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

SparseTensor3 SparseTensor3::mode_product(const Eigen::MatrixXd& a, int mode) const {
    if (mode < 1 || mode > 3) throw DimensionMismatch("mode must be 1, 2 or 3");
    const int n = dims_[mode - 1];

    Eigen::MatrixXd op;
    if (a.cols() == n) {
        op = a;
    } else if (a.rows() == n) {
        op = a.transpose(); // tall-matrix convention: project, dimensions shrink
    } else {
        throw DimensionMismatch("mode_product: matrix does not match dimension " +
                                std::to_string(n));
    }
    const int m = static_cast<int>(op.rows());

    std::vector<Entry> out;
    out.reserve(entries_.size() * static_cast<std::size_t>(m));
    for (const auto& e : entries_) {
        const int idx = mode == 1 ? e.i : (mode == 2 ? e.j : e.k);
        for (int r = 0; r < m; ++r) {
            const double val = op(r, idx) * e.v;
            if (val == 0.0) continue;
            Entry ne = e;
            (mode == 1 ? ne.i : (mode == 2 ? ne.j : ne.k)) = r;
            ne.v = val;
            out.push_back(ne);
        }
    }
    std::array<int, 3> nd = dims_;
    nd[mode - 1] = m;
    return from_entries(nd, std::move(out));
}

Eigen::MatrixXd outer(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    return v * w.transpose();
}

namespace {

constexpr char kMagic[8] = {'E', 'G', 'F', 'T', 'N', 'S', '3', '\0'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void write_pod(std::ostream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T read_pod(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw MalformedFile("truncated tensor file");
    return value;
}

} // namespace

void save_tensor3(const SparseTensor3& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write tensor file '" + path.string() + "'");
    out.write(kMagic, sizeof(kMagic));
    write_pod(out, kVersion);
    for (int d : t.dims()) write_pod(out, static_cast<std::uint32_t>(d));
    write_pod(out, static_cast<std::uint64_t>(t.nnz()));
    for (const auto& e : t.entries()) {
        write_pod(out, static_cast<std::uint32_t>(e.i));
        write_pod(out, static_cast<std::uint32_t>(e.j));
        write_pod(out, static_cast<std::uint32_t>(e.k));
        write_pod(out, e.v);
    }
    if (!out) throw IoError("failed writing tensor file '" + path.string() + "'");
}

SparseTensor3 load_tensor3(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open tensor file '" + path.string() + "'");
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw MalformedFile("not a tensor cache file");
    const auto version = read_pod<std::uint32_t>(in);
    if (version != kVersion)
        throw UnsupportedFormat("tensor cache version " + std::to_string(version));
    std::array<int, 3> dims;
    for (int& d : dims) d = static_cast<int>(read_pod<std::uint32_t>(in));
    const auto nnz = read_pod<std::uint64_t>(in);
    std::vector<SparseTensor3::Entry> entries;
    entries.reserve(nnz);
    for (std::uint64_t n = 0; n < nnz; ++n) {
        SparseTensor3::Entry e;
        e.i = static_cast<int>(read_pod<std::uint32_t>(in));
        e.j = static_cast<int>(read_pod<std::uint32_t>(in));
        e.k = static_cast<int>(read_pod<std::uint32_t>(in));
        e.v = read_pod<double>(in);
        entries.push_back(e);
    }
    return SparseTensor3::from_entries(dims, std::move(entries));
}

} // namespace egfem
