#include "doctest.h"

#include "egfem/errors.hpp"
#include "egfem/sparse_tensor3.hpp"

#include <filesystem>
#include <random>

using namespace egfem;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

SparseTensor3 random_tensor(std::mt19937& rng, int n1, int n2, int n3, int nnz) {
    std::uniform_int_distribution<int> di(0, n1 - 1), dj(0, n2 - 1), dk(0, n3 - 1);
    std::normal_distribution<double> dv;
    std::vector<SparseTensor3::Entry> entries;
    for (int e = 0; e < nnz; ++e) entries.push_back({di(rng), dj(rng), dk(rng), dv(rng)});
    return SparseTensor3::from_entries({n1, n2, n3}, std::move(entries));
}

VectorXd random_vec(std::mt19937& rng, int n) {
    std::normal_distribution<double> dv;
    VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = dv(rng);
    return v;
}

} // namespace

TEST_CASE("contract1 examples") {
    auto t = SparseTensor3::from_entries({1, 1, 1}, {{0, 0, 0, 2.0}});
    VectorXd v(1);
    v << 3.0;
    MatrixXd m = MatrixXd(t.contract1(v));
    CHECK(m(0, 0) == 6.0);

    auto t2 = SparseTensor3::from_entries({1, 2, 2}, {{0, 1, 0, 1.0}, {0, 1, 1, 2.0}});
    VectorXd ones = VectorXd::Ones(2);
    MatrixXd m2 = MatrixXd(t2.contract1(ones));
    CHECK(m2(0, 1) == 3.0);
    CHECK(m2(0, 0) == 0.0);

    // contracting with e_k extracts the k-th frontal slice
    std::mt19937 rng(7);
    auto t3 = random_tensor(rng, 4, 5, 3, 30);
    for (int k = 0; k < 3; ++k) {
        VectorXd ek = VectorXd::Zero(3);
        ek[k] = 1.0;
        MatrixXd slice = MatrixXd(t3.contract1(ek));
        for (const auto& e : t3.entries())
            if (e.k == k) CHECK(slice(e.i, e.j) == e.v);
    }

    CHECK_THROWS_AS(t3.contract1(VectorXd::Zero(4)), DimensionMismatch);
}

TEST_CASE("contract2 examples") {
    auto t = SparseTensor3::from_entries({1, 1, 1}, {{0, 0, 0, 2.0}});
    MatrixXd m(1, 1);
    m << 3.0;
    CHECK(t.contract2(m)(0) == 6.0);

    auto t2 = SparseTensor3::from_entries({1, 2, 2}, {{0, 0, 0, 1.0}, {0, 1, 1, 1.0}});
    MatrixXd z = MatrixXd::Zero(2, 2);
    CHECK(t2.contract2(z).norm() == 0.0);
    MatrixXd d(2, 2);
    d << 1, 0, 0, 5;
    CHECK(t2.contract2(d)(0) == 6.0);

    CHECK_THROWS_AS(t2.contract2(MatrixXd::Zero(3, 2)), DimensionMismatch);
}

TEST_CASE("outer product examples") {
    VectorXd v(2), w(2);
    v << 1, 2;
    w << 3, 4;
    MatrixXd m = outer(v, w);
    CHECK(m(0, 0) == 3.0);
    CHECK(m(0, 1) == 4.0);
    CHECK(m(1, 0) == 6.0);
    CHECK(m(1, 1) == 8.0);

    VectorXd e0 = VectorXd::Unit(3, 0), e2 = VectorXd::Unit(3, 2);
    MatrixXd s = outer(e0, e2);
    CHECK(s(0, 2) == 1.0);
    CHECK(s.sum() == 1.0);

    CHECK(outer(v, VectorXd::Zero(4)).norm() == 0.0);
}

TEST_CASE("mode_product with the identity leaves the tensor unchanged") {
    std::mt19937 rng(3);
    auto t = random_tensor(rng, 4, 5, 6, 40);
    for (int mode : {1, 2, 3}) {
        const int n = t.dims()[mode - 1];
        auto r = t.mode_product(MatrixXd::Identity(n, n), mode);
        REQUIRE(r.nnz() == t.nnz());
        for (std::size_t e = 0; e < t.nnz(); ++e) {
            CHECK(r.entries()[e].i == t.entries()[e].i);
            CHECK(r.entries()[e].j == t.entries()[e].j);
            CHECK(r.entries()[e].k == t.entries()[e].k);
            CHECK(r.entries()[e].v == doctest::Approx(t.entries()[e].v).epsilon(1e-15));
        }
    }
}

TEST_CASE("mode-3 product with a ones row equals contract1 with ones") {
    std::mt19937 rng(5);
    auto t = random_tensor(rng, 4, 5, 6, 40);
    MatrixXd ones_row = MatrixXd::Ones(1, 6);
    auto r = t.mode_product(ones_row, 3);
    REQUIRE(r.dims()[2] == 1);
    MatrixXd byrow = MatrixXd::Zero(4, 5);
    for (const auto& e : r.entries()) byrow(e.i, e.j) = e.v;
    MatrixXd direct = MatrixXd(t.contract1(VectorXd::Ones(6)));
    CHECK((byrow - direct).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("chained ones contractions produce the total sum") {
    std::mt19937 rng(11);
    auto t = random_tensor(rng, 4, 5, 6, 60);
    double total = 0.0;
    for (const auto& e : t.entries()) total += e.v;
    auto r = t.mode_product(MatrixXd::Ones(1, 4), 1)
                 .mode_product(MatrixXd::Ones(1, 5), 2)
                 .mode_product(MatrixXd::Ones(1, 6), 3);
    REQUIRE(r.dims() == std::array<int, 3>{1, 1, 1});
    REQUIRE(r.nnz() == 1);
    CHECK(r.entries()[0].v == doctest::Approx(total).epsilon(1e-13));
}

TEST_CASE("tall matrices are applied transposed (projection convention)") {
    std::mt19937 rng(13);
    auto t = random_tensor(rng, 6, 6, 6, 50);
    MatrixXd v = MatrixXd::Random(6, 2); // tall basis
    auto a = t.mode_product(v, 1);
    auto b = t.mode_product(MatrixXd(v.transpose()), 1);
    REQUIRE(a.dims()[0] == 2);
    REQUIRE(a.nnz() == b.nnz());
    for (std::size_t e = 0; e < a.nnz(); ++e)
        CHECK(a.entries()[e].v == doctest::Approx(b.entries()[e].v).epsilon(1e-14));
}

TEST_CASE("property: contract2 against outer links the contractions") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = random_tensor(rng, 5, 6, 7, 60);
        VectorXd v = random_vec(rng, 6), w = random_vec(rng, 7);
        VectorXd lhs = t.contract2(outer(v, w));
        VectorXd rhs = t.contract1(w) * v;
        VectorXd rhs2 = t.contract2_outer(v, w);
        const double scale = std::max(1.0, lhs.norm());
        CHECK((lhs - rhs).norm() / scale < 1e-13);
        CHECK((lhs - rhs2).norm() / scale < 1e-13);
    }
}

TEST_CASE("property: mode_product is linear in the matrix") {
    std::mt19937 rng(19);
    auto t = random_tensor(rng, 5, 6, 7, 60);
    MatrixXd a = MatrixXd::Random(3, 6), b = MatrixXd::Random(3, 6);
    auto sum = t.mode_product(a + b, 2);
    auto parts_a = t.mode_product(a, 2), parts_b = t.mode_product(b, 2);
    MatrixXd dense_sum = MatrixXd::Zero(5 * 3, 7), dense_parts = MatrixXd::Zero(5 * 3, 7);
    for (const auto& e : sum.entries()) dense_sum(e.i * 3 + e.j, e.k) = e.v;
    for (const auto& e : parts_a.entries()) dense_parts(e.i * 3 + e.j, e.k) += e.v;
    for (const auto& e : parts_b.entries()) dense_parts(e.i * 3 + e.j, e.k) += e.v;
    CHECK((dense_sum - dense_parts).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("property: mode products along distinct modes commute") {
    std::mt19937 rng(23);
    auto t = random_tensor(rng, 5, 6, 7, 60);
    MatrixXd a = MatrixXd::Random(3, 5), b = MatrixXd::Random(4, 6);
    auto ab = t.mode_product(a, 1).mode_product(b, 2);
    auto ba = t.mode_product(b, 2).mode_product(a, 1);
    REQUIRE(ab.dims() == ba.dims());
    MatrixXd d1 = MatrixXd::Zero(3 * 4, 7), d2 = MatrixXd::Zero(3 * 4, 7);
    for (const auto& e : ab.entries()) d1(e.i * 4 + e.j, e.k) = e.v;
    for (const auto& e : ba.entries()) d2(e.i * 4 + e.j, e.k) = e.v;
    CHECK((d1 - d2).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("canonicalization merges duplicates and drops zeros") {
    auto t = SparseTensor3::from_entries(
        {2, 2, 2}, {{1, 1, 1, 2.0}, {0, 0, 0, 1.0}, {1, 1, 1, -2.0}, {0, 1, 0, 3.0}});
    REQUIRE(t.nnz() == 2);
    CHECK(t.entries()[0].i == 0);
    CHECK(t.entries()[0].v == 1.0);
    CHECK(t.entries()[1].j == 1);
    CHECK(t.entries()[1].v == 3.0);

    CHECK_THROWS_AS(SparseTensor3::from_entries({2, 2, 2}, {{2, 0, 0, 1.0}}), DimensionMismatch);
}

TEST_CASE("binary dump / load round-trip") {
    std::mt19937 rng(29);
    auto t = random_tensor(rng, 9, 4, 11, 70);
    const auto p = std::filesystem::temp_directory_path() / "egfem_tensor.bin";
    save_tensor3(t, p);
    auto back = load_tensor3(p);
    REQUIRE(back.dims() == t.dims());
    REQUIRE(back.nnz() == t.nnz());
    for (std::size_t e = 0; e < t.nnz(); ++e) CHECK(back.entries()[e].v == t.entries()[e].v);
}
