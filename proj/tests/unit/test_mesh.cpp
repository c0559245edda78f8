#include "doctest.h"

#include "egfem/errors.hpp"
#include "egfem/fe_space.hpp"
#include "egfem/mesh.hpp"
#include "egfem/msh_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

using namespace egfem;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

const char* kSquareMsh =
    "$MeshFormat\n"
    "2.2 0 8\n"
    "$EndMeshFormat\n"
    "$Nodes\n"
    "4\n"
    "1 0 0 0\n"
    "2 1 0 0\n"
    "3 1 1 0\n"
    "4 0 1 0\n"
    "$EndNodes\n"
    "$Elements\n"
    "2\n"
    "1 2 2 1 1 1 2 3\n"
    "2 2 2 1 1 1 3 4\n"
    "$EndElements\n";

} // namespace

TEST_CASE("load_msh reads the minimal two-triangle square") {
    const auto p = write_temp("egfem_square.msh", kSquareMsh);
    const Mesh mesh = load_msh(p);
    CHECK(mesh.n_nodes() == 4);
    CHECK(mesh.n_triangles() == 2);
    CHECK(mesh.area() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(mesh.boundary_edges.size() == 4);
    CHECK(mesh.boundary_nodes.size() == 4);
}

TEST_CASE("load_msh reorients clockwise triangles") {
    std::string content = kSquareMsh;
    // list the first triangle clockwise: 1 3 2
    auto pos = content.find("1 2 2 1 1 1 2 3");
    content.replace(pos, 15, "1 2 2 1 1 1 3 2");
    const auto p = write_temp("egfem_cw.msh", content);
    const Mesh mesh = load_msh(p);
    for (int t = 0; t < mesh.n_triangles(); ++t) CHECK(mesh.triangle_area(t) > 0.0);
    std::set<int> verts(mesh.triangles[0].begin(), mesh.triangles[0].end());
    CHECK(verts == std::set<int>{0, 1, 2});
}

TEST_CASE("load_msh rejects MSH 4.1") {
    std::string content = kSquareMsh;
    content.replace(content.find("2.2 0 8"), 7, "4.1 0 8");
    const auto p = write_temp("egfem_41.msh", content);
    CHECK_THROWS_AS(load_msh(p), UnsupportedFormat);
}

TEST_CASE("load_msh rejects inconsistent counts") {
    std::string content = kSquareMsh;
    content.replace(content.find("$Nodes\n4\n"), 9, "$Nodes\n5\n");
    const auto p = write_temp("egfem_bad.msh", content);
    CHECK_THROWS_AS(load_msh(p), MalformedFile);
}

TEST_CASE("save_msh / load_msh round-trips a generated mesh") {
    const Mesh mesh = generate_unit_square(3);
    const auto p = fs::temp_directory_path() / "egfem_roundtrip.msh";
    save_msh(mesh, p);
    const Mesh back = load_msh(p);
    REQUIRE(back.n_nodes() == mesh.n_nodes());
    REQUIRE(back.n_triangles() == mesh.n_triangles());
    CHECK(back.boundary_edges == mesh.boundary_edges);
    for (int i = 0; i < mesh.n_nodes(); ++i)
        CHECK((back.nodes[i] - mesh.nodes[i]).norm() == doctest::Approx(0.0));
}

TEST_CASE("generate_unit_square basics") {
    const Mesh m1 = generate_unit_square(1);
    CHECK(m1.n_nodes() == 4);
    CHECK(m1.n_triangles() == 2);
    CHECK(m1.area() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(generate_unit_square(0), InvalidParameter);
}

TEST_CASE("unit_square(66) has 4225 free P1 vertices") {
    auto mesh = std::make_shared<const Mesh>(generate_unit_square(66));
    const FeSpace v = build_space(mesh, 1, true);
    CHECK(v.n_free() == 4225);
}

TEST_CASE("generated meshes have consistent area and boundary") {
    for (int n : {1, 2, 7}) {
        const Mesh m = generate_unit_square(n);
        CHECK(std::abs(m.area() - 1.0) < 1e-12);
        auto topo = topological_boundary(m);
        CHECK(topo == m.boundary_edges);
    }
}

TEST_CASE("generate_unit_disk") {
    CHECK_THROWS_AS(generate_unit_disk(0.0), InvalidParameter);
    CHECK_THROWS_AS(generate_unit_disk(-1.0), InvalidParameter);

    const Mesh disk = generate_unit_disk(0.5);
    // triangle-area sum vs pi (polygonal approximation, coarse)
    CHECK(std::abs(disk.area() - std::numbers::pi) / std::numbers::pi < 0.05);

    // triangle-area sum equals the shoelace area of the boundary polygon
    double poly = 0.0;
    const int nb = static_cast<int>(disk.boundary_nodes.size());
    std::vector<int> ring = disk.boundary_nodes;
    std::sort(ring.begin(), ring.end(), [&](int a, int b) {
        return std::atan2(disk.nodes[a].y(), disk.nodes[a].x()) <
               std::atan2(disk.nodes[b].y(), disk.nodes[b].x());
    });
    for (int i = 0; i < nb; ++i) {
        const Vec2 a = disk.nodes[ring[i]];
        const Vec2 b = disk.nodes[ring[(i + 1) % nb]];
        poly += 0.5 * (a.x() * b.y() - a.y() * b.x());
    }
    CHECK(std::abs(disk.area() - poly) / poly < 1e-12);

    const Mesh fine = generate_unit_disk(0.1);
    CHECK(std::abs(fine.area() - std::numbers::pi) / std::numbers::pi < 0.005);
    for (int t = 0; t < fine.n_triangles(); ++t) CHECK(fine.triangle_area(t) > 0.0);
    CHECK(topological_boundary(fine) == fine.boundary_edges);
}
