#include "egfem/mesh.hpp"

#include "egfem/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

namespace egfem {

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

double Mesh::triangle_area(int t) const {
    const auto& tri = triangles[t];
    return signed_area(nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]);
}

Vec2 Mesh::centroid(int t) const {
    const auto& tri = triangles[t];
    return (nodes[tri[0]] + nodes[tri[1]] + nodes[tri[2]]) / 3.0;
}

double Mesh::area() const {
    double a = 0.0;
    for (int t = 0; t < n_triangles(); ++t) a += triangle_area(t);
    return a;
}

bool Mesh::is_boundary_node(int v) const {
    return std::binary_search(boundary_nodes.begin(), boundary_nodes.end(), v);
}

std::vector<std::array<int, 2>> topological_boundary(const Mesh& mesh) {
    std::map<std::array<int, 2>, int> count;
    for (const auto& tri : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            int a = tri[e], b = tri[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            ++count[{a, b}];
        }
    }
    std::vector<std::array<int, 2>> edges;
    for (const auto& [edge, c] : count)
        if (c == 1) edges.push_back(edge);
    return edges;
}

void finalize_mesh(Mesh& mesh, bool infer_boundary) {
    const int nv = mesh.n_nodes();
    for (auto& tri : mesh.triangles) {
        for (int v : tri)
            if (v < 0 || v >= nv) throw MalformedFile("triangle vertex index out of range");
        double a = signed_area(mesh.nodes[tri[0]], mesh.nodes[tri[1]], mesh.nodes[tri[2]]);
        if (a < 0.0) {
            std::swap(tri[1], tri[2]);
            a = -a;
        }
        if (!(a > 0.0)) throw MalformedFile("degenerate triangle (zero area)");
    }

    auto topo = topological_boundary(mesh);
    if (infer_boundary || mesh.boundary_edges.empty()) {
        mesh.boundary_edges = topo;
    } else {
        std::set<std::array<int, 2>> topo_set(topo.begin(), topo.end());
        std::set<std::array<int, 2>> given;
        for (auto e : mesh.boundary_edges) {
            if (e[0] > e[1]) std::swap(e[0], e[1]);
            if (e[0] < 0 || e[1] >= nv) throw MalformedFile("boundary edge index out of range");
            if (!topo_set.count(e))
                throw MalformedFile("boundary edge (" + std::to_string(e[0]) + "," +
                                    std::to_string(e[1]) + ") not on the mesh boundary");
            given.insert(e);
        }
        // tagged lines may cover only part of the hull; complete topologically
        for (const auto& e : topo) given.insert(e);
        mesh.boundary_edges.assign(given.begin(), given.end());
    }

    std::set<int> bnodes;
    for (const auto& e : mesh.boundary_edges) {
        bnodes.insert(e[0]);
        bnodes.insert(e[1]);
    }
    mesh.boundary_nodes.assign(bnodes.begin(), bnodes.end());
}

Mesh generate_unit_square(int n) {
    if (n < 1) throw InvalidParameter("unit_square requires n >= 1");
    Mesh mesh;
    const int m = n + 1;
    mesh.nodes.reserve(static_cast<std::size_t>(m) * m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            mesh.nodes.emplace_back(double(i) / n, double(j) / n);

    auto id = [m](int i, int j) { return j * m + i; };
    mesh.triangles.reserve(2u * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = id(i, j), v10 = id(i + 1, j);
            const int v01 = id(i, j + 1), v11 = id(i + 1, j + 1);
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    }
    finalize_mesh(mesh, true);
    return mesh;
}

namespace {

struct EdgeFlipper {
    Mesh& mesh;

    // triangle adjacency over shared edges
    std::map<std::array<int, 2>, std::vector<int>> edge_tris;

    explicit EdgeFlipper(Mesh& m) : mesh(m) { rebuild(); }

    void rebuild() {
        edge_tris.clear();
        for (int t = 0; t < mesh.n_triangles(); ++t) add_tri(t);
    }

    void add_tri(int t) {
        const auto& tri = mesh.triangles[t];
        for (int e = 0; e < 3; ++e) {
            int a = tri[e], b = tri[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            edge_tris[{a, b}].push_back(t);
        }
    }

    void remove_tri(int t) {
        const auto& tri = mesh.triangles[t];
        for (int e = 0; e < 3; ++e) {
            int a = tri[e], b = tri[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            auto& v = edge_tris[{a, b}];
            v.erase(std::remove(v.begin(), v.end(), t), v.end());
        }
    }

    static int opposite_vertex(const std::array<int, 3>& tri, int a, int b) {
        for (int v : tri)
            if (v != a && v != b) return v;
        return -1;
    }

    // strict in-circle test with tolerance, points CCW
    bool in_circle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) const {
        const Vec2 pa = a - d, pb = b - d, pc = c - d;
        const double na = pa.squaredNorm(), nb = pb.squaredNorm(), nc = pc.squaredNorm();
        const double det = pa.x() * (pb.y() * nc - nb * pc.y()) -
                           pa.y() * (pb.x() * nc - nb * pc.x()) +
                           na * (pb.x() * pc.y() - pb.y() * pc.x());
        return det > 1e-12;
    }

    // one pass over all interior edges; returns number of flips
    int flip_pass() {
        int flips = 0;
        std::vector<std::array<int, 2>> edges;
        edges.reserve(edge_tris.size());
        for (const auto& [e, ts] : edge_tris)
            if (ts.size() == 2) edges.push_back(e);
        for (const auto& e : edges) {
            auto it = edge_tris.find(e);
            if (it == edge_tris.end() || it->second.size() != 2) continue;
            const int t1 = it->second[0], t2 = it->second[1];
            const int a = e[0], b = e[1];
            const int c = opposite_vertex(mesh.triangles[t1], a, b);
            const int d = opposite_vertex(mesh.triangles[t2], a, b);
            if (c < 0 || d < 0 || c == d) continue;
            // quad a-c-b-d must be convex for a valid flip
            if (signed_area(mesh.nodes[c], mesh.nodes[a], mesh.nodes[d]) <= 1e-14) continue;
            if (signed_area(mesh.nodes[d], mesh.nodes[b], mesh.nodes[c]) <= 1e-14) continue;
            // orient (a, b, c) CCW for the predicate
            Vec2 pa = mesh.nodes[a], pb = mesh.nodes[b], pc = mesh.nodes[c];
            if (signed_area(pa, pb, pc) < 0.0) std::swap(pa, pb);
            if (!in_circle(pa, pb, pc, mesh.nodes[d])) continue;
            remove_tri(t1);
            remove_tri(t2);
            mesh.triangles[t1] = {c, a, d};
            mesh.triangles[t2] = {d, b, c};
            for (int t : {t1, t2}) {
                auto& tri = mesh.triangles[t];
                if (signed_area(mesh.nodes[tri[0]], mesh.nodes[tri[1]], mesh.nodes[tri[2]]) < 0.0)
                    std::swap(tri[1], tri[2]);
            }
            add_tri(t1);
            add_tri(t2);
            ++flips;
        }
        return flips;
    }
};

} // namespace

Mesh generate_unit_disk(double h) {
    if (!(h > 0.0)) throw InvalidParameter("unit_disk requires h > 0");
    const int rings = std::max(1, static_cast<int>(std::lround(std::numbers::pi / (3.0 * h))));

    Mesh mesh;
    mesh.nodes.emplace_back(0.0, 0.0);
    std::vector<int> ring_start(rings + 1, 0); // ring k starts at ring_start[k]
    for (int k = 1; k <= rings; ++k) {
        ring_start[k] = mesh.n_nodes();
        const double r = double(k) / rings;
        const int nk = 6 * k;
        for (int m = 0; m < nk; ++m) {
            const double phi = 2.0 * std::numbers::pi * m / nk;
            mesh.nodes.emplace_back(r * std::cos(phi), r * std::sin(phi));
        }
    }

    // stitch ring k-1 (6(k-1) nodes) to ring k (6k nodes) sector by sector
    for (int k = 1; k <= rings; ++k) {
        const int n_out = 6 * k, n_in = 6 * (k - 1);
        auto outer = [&](int m) { return ring_start[k] + ((m % n_out) + n_out) % n_out; };
        auto inner = [&](int m) {
            if (k == 1) return 0; // center
            return ring_start[k - 1] + ((m % n_in) + n_in) % n_in;
        };
        for (int s = 0; s < 6; ++s) {
            for (int i = 0; i < k; ++i) {
                mesh.triangles.push_back({outer(s * k + i), outer(s * k + i + 1), inner(s * (k - 1) + i)});
                if (i < k - 1)
                    mesh.triangles.push_back(
                        {inner(s * (k - 1) + i), outer(s * k + i + 1), inner(s * (k - 1) + i + 1)});
            }
        }
    }
    finalize_mesh(mesh, true);

    EdgeFlipper flipper(mesh);
    for (int pass = 0; pass < 50; ++pass)
        if (flipper.flip_pass() == 0) break;
    finalize_mesh(mesh, true);
    return mesh;
}

} // namespace egfem
