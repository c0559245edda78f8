#pragma once

#include <Eigen/Core>

#include <array>
#include <memory>
#include <vector>

namespace egfem {

using Vec2 = Eigen::Vector2d;

/// Conforming triangulation of a polygonal 2D domain with marked boundary.
/// Triangles are counterclockwise; boundary edges belong to exactly one
/// triangle. Immutable after construction.
struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> boundary_nodes;                // sorted, unique
    std::vector<std::array<int, 2>> boundary_edges; // sorted pairs

    int n_nodes() const { return static_cast<int>(nodes.size()); }
    int n_triangles() const { return static_cast<int>(triangles.size()); }

    double triangle_area(int t) const;
    Vec2 centroid(int t) const;
    /// Sum of triangle areas.
    double area() const;

    bool is_boundary_node(int v) const;
};

/// Signed area of the triangle (a, b, c); positive when counterclockwise.
double signed_area(const Vec2& a, const Vec2& b, const Vec2& c);

/// Uniform triangulation of [0,1]^2 with n x n cells split along the
/// (0,0)-(1,1) cell diagonal: (n+1)^2 vertices, 2 n^2 triangles.
Mesh generate_unit_square(int n);

/// Quasi-uniform triangulation of the unit disk: concentric rings with 6k
/// nodes on ring k, boundary edge length close to h, Delaunay-flipped
/// interior. The domain is the inscribed polygon of the outermost ring.
Mesh generate_unit_disk(double h);

/// Fixes orientation, sorts boundary data and checks the mesh invariants
/// (index ranges, positive areas, each boundary edge on exactly one
/// triangle). Throws MalformedFile on violation.
void finalize_mesh(Mesh& mesh, bool infer_boundary);

/// Edges incident to exactly one triangle, in deterministic order.
std::vector<std::array<int, 2>> topological_boundary(const Mesh& mesh);

} // namespace egfem
