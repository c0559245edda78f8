#pragma once

#include "egfem/mesh.hpp"

#include <filesystem>

namespace egfem {

/// Reads a Gmsh MSH 2.2 ASCII file (element types 1 = line, 2 = triangle;
/// other types are skipped). Boundary comes from line elements when present
/// and is completed topologically otherwise. Clockwise triangles are
/// reordered. Throws UnsupportedFormat for other MSH versions and
/// MalformedFile for inconsistent contents.
Mesh load_msh(const std::filesystem::path& path);

/// Writes the mesh in MSH 2.2 ASCII format (boundary edges as line elements).
void save_msh(const Mesh& mesh, const std::filesystem::path& path);

} // namespace egfem
