#include "egfem/msh_io.hpp"

#include "egfem/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace egfem {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    return {};
}

} // namespace

Mesh load_msh(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open mesh file '" + path.string() + "'");

    Mesh mesh;
    std::map<long, int> node_id; // msh tag -> index
    bool have_lines = false;

    std::string line;
    while (!(line = next_content_line(in)).empty()) {
        if (line == "$MeshFormat") {
            std::istringstream fmt(next_content_line(in));
            std::string version;
            int file_type = -1, data_size = -1;
            fmt >> version >> file_type >> data_size;
            if (version.rfind("2.2", 0) != 0)
                throw UnsupportedFormat("MSH version " + version + " (expected 2.2 ASCII)");
            if (file_type != 0) throw UnsupportedFormat("binary MSH file (expected ASCII)");
            if (next_content_line(in) != "$EndMeshFormat")
                throw MalformedFile("missing $EndMeshFormat");
        } else if (line == "$Nodes") {
            std::size_t count = 0;
            std::istringstream(next_content_line(in)) >> count;
            mesh.nodes.reserve(count);
            for (std::size_t i = 0; i < count; ++i) {
                std::istringstream row(next_content_line(in));
                long tag = 0;
                double x = 0, y = 0, z = 0;
                if (!(row >> tag >> x >> y >> z)) throw MalformedFile("bad node line");
                node_id[tag] = mesh.n_nodes();
                mesh.nodes.emplace_back(x, y);
            }
            if (next_content_line(in) != "$EndNodes")
                throw MalformedFile("node count does not match $Nodes header");
        } else if (line == "$Elements") {
            std::size_t count = 0;
            std::istringstream(next_content_line(in)) >> count;
            auto lookup = [&](long tag) {
                auto it = node_id.find(tag);
                if (it == node_id.end())
                    throw MalformedFile("element references unknown node " + std::to_string(tag));
                return it->second;
            };
            for (std::size_t i = 0; i < count; ++i) {
                std::istringstream row(next_content_line(in));
                long id = 0;
                int type = 0, ntags = 0;
                if (!(row >> id >> type >> ntags)) throw MalformedFile("bad element line");
                long tag = 0;
                for (int t = 0; t < ntags; ++t)
                    if (!(row >> tag)) throw MalformedFile("bad element tags");
                if (type == 2) {
                    long a, b, c;
                    if (!(row >> a >> b >> c)) throw MalformedFile("triangle with missing nodes");
                    mesh.triangles.push_back({lookup(a), lookup(b), lookup(c)});
                } else if (type == 1) {
                    long a, b;
                    if (!(row >> a >> b)) throw MalformedFile("line element with missing nodes");
                    mesh.boundary_edges.push_back({lookup(a), lookup(b)});
                    have_lines = true;
                }
                // other element types (points, ...) are ignored
            }
            if (next_content_line(in) != "$EndElements")
                throw MalformedFile("element count does not match $Elements header");
        } else if (line[0] == '$') {
            // skip unknown section
            const std::string end = "$End" + line.substr(1);
            while (!(line = next_content_line(in)).empty() && line != end) {}
        }
    }

    if (mesh.nodes.empty()) throw MalformedFile("no $Nodes section");
    if (mesh.triangles.empty()) throw MalformedFile("no triangles in file");
    finalize_mesh(mesh, !have_lines);
    return mesh;
}

void save_msh(const Mesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write mesh file '" + path.string() + "'");
    out.precision(17);
    out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
    out << "$Nodes\n" << mesh.n_nodes() << "\n";
    for (int i = 0; i < mesh.n_nodes(); ++i)
        out << (i + 1) << " " << mesh.nodes[i].x() << " " << mesh.nodes[i].y() << " 0\n";
    out << "$EndNodes\n";
    out << "$Elements\n" << (mesh.boundary_edges.size() + mesh.triangles.size()) << "\n";
    long id = 1;
    for (const auto& e : mesh.boundary_edges)
        out << id++ << " 1 2 1 1 " << (e[0] + 1) << " " << (e[1] + 1) << "\n";
    for (const auto& t : mesh.triangles)
        out << id++ << " 2 2 2 2 " << (t[0] + 1) << " " << (t[1] + 1) << " " << (t[2] + 1) << "\n";
    out << "$EndElements\n";
    if (!out) throw IoError("failed writing mesh file '" + path.string() + "'");
}

} // namespace egfem
