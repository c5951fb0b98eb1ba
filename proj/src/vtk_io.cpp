#include <cstdio>
#include <fstream>

#include "srep/errors.hpp"
#include "srep/srep_io.hpp"

namespace srep {

namespace {

std::ofstream open_vtk(const std::string& path, const char* dataset) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    os << "# vtk DataFile Version 2.0\n";
    os << "srep export\n";
    os << "ASCII\n";
    os << "DATASET " << dataset << "\n";
    return os;
}

void write_points(std::ofstream& os, const std::vector<Vec3>& pts) {
    os << "POINTS " << pts.size() << " double\n";
    char buf[128];
    for (const Vec3& p : pts) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x, p.y, p.z);
        os << buf;
    }
}

void check(std::ofstream& os, const std::string& path) {
    if (!os) throw io_error("write failed: " + path);
}

} // namespace

void export_vtk_graph(const SrepGraph& g, const std::string& path) {
    if (g.num_nodes == 0) throw validation_error("export_vtk_graph: empty graph");
    auto os = open_vtk(path, "POLYDATA");
    write_points(os, g.coords);
    const auto& edges = g.adjacency.edges;
    os << "LINES " << edges.size() << " " << 3 * edges.size() << "\n";
    for (auto [a, b] : edges) os << "2 " << a << " " << b << "\n";
    check(os, path);
}

void export_vtk_tetrahedra(const SrepGraph& g, const std::string& path) {
    if (g.tetrahedra.empty()) throw validation_error("export_vtk_tetrahedra: no tetrahedra");
    auto os = open_vtk(path, "UNSTRUCTURED_GRID");
    write_points(os, g.coords);
    os << "CELLS " << g.tetrahedra.size() << " " << 5 * g.tetrahedra.size() << "\n";
    for (const auto& t : g.tetrahedra)
        os << "4 " << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << "\n";
    os << "CELL_TYPES " << g.tetrahedra.size() << "\n";
    for (std::size_t i = 0; i < g.tetrahedra.size(); ++i) os << "10\n";
    check(os, path);
}

void export_vtk_mesh(const BoundaryMesh& m, const std::string& path) {
    if (m.faces.empty()) throw validation_error("export_vtk_mesh: empty mesh");
    auto os = open_vtk(path, "POLYDATA");
    write_points(os, m.vertices);
    os << "POLYGONS " << m.faces.size() << " " << 4 * m.faces.size() << "\n";
    for (const auto& f : m.faces) os << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
    check(os, path);
}

} // namespace srep
