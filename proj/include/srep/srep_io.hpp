#pragma once

#include <string>

#include "srep/srep.hpp"

namespace srep {

// Text format, version header "srep/1". Coordinates are written with 17
// significant digits so the round-trip is bit-exact for finite doubles.
void save_srep(const Srep& s, const std::string& path);
Srep load_srep(const std::string& path);

// VTK legacy ASCII 2.0 exports.
void export_vtk_graph(const SrepGraph& g, const std::string& path);      // POINTS + LINES
void export_vtk_tetrahedra(const SrepGraph& g, const std::string& path); // unstructured grid
void export_vtk_mesh(const BoundaryMesh& m, const std::string& path);    // POINTS + POLYGONS

} // namespace srep
