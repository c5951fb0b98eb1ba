#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "srep/vec3.hpp"

namespace srep {

// Discrete skeletal representation on a polar grid: a center point plus
// R concentric rings of T angular samples. The outermost ring is the fold;
// crest spokes emanate from its points. Ordering everywhere is ring-major,
// angle-minor, center first.
struct Srep {
    int rings = 0;           // R >= 1, fold ring included
    int angular_samples = 0; // T >= 3

    std::vector<Vec3> skeletal_points; // 1 + R*T
    std::vector<Vec3> up_spokes;       // 1 + R*T
    std::vector<Vec3> down_spokes;     // 1 + R*T
    std::vector<Vec3> crest_spokes;    // T, one per fold point

    int num_skeletal() const { return 1 + rings * angular_samples; }

    // Skeletal index of (ring j in 1..R, angle i in 0..T-1); center is 0.
    int skeletal_index(int ring, int angle) const {
        return 1 + (ring - 1) * angular_samples + angle;
    }
    int fold_index(int angle) const { return skeletal_index(rings, angle); }

    // Throws validation_error on inconsistent sizes, non-finite values,
    // zero-length spokes, or an illegal grid.
    void validate() const;
};

enum class SpokeKind { up, down, crest };

struct SpokeRef {
    SpokeKind kind;
    int index; // skeletal index for up/down, angle index for crest
};

// Base point and vector of a spoke.
Vec3 spoke_base(const Srep& s, const SpokeRef& ref);
Vec3 spoke_vector(const Srep& s, const SpokeRef& ref);
inline Vec3 spoke_tip(const Srep& s, const SpokeRef& ref) {
    return spoke_base(s, ref) + spoke_vector(s, ref);
}

// All spokes in canonical order: up block, down block, crest block.
std::vector<SpokeRef> all_spokes(const Srep& s);

// Symmetric adjacency with zero diagonal, stored as a sorted unique edge
// list with lo < hi.
struct Adjacency {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> neighbor_lists() const;
    bool is_connected() const;
};

// Volumetric graph over the s-rep: skeletal block, up-tip block, down-tip
// block, crest-tip block, in that node order.
struct SrepGraph {
    int rings = 0;
    int angular_samples = 0;
    int num_nodes = 0;
    Adjacency adjacency;
    std::vector<Vec3> coords;
    std::vector<std::array<int, 4>> tetrahedra; // export only, positive volume

    int num_skeletal() const { return 1 + rings * angular_samples; }
    int skeletal_node(int k) const { return k; }
    int up_tip_node(int k) const { return num_skeletal() + k; }
    int down_tip_node(int k) const { return 2 * num_skeletal() + k; }
    int crest_tip_node(int angle) const { return 3 * num_skeletal() + angle; }
};

int graph_num_nodes(int rings, int angular_samples);

// Template topology; depends on grid dims only.
Adjacency template_adjacency(int rings, int angular_samples);

SrepGraph build_graph(const Srep& s);

// Rebuild an Srep from graph-ordered node coordinates (inverse of
// build_graph's coordinate layout; spokes = tip - base).
Srep srep_from_graph_coords(int rings, int angular_samples, const std::vector<Vec3>& coords);

// Closed triangle mesh over the spoke tips. The fold ring is represented by
// the crest-tip vertices; up/down sheets cover the center and interior rings
// and close onto the crest ring, so fold up/down tips (which coincide with
// crest tips for analytic s-reps) do not appear as separate vertices.
// Vertex order: up block (center + rings 1..R-1), down block, crest block.
struct BoundaryMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<Vec3> vertex_normals; // unit, outward
    std::vector<SpokeRef> vertex_spokes; // spoke whose tip each vertex is
};

BoundaryMesh boundary_mesh(const Srep& s);

} // namespace srep
