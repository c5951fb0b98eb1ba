#include "srep/srep.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "srep/errors.hpp"

namespace srep {

namespace {

std::string bad(const std::string& what) { return "invalid s-rep: " + what; }

} // namespace

void Srep::validate() const {
    if (rings < 1) throw validation_error(bad("rings must be >= 1, got " + std::to_string(rings)));
    if (angular_samples < 3)
        throw validation_error(
            bad("angular_samples must be >= 3, got " + std::to_string(angular_samples)));
    const std::size_t ns = static_cast<std::size_t>(num_skeletal());
    if (skeletal_points.size() != ns)
        throw validation_error(bad("expected " + std::to_string(ns) + " skeletal points, got " +
                                   std::to_string(skeletal_points.size())));
    if (up_spokes.size() != ns || down_spokes.size() != ns)
        throw validation_error(bad("up/down spoke counts must equal skeletal point count"));
    if (crest_spokes.size() != static_cast<std::size_t>(angular_samples))
        throw validation_error(bad("expected " + std::to_string(angular_samples) +
                                   " crest spokes, got " + std::to_string(crest_spokes.size())));
    for (const Vec3& p : skeletal_points)
        if (!finite(p)) throw validation_error(bad("non-finite skeletal point"));
    auto check_spokes = [&](const std::vector<Vec3>& spokes, const char* name) {
        for (std::size_t i = 0; i < spokes.size(); ++i) {
            if (!finite(spokes[i]))
                throw validation_error(bad(std::string("non-finite ") + name + " spoke at index " +
                                           std::to_string(i)));
            if (!(norm(spokes[i]) > 0.0))
                throw validation_error(bad(std::string(name) + " spoke at index " +
                                           std::to_string(i) + " has non-positive length"));
        }
    };
    check_spokes(up_spokes, "up");
    check_spokes(down_spokes, "down");
    check_spokes(crest_spokes, "crest");
}

Vec3 spoke_base(const Srep& s, const SpokeRef& ref) {
    if (ref.kind == SpokeKind::crest) return s.skeletal_points[s.fold_index(ref.index)];
    return s.skeletal_points[ref.index];
}

Vec3 spoke_vector(const Srep& s, const SpokeRef& ref) {
    switch (ref.kind) {
        case SpokeKind::up: return s.up_spokes[ref.index];
        case SpokeKind::down: return s.down_spokes[ref.index];
        default: return s.crest_spokes[ref.index];
    }
}

std::vector<SpokeRef> all_spokes(const Srep& s) {
    std::vector<SpokeRef> out;
    out.reserve(2 * s.num_skeletal() + s.angular_samples);
    for (int k = 0; k < s.num_skeletal(); ++k) out.push_back({SpokeKind::up, k});
    for (int k = 0; k < s.num_skeletal(); ++k) out.push_back({SpokeKind::down, k});
    for (int i = 0; i < s.angular_samples; ++i) out.push_back({SpokeKind::crest, i});
    return out;
}

std::vector<int> Adjacency::degrees() const {
    std::vector<int> deg(num_nodes, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

std::vector<std::vector<int>> Adjacency::neighbor_lists() const {
    std::vector<std::vector<int>> nbr(num_nodes);
    for (auto [a, b] : edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    return nbr;
}

bool Adjacency::is_connected() const {
    if (num_nodes == 0) return false;
    auto nbr = neighbor_lists();
    std::vector<char> seen(num_nodes, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : nbr[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                q.push(w);
            }
    }
    return visited == num_nodes;
}

int graph_num_nodes(int rings, int angular_samples) {
    return 3 * (1 + rings * angular_samples) + angular_samples;
}

namespace {

// Node indexing shared by the adjacency and coordinate builders.
struct GraphIndex {
    int rings, T, ns;
    explicit GraphIndex(int r, int t) : rings(r), T(t), ns(1 + r * t) {}
    int skel(int ring, int angle) const { return ring == 0 ? 0 : 1 + (ring - 1) * T + angle; }
    int up(int k) const { return ns + k; }
    int down(int k) const { return 2 * ns + k; }
    int crest(int angle) const { return 3 * ns + angle; }
    int total() const { return 3 * ns + T; }
};

void add_edge(std::vector<std::pair<int, int>>& edges, int a, int b) {
    edges.emplace_back(std::min(a, b), std::max(a, b));
}

// Skeletal-grid connectivity applied to one block of 1 + R*T nodes through
// an index map: center to ring 1, consecutive rings at equal angle, and
// wrapping neighbors within each ring.
template <typename NodeOf>
void add_grid_edges(std::vector<std::pair<int, int>>& edges, const GraphIndex& ix, NodeOf node) {
    for (int i = 0; i < ix.T; ++i) add_edge(edges, node(ix.skel(0, 0)), node(ix.skel(1, i)));
    for (int j = 1; j < ix.rings; ++j)
        for (int i = 0; i < ix.T; ++i)
            add_edge(edges, node(ix.skel(j, i)), node(ix.skel(j + 1, i)));
    for (int j = 1; j <= ix.rings; ++j)
        for (int i = 0; i < ix.T; ++i)
            add_edge(edges, node(ix.skel(j, i)), node(ix.skel(j, (i + 1) % ix.T)));
}

} // namespace

Adjacency template_adjacency(int rings, int angular_samples) {
    if (rings < 1 || angular_samples < 3)
        throw validation_error("template_adjacency: grid dims must satisfy R >= 1, T >= 3");
    const GraphIndex ix(rings, angular_samples);
    std::vector<std::pair<int, int>> edges;

    auto identity = [](int k) { return k; };
    add_grid_edges(edges, ix, identity);
    add_grid_edges(edges, ix, [&](int k) { return ix.up(k); });
    add_grid_edges(edges, ix, [&](int k) { return ix.down(k); });

    for (int k = 0; k < ix.ns; ++k) {
        add_edge(edges, k, ix.up(k));
        add_edge(edges, k, ix.down(k));
    }

    for (int i = 0; i < ix.T; ++i) {
        const int fold = ix.skel(rings, i);
        add_edge(edges, fold, ix.crest(i));
        add_edge(edges, ix.crest(i), ix.crest((i + 1) % ix.T));
        add_edge(edges, ix.crest(i), ix.up(fold));
        add_edge(edges, ix.crest(i), ix.down(fold));
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Adjacency adj;
    adj.num_nodes = ix.total();
    adj.edges = std::move(edges);
    return adj;
}

namespace {

// Cone decomposition of a convex-ish cell: pick the lowest-index corner,
// split every non-incident quad face along the diagonal through that face's
// own lowest-index corner, and form one tetrahedron per resulting triangle.
// Yields 6 tets for a hexahedron, 3 for a prism, with face splits that agree
// between neighboring cells.
void append_cell_tets(const std::vector<Vec3>& coords,
                      const std::vector<std::vector<int>>& faces,
                      std::vector<std::array<int, 4>>& out) {
    int w = faces[0][0];
    for (const auto& f : faces)
        for (int v : f) w = std::min(w, v);

    auto emit = [&](int a, int b, int c) {
        std::array<int, 4> tet{w, a, b, c};
        if (tet_volume(coords[tet[0]], coords[tet[1]], coords[tet[2]], coords[tet[3]]) < 0.0)
            std::swap(tet[2], tet[3]);
        out.push_back(tet);
    };

    for (const auto& f : faces) {
        if (std::find(f.begin(), f.end(), w) != f.end()) continue;
        if (f.size() == 3) {
            emit(f[0], f[1], f[2]);
        } else {
            // rotate cyclically so the lowest-index corner leads
            int lo = 0;
            for (int c = 1; c < 4; ++c)
                if (f[c] < f[lo]) lo = c;
            const int p0 = f[lo], p1 = f[(lo + 1) % 4], p2 = f[(lo + 2) % 4], p3 = f[(lo + 3) % 4];
            emit(p0, p1, p2);
            emit(p0, p2, p3);
        }
    }
}

} // namespace

SrepGraph build_graph(const Srep& s) {
    s.validate();
    const int R = s.rings, T = s.angular_samples;
    const GraphIndex ix(R, T);

    SrepGraph g;
    g.rings = R;
    g.angular_samples = T;
    g.num_nodes = ix.total();
    g.adjacency = template_adjacency(R, T);
    g.coords.resize(ix.total());
    for (int k = 0; k < ix.ns; ++k) {
        g.coords[k] = s.skeletal_points[k];
        g.coords[ix.up(k)] = s.skeletal_points[k] + s.up_spokes[k];
        g.coords[ix.down(k)] = s.skeletal_points[k] + s.down_spokes[k];
    }
    for (int i = 0; i < T; ++i)
        g.coords[ix.crest(i)] = s.skeletal_points[s.fold_index(i)] + s.crest_spokes[i];

    // One prism per center-fan triangle and one hexahedron per grid cell,
    // on each side of the skeletal sheet.
    auto tip = [&](bool up, int k) { return up ? ix.up(k) : ix.down(k); };
    for (int side = 0; side < 2; ++side) {
        const bool up = side == 0;
        for (int i = 0; i < T; ++i) {
            const int i1 = (i + 1) % T;
            const int a0 = ix.skel(0, 0), a1 = ix.skel(1, i), a2 = ix.skel(1, i1);
            const int b0 = tip(up, a0), b1 = tip(up, a1), b2 = tip(up, a2);
            append_cell_tets(g.coords,
                             {{a0, a1, a2},
                              {b0, b1, b2},
                              {a0, a1, b1, b0},
                              {a1, a2, b2, b1},
                              {a2, a0, b0, b2}},
                             g.tetrahedra);
        }
        for (int j = 1; j < R; ++j) {
            for (int i = 0; i < T; ++i) {
                const int i1 = (i + 1) % T;
                const int v0 = ix.skel(j, i), v1 = ix.skel(j, i1);
                const int v2 = ix.skel(j + 1, i1), v3 = ix.skel(j + 1, i);
                const int v4 = tip(up, v0), v5 = tip(up, v1);
                const int v6 = tip(up, v2), v7 = tip(up, v3);
                append_cell_tets(g.coords,
                                 {{v0, v1, v2, v3},
                                  {v4, v5, v6, v7},
                                  {v0, v1, v5, v4},
                                  {v1, v2, v6, v5},
                                  {v2, v3, v7, v6},
                                  {v3, v0, v4, v7}},
                                 g.tetrahedra);
            }
        }
    }
    return g;
}

Srep srep_from_graph_coords(int rings, int angular_samples, const std::vector<Vec3>& coords) {
    const GraphIndex ix(rings, angular_samples);
    if (coords.size() != static_cast<std::size_t>(ix.total()))
        throw validation_error("srep_from_graph_coords: expected " + std::to_string(ix.total()) +
                               " coords, got " + std::to_string(coords.size()));
    Srep s;
    s.rings = rings;
    s.angular_samples = angular_samples;
    s.skeletal_points.resize(ix.ns);
    s.up_spokes.resize(ix.ns);
    s.down_spokes.resize(ix.ns);
    s.crest_spokes.resize(angular_samples);
    for (int k = 0; k < ix.ns; ++k) {
        s.skeletal_points[k] = coords[k];
        s.up_spokes[k] = coords[ix.up(k)] - coords[k];
        s.down_spokes[k] = coords[ix.down(k)] - coords[k];
    }
    for (int i = 0; i < angular_samples; ++i)
        s.crest_spokes[i] = coords[ix.crest(i)] - coords[s.fold_index(i)];
    return s;
}

BoundaryMesh boundary_mesh(const Srep& s) {
    s.validate();
    const int R = s.rings, T = s.angular_samples;
    const int interior = 1 + (R - 1) * T; // center + rings 1..R-1

    BoundaryMesh m;
    m.vertices.reserve(2 * interior + T);
    auto up_vertex = [&](int k) { return k; };
    auto down_vertex = [&](int k) { return interior + k; };
    auto crest_vertex = [&](int i) { return 2 * interior + i; };

    for (int k = 0; k < interior; ++k) {
        m.vertices.push_back(s.skeletal_points[k] + s.up_spokes[k]);
        m.vertex_spokes.push_back({SpokeKind::up, k});
    }
    for (int k = 0; k < interior; ++k) {
        m.vertices.push_back(s.skeletal_points[k] + s.down_spokes[k]);
        m.vertex_spokes.push_back({SpokeKind::down, k});
    }
    for (int i = 0; i < T; ++i) {
        m.vertices.push_back(s.skeletal_points[s.fold_index(i)] + s.crest_spokes[i]);
        m.vertex_spokes.push_back({SpokeKind::crest, i});
    }

    auto tri = [&](int a, int b, int c) { m.faces.push_back({a, b, c}); };
    auto quad = [&](int a, int b, int c, int d) {
        tri(a, b, c);
        tri(a, c, d);
    };
    auto ring_vertex = [&](bool up, int j, int i) {
        const int k = s.skeletal_index(j, i);
        return up ? up_vertex(k) : down_vertex(k);
    };

    for (int i = 0; i < T; ++i) {
        const int i1 = (i + 1) % T;
        if (R == 1) {
            tri(up_vertex(0), crest_vertex(i), crest_vertex(i1));
            tri(down_vertex(0), crest_vertex(i1), crest_vertex(i));
            continue;
        }
        tri(up_vertex(0), ring_vertex(true, 1, i), ring_vertex(true, 1, i1));
        tri(down_vertex(0), ring_vertex(false, 1, i1), ring_vertex(false, 1, i));
        for (int j = 1; j + 1 <= R - 1; ++j) {
            quad(ring_vertex(true, j, i), ring_vertex(true, j + 1, i), ring_vertex(true, j + 1, i1),
                 ring_vertex(true, j, i1));
            quad(ring_vertex(false, j, i), ring_vertex(false, j, i1),
                 ring_vertex(false, j + 1, i1), ring_vertex(false, j + 1, i));
        }
        quad(ring_vertex(true, R - 1, i), crest_vertex(i), crest_vertex(i1),
             ring_vertex(true, R - 1, i1));
        quad(ring_vertex(false, R - 1, i), ring_vertex(false, R - 1, i1), crest_vertex(i1),
             crest_vertex(i));
    }

    // Area-weighted vertex normals; degenerate faces are construction errors.
    double scale2 = 0.0;
    for (const Vec3& v : m.vertices)
        for (const Vec3& w : m.vertices) scale2 = std::max(scale2, dot(v - w, v - w));
    std::vector<Vec3> accum(m.vertices.size());
    std::string degenerate;
    int degenerate_count = 0;
    for (std::size_t f = 0; f < m.faces.size(); ++f) {
        const auto& face = m.faces[f];
        const Vec3 a = m.vertices[face[0]], b = m.vertices[face[1]], c = m.vertices[face[2]];
        const Vec3 n = cross(b - a, c - a); // twice the face area
        if (dot(n, n) <= 1e-24 * scale2 * scale2) {
            if (++degenerate_count <= 8) degenerate += " " + std::to_string(f);
        }
        for (int v : face) accum[v] += n;
    }
    if (degenerate_count > 0)
        throw validation_error("boundary_mesh: " + std::to_string(degenerate_count) +
                               " degenerate (zero-area) faces at indices" + degenerate);

    m.vertex_normals.resize(m.vertices.size());
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        Vec3 n = normalized(accum[v]);
        // orient outward: away from the nearest skeletal point
        const Vec3 p = m.vertices[v];
        double best = std::numeric_limits<double>::max();
        Vec3 nearest;
        for (const Vec3& sk : s.skeletal_points) {
            const double d2 = dot(p - sk, p - sk);
            if (d2 < best) {
                best = d2;
                nearest = sk;
            }
        }
        if (dot(n, p - nearest) < 0.0) n = -n;
        m.vertex_normals[v] = n;
    }
    return m;
}

} // namespace srep
