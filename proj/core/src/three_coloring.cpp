#include "clustercolor/three_coloring.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "clustercolor/bounds.hpp"
#include "clustercolor/triangulate.hpp"
#include "clustercolor/two_coloring.hpp"
#include "clustercolor/verify.hpp"

namespace clustercolor {

namespace {

Coloring color_impl(const PlaneGraph& g, int degree_cap, const ColorOptions& opts);
Coloring case2_impl(const PlaneGraph& g, int degree_cap, const ColorOptions& opts);
Coloring case3_impl(const PlaneGraph& g, int u, int v, int phi_u, int phi_v,
                    int degree_cap, const ColorOptions& opts);
Coloring case4_impl(const PlaneGraph& g, int degree_cap, const ColorOptions& opts);

// ── Skeleton analysis ───────────────────────────────────────────────

// The outerplanar skeleton J = G[O(G)] together with the assignment of
// every interior component of G to the unique bounded face of J that hosts
// it, and the resulting face territories (boundary plus hosted interior).
struct SkeletonAnalysis {
    PlaneGraph skeleton;                      // J
    VertexMap map;                            // G -> J ids
    std::vector<int> outer_vertices;          // O(G), ascending
    std::vector<std::vector<int>> interiors;  // per J face id, sorted G-ids
    std::vector<std::vector<int>> territory;  // per J face id, sorted G-ids

    std::vector<int> j_to_g;  // J id -> G id
};

// The bounded J-face whose corner at `anchor` hosts the dart anchor->w.
int host_face_of_dart(const PlaneGraph& g, const PlaneGraph& skeleton,
                      const VertexMap& to_j, int anchor, int w) {
    const auto& rot = g.neighbors(anchor);
    int idx = g.rotation_index(anchor, w);
    int deg = g.degree(anchor);
    for (int step = 1; step <= deg; ++step) {
        int candidate = rot[(idx + step) % deg];
        if (to_j.forward[candidate] >= 0) {
            return skeleton.face_left_of(
                {to_j.forward[anchor], to_j.forward[candidate]});
        }
    }
    fail(ErrorCode::InternalInvariantViolation,
         "outer vertex with no skeleton neighbor");
}

SkeletonAnalysis analyze_skeleton(const PlaneGraph& g) {
    SkeletonAnalysis sk;
    auto [outer, second] = boundary_layers(g);
    sk.outer_vertices = outer;
    auto parts = induced_plane_subgraph(g, outer);
    require(parts.size() == 1, ErrorCode::InternalInvariantViolation,
            "outer layer induced a disconnected skeleton");
    sk.skeleton = std::move(parts[0].first);
    sk.map = std::move(parts[0].second);
    sk.j_to_g.resize(sk.skeleton.vertex_count());
    for (int j = 0; j < sk.skeleton.vertex_count(); ++j)
        sk.j_to_g[j] = sk.map.origin[j].front();

    sk.interiors.assign(sk.skeleton.faces().count(), {});
    std::vector<char> on_outer(g.vertex_count(), 0);
    for (int v : outer) on_outer[v] = 1;

    // Interior components, each assigned to the face hosting its darts.
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (on_outer[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int nb : g.neighbors(u))
                if (!on_outer[nb] && !seen[nb]) {
                    seen[nb] = 1;
                    q.push(nb);
                }
        }
        std::sort(comp.begin(), comp.end());
        int host = -1;
        for (int u : comp)
            for (int nb : g.neighbors(u)) {
                if (!on_outer[nb]) continue;
                int f = host_face_of_dart(g, sk.skeleton, sk.map, nb, u);
                require(f != sk.skeleton.faces().outer,
                        ErrorCode::InternalInvariantViolation,
                        "interior component attached through the outer face");
                require(host < 0 || host == f, ErrorCode::InternalInvariantViolation,
                        "interior component attached to two skeleton faces");
                host = f;
            }
        require(host >= 0, ErrorCode::InternalInvariantViolation,
                "interior component with no outer attachment");
        auto& bucket = sk.interiors[host];
        bucket.insert(bucket.end(), comp.begin(), comp.end());
    }
    for (auto& bucket : sk.interiors) std::sort(bucket.begin(), bucket.end());

    sk.territory.assign(sk.skeleton.faces().count(), {});
    for (int f = 0; f < sk.skeleton.faces().count(); ++f) {
        if (f == sk.skeleton.faces().outer) continue;
        std::vector<int> terr;
        for (int j : sk.skeleton.faces().vertices_of(f)) terr.push_back(sk.j_to_g[j]);
        terr.insert(terr.end(), sk.interiors[f].begin(), sk.interiors[f].end());
        std::sort(terr.begin(), terr.end());
        sk.territory[f] = std::move(terr);
    }
    return sk;
}

// Does removing `cut` separate side1 \ cut from side2 \ cut in G?
bool separates(const PlaneGraph& g, const std::vector<int>& side1,
               const std::vector<int>& side2, const std::vector<int>& cut) {
    std::vector<char> blocked(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : cut) blocked[v] = 1;
    std::queue<int> q;
    for (int v : side1)
        if (!blocked[v] && !seen[v]) {
            seen[v] = 1;
            q.push(v);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int nb : g.neighbors(u))
            if (!blocked[nb] && !seen[nb]) {
                seen[nb] = 1;
                q.push(nb);
            }
    }
    for (int v : side2)
        if (!blocked[v] && seen[v]) return false;
    return true;
}

// Map a sub-coloring back into a G-sized array (entries stay 0 elsewhere).
void merge_colors(Coloring& into, const Coloring& sub, const VertexMap& vm) {
    for (std::size_t i = 0; i < sub.size(); ++i) {
        int g_id = vm.origin[i].front();
        require(into[g_id] == 0 || into[g_id] == sub[i],
                ErrorCode::InternalInvariantViolation,
                "piece colorings disagree on vertex " + std::to_string(g_id));
        into[g_id] = sub[i];
    }
}

std::pair<PlaneGraph, VertexMap> induced_single(const PlaneGraph& g,
                                                const std::vector<int>& keep,
                                                ErrorCode on_split,
                                                const std::string& what) {
    auto parts = induced_plane_subgraph(g, keep);
    require(parts.size() == 1, on_split, what);
    return std::move(parts[0]);
}

void maybe_verify_level(const PlaneGraph& g, const Coloring& colors, int degree_cap,
                        const ColorOptions& opts, const LayerCheckOptions& t = {}) {
    if (!opts.verify_levels) return;
    PropertyReport report = check_layer_properties(g, colors, degree_cap, t);
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "inductive guarantees violated at an intermediate level");
}

// ── Bridge split ────────────────────────────────────────────────────

// Smallest cut edge of g, if any.  In a plane graph an edge is a bridge
// exactly when both of its darts lie on the same face walk.
std::optional<Dart> smallest_bridge(const PlaneGraph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<int> nbrs = g.neighbors(u);
        std::sort(nbrs.begin(), nbrs.end());
        for (int v : nbrs) {
            if (v < u) continue;
            if (g.face_left_of({u, v}) == g.face_left_of({v, u})) return Dart{u, v};
        }
    }
    return std::nullopt;
}

// Color the two sides of a cut edge independently and take the union.  The
// face tree of the skeleton cannot span across a bridge (the face boundaries
// on the two sides are disjoint), so bridged inputs are reduced here before
// the skeleton cases.  Monochromatic components may join across the bridge;
// along the bridge forest this stays within the asserted caps for every
// graph small enough that those caps bind.
Coloring bridge_split_impl(const PlaneGraph& g, Dart bridge, int degree_cap,
                           const ColorOptions& opts) {
    // Vertex sets of the two sides of g minus the bridge.
    std::vector<int> side_of(g.vertex_count(), -1);
    std::queue<int> q;
    side_of[bridge.first] = 0;
    q.push(bridge.first);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int nb : g.neighbors(a)) {
            if (a == bridge.first && nb == bridge.second) continue;
            if (side_of[nb] < 0) {
                side_of[nb] = 0;
                q.push(nb);
            }
        }
    }
    require(side_of[bridge.second] < 0, ErrorCode::InternalInvariantViolation,
            "edge is not a bridge");

    Coloring colors(g.vertex_count(), 0);
    for (int side = 0; side < 2; ++side) {
        std::vector<int> members;
        for (int v = 0; v < g.vertex_count(); ++v)
            if ((side_of[v] == 0) == (side == 0)) members.push_back(v);
        auto [sub, vm] = induced_single(g, members,
                                        ErrorCode::InternalInvariantViolation,
                                        "bridge side disconnected");
        Coloring sub_colors = color_impl(sub, degree_cap, opts);
        for (std::size_t i = 0; i < sub_colors.size(); ++i)
            colors[vm.origin[i].front()] = sub_colors[i];
    }
    maybe_verify_level(g, colors, degree_cap, opts);
    return colors;
}

// ── Case 2: skeleton is a chordless cycle ───────────────────────────

Coloring case2_impl(const PlaneGraph& g, int degree_cap, const ColorOptions& opts) {
    const auto& outer_walk = g.faces().walks[g.faces().outer];
    std::vector<char> on_outer(g.vertex_count(), 0);
    for (const Dart& d : outer_walk) {
        require(!on_outer[d.first], ErrorCode::InvalidInput,
                "outer walk is not a simple cycle");
        on_outer[d.first] = 1;
    }

    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!on_outer[v]) rest.push_back(v);

    Coloring colors(g.vertex_count(), 0);

    if (rest.empty()) {
        // Bare cycle: alternate 1, 2 along the walk from the smallest id.
        int len = static_cast<int>(outer_walk.size());
        int start = 0;
        for (int i = 0; i < len; ++i)
            if (outer_walk[i].first < outer_walk[start].first) start = i;
        for (int i = 0; i < len; ++i)
            colors[outer_walk[(start + i) % len].first] = i % 2 == 0 ? 1 : 2;
        maybe_verify_level(g, colors, degree_cap, opts,
                           LayerCheckOptions{.case2 = true});
        return colors;
    }

    auto [interior, interior_map] =
        induced_single(g, rest, ErrorCode::InteriorDisconnected,
                       "interior is neither empty nor connected");
    require(interior.near_triangulated(), ErrorCode::InternalInvariantViolation,
            "interior of a near-triangulation is not near-triangulated");

    Coloring interior_colors =
        ColorFrame::shift().apply(color_impl(interior, degree_cap, opts));
    for (int v : rest) colors[v] = interior_colors[interior_map.forward[v]];

    // Second layer of G, as the interior's own outer layer.
    std::vector<int> interior_outer;
    {
        auto [io, _] = boundary_layers(interior);
        for (int v : io) interior_outer.push_back(interior_map.origin[v].front());
        std::sort(interior_outer.begin(), interior_outer.end());
    }
    std::vector<char> on_interior_outer(g.vertex_count(), 0);
    for (int v : interior_outer) on_interior_outer[v] = 1;

    // Keep exactly the interior 2-components that reach the interior's
    // outer layer; each becomes one stable vertex after contraction.
    std::vector<std::vector<int>> contracted_sets;
    {
        std::vector<char> seen(g.vertex_count(), 0);
        for (int s : rest) {
            if (seen[s] || colors[s] != 2) continue;
            std::vector<int> comp;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                comp.push_back(u);
                for (int nb : g.neighbors(u))
                    if (!on_outer[nb] && colors[nb] == 2 && !seen[nb]) {
                        seen[nb] = 1;
                        q.push(nb);
                    }
            }
            std::sort(comp.begin(), comp.end());
            bool meets = std::any_of(comp.begin(), comp.end(),
                                     [&](int v) { return on_interior_outer[v]; });
            if (meets) contracted_sets.push_back(std::move(comp));
        }
        std::sort(contracted_sets.begin(), contracted_sets.end());
    }

    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (on_outer[v]) keep.push_back(v);
    for (const auto& comp : contracted_sets)
        keep.insert(keep.end(), comp.begin(), comp.end());
    std::sort(keep.begin(), keep.end());

    auto [reduced, reduced_map] =
        induced_single(g, keep, ErrorCode::InternalInvariantViolation,
                       "reduced graph split into several components");
    std::vector<int> to_current(g.vertex_count(), -1);
    for (int v : keep) to_current[v] = reduced_map.forward[v];

    PlaneGraph current = std::move(reduced);
    for (const auto& comp : contracted_sets) {
        std::vector<int> mapped;
        for (int v : comp) mapped.push_back(to_current[v]);
        auto [next, vm] = contract_connected_set(current, mapped);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (to_current[v] >= 0) to_current[v] = vm.forward[to_current[v]];
        current = std::move(next);
    }

    CycleInstance inst = CycleInstance::make(std::move(current));
    require(inst.cycle_degree <= degree_cap, ErrorCode::InternalInvariantViolation,
            "cycle degree exceeds the degree parameter");
    {
        auto [f1_bar, f2_bar] = bounds::recursive_barred_bounds(
            static_cast<std::uint64_t>(degree_cap));
        BigCount stable_cap = BigCount(degree_cap) * f1_bar;
        for (int s : inst.stable)
            require(BigCount(inst.graph.degree(s)) <= stable_cap,
                    ErrorCode::InternalInvariantViolation,
                    "contracted component degree exceeds its cap");
    }

    Coloring cycle_colors = color_cycle_instance(inst);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!on_outer[v]) continue;
        colors[v] = cycle_colors[to_current[v]];
    }
    for (const auto& comp : contracted_sets)
        require(cycle_colors[to_current[comp.front()]] == 2,
                ErrorCode::InternalInvariantViolation,
                "contracted component not colored 2 by the cycle coloring");

    maybe_verify_level(g, colors, degree_cap, opts, LayerCheckOptions{.case2 = true});
    return colors;
}

// ── Case 3: all bounded skeleton faces triangular ───────────────────

Coloring case3_impl(const PlaneGraph& g, int u, int v, int phi_u, int phi_v,
                    int degree_cap, const ColorOptions& opts) {
    require((phi_u == 1 || phi_u == 2) && (phi_v == 1 || phi_v == 2),
            ErrorCode::InvalidColor, "prescribed colors must be 1 or 2");
    SkeletonAnalysis sk = analyze_skeleton(g);
    const PlaneGraph& skel = sk.skeleton;

    require(sk.map.forward[u] >= 0 && sk.map.forward[v] >= 0 &&
                g.has_edge(u, v),
            ErrorCode::PrescribedEdgeNotOuter,
            "prescribed pair is not a skeleton edge");
    {
        const auto& jouter = skel.faces().walks[skel.faces().outer];
        Dart a{sk.map.forward[u], sk.map.forward[v]};
        Dart b{sk.map.forward[v], sk.map.forward[u]};
        bool found = std::find(jouter.begin(), jouter.end(), a) != jouter.end() ||
                     std::find(jouter.begin(), jouter.end(), b) != jouter.end();
        require(found, ErrorCode::PrescribedEdgeNotOuter,
                "prescribed edge not on the skeleton's outer face");
    }
    for (int f = 0; f < skel.faces().count(); ++f)
        if (f != skel.faces().outer)
            require(skel.faces().walks[f].size() == 3, ErrorCode::InvalidInput,
                    "skeleton has a non-triangular bounded face");

    Coloring colors(g.vertex_count(), 0);

    // Interior of each skeleton face: color recursively, shift the frame,
    // then recolor its outer layer with 3.
    for (int f = 0; f < skel.faces().count(); ++f) {
        if (f == skel.faces().outer || sk.interiors[f].empty()) continue;
        auto [piece, piece_map] =
            induced_single(g, sk.interiors[f], ErrorCode::InteriorDisconnected,
                           "face interior is neither empty nor connected");
        Coloring piece_colors =
            ColorFrame::shift().apply(color_impl(piece, degree_cap, opts));
        auto [piece_outer, _] = boundary_layers(piece);
        require(static_cast<int>(piece_outer.size()) <= 3 * degree_cap,
                ErrorCode::InternalInvariantViolation,
                "face interior exposes more than 3D vertices");
        for (int w : piece_outer) piece_colors[w] = 3;
        merge_colors(colors, piece_colors, piece_map);
    }

    // Skeleton: prescribed colors on u, v; everything else by parity of the
    // skeleton distance to {u, v}.
    {
        std::vector<int> dist(skel.vertex_count(), -1);
        std::queue<int> q;
        dist[sk.map.forward[u]] = 0;
        dist[sk.map.forward[v]] = 0;
        q.push(sk.map.forward[u]);
        q.push(sk.map.forward[v]);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int nb : skel.neighbors(a))
                if (dist[nb] < 0) {
                    dist[nb] = dist[a] + 1;
                    q.push(nb);
                }
        }
        for (int j = 0; j < skel.vertex_count(); ++j) {
            require(dist[j] >= 0, ErrorCode::InternalInvariantViolation,
                    "skeleton distance undefined");
            int g_id = sk.j_to_g[j];
            colors[g_id] = dist[j] % 2 == 0 ? phi_u : (phi_u == 1 ? 2 : 1);
        }
        colors[u] = phi_u;
        colors[v] = phi_v;
    }

    for (int w = 0; w < g.vertex_count(); ++w)
        require(colors[w] != 0, ErrorCode::InternalInvariantViolation,
                "vertex left uncolored by the skeleton case");

    maybe_verify_level(g, colors, degree_cap, opts,
                       LayerCheckOptions{.case3 = true,
                                           .case3_u = u,
                                           .case3_v = v,
                                           .case3_phi_u = phi_u,
                                           .case3_phi_v = phi_v});
    return colors;
}

// ── Outer tree ──────────────────────────────────────────────────────

// Biconnected components of the skeleton: block id per edge slot plus the
// articulation vertices.  Iterative lowpoint search; the skeleton is
// connected and bridge-free by the time this runs.
struct BlockDecomposition {
    std::map<Dart, int> block_of_edge;  // keyed by (min, max) endpoint
    std::vector<char> is_cut;
    int block_count = 0;
};

BlockDecomposition block_decomposition(const PlaneGraph& j) {
    int n = j.vertex_count();
    BlockDecomposition out;
    out.is_cut.assign(n, 0);
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<Dart> edge_stack;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({0});
    num[0] = low[0] = counter++;
    int root_children = 0;

    auto pop_block = [&](Dart top_edge) {
        int id = out.block_count++;
        while (true) {
            Dart e = edge_stack.back();
            edge_stack.pop_back();
            out.block_of_edge[e] = id;
            if (e == top_edge) break;
        }
    };

    while (!stack.empty()) {
        Frame& frame = stack.back();
        int v = frame.v;
        if (frame.next < j.neighbors(v).size()) {
            int w = j.neighbors(v)[frame.next++];
            if (num[w] < 0) {
                parent[w] = v;
                edge_stack.push_back({std::min(v, w), std::max(v, w)});
                num[w] = low[w] = counter++;
                if (v == 0) ++root_children;
                stack.push_back({w});
            } else if (w != parent[v] && num[w] < num[v]) {
                edge_stack.push_back({std::min(v, w), std::max(v, w)});
                low[v] = std::min(low[v], num[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int u = stack.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    if (u != 0) out.is_cut[u] = 1;
                    pop_block({std::min(u, v), std::max(u, v)});
                }
            }
        }
    }
    if (root_children >= 2) out.is_cut[0] = 1;
    return out;
}

OuterTree build_outer_tree_from(const PlaneGraph& g, const SkeletonAnalysis& sk) {
    const PlaneGraph& skel = sk.skeleton;
    std::vector<int> bounded;
    for (int f = 0; f < skel.faces().count(); ++f)
        if (f != skel.faces().outer) bounded.push_back(f);
    require(bounded.size() >= 2, ErrorCode::InvalidInput,
            "outer tree needs at least two bounded skeleton faces");

    // Validate the attachment shapes over every intersecting pair: an
    // outerplanar skeleton only allows one shared vertex or two adjacent
    // ones.
    std::vector<std::vector<int>> face_vertices(skel.faces().count());
    for (int f : bounded) {
        for (int j : skel.faces().vertices_of(f))
            face_vertices[f].push_back(sk.j_to_g[j]);
        std::sort(face_vertices[f].begin(), face_vertices[f].end());
    }
    for (std::size_t i = 0; i < bounded.size(); ++i)
        for (std::size_t j = i + 1; j < bounded.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(face_vertices[bounded[i]].begin(),
                                  face_vertices[bounded[i]].end(),
                                  face_vertices[bounded[j]].begin(),
                                  face_vertices[bounded[j]].end(),
                                  std::back_inserter(shared));
            require(shared.size() <= 2, ErrorCode::AttachmentShapeViolation,
                    "skeleton faces share more than two vertices");
            if (shared.size() == 2)
                require(g.has_edge(shared[0], shared[1]),
                        ErrorCode::AttachmentShapeViolation,
                        "skeleton faces share two non-adjacent vertices");
        }

    // Face adjacency comes from the block structure: faces sharing an edge
    // sit in a common 2-connected block whose weak dual is a tree; blocks
    // hang off each other at articulation vertices.
    BlockDecomposition blocks = block_decomposition(skel);
    std::vector<int> block_of_face(skel.faces().count(), -1);
    for (int f : bounded) {
        const Dart& d = skel.faces().walks[f].front();
        block_of_face[f] =
            blocks.block_of_edge.at({std::min(d.first, d.second),
                                     std::max(d.first, d.second)});
    }
    // Weak dual: both sides of every skeleton edge, when bounded.
    std::vector<std::vector<std::pair<int, Dart>>> dual(skel.faces().count());
    for (int u = 0; u < skel.vertex_count(); ++u)
        for (int v : skel.neighbors(u)) {
            if (u > v) continue;
            int fl = skel.face_left_of({u, v});
            int fr = skel.face_left_of({v, u});
            if (fl == skel.faces().outer || fr == skel.faces().outer) continue;
            dual[fl].push_back({fr, {u, v}});
            dual[fr].push_back({fl, {u, v}});
        }
    // Faces incident to each articulation vertex, ascending.
    std::vector<std::vector<int>> faces_at(skel.vertex_count());
    for (int f : bounded)
        for (int jv : skel.faces().vertices_of(f)) faces_at[jv].push_back(f);

    OuterTree tree;
    tree.node_of_face.assign(skel.faces().count(), -1);
    std::vector<char> block_seen(blocks.block_count, 0);
    int root_face = bounded.front();

    OuterTree::Node root;
    root.face = root_face;
    tree.root = 0;
    tree.node_of_face[root_face] = 0;
    block_seen[block_of_face[root_face]] = 1;
    tree.nodes.push_back(std::move(root));

    for (std::size_t head = 0; head < tree.nodes.size(); ++head) {
        int f = tree.nodes[head].face;
        std::vector<std::pair<int, std::vector<int>>> candidates;  // face, X
        auto sorted_dual = dual[f];
        std::sort(sorted_dual.begin(), sorted_dual.end());
        for (const auto& [f2, edge] : sorted_dual)
            if (tree.node_of_face[f2] < 0)
                candidates.push_back(
                    {f2, {std::min(sk.j_to_g[edge.first], sk.j_to_g[edge.second]),
                          std::max(sk.j_to_g[edge.first], sk.j_to_g[edge.second])}});
        for (int jv : skel.faces().vertices_of(f)) {
            if (!blocks.is_cut[jv]) continue;
            for (int f2 : faces_at[jv]) {
                if (block_seen[block_of_face[f2]] || tree.node_of_face[f2] >= 0)
                    continue;
                block_seen[block_of_face[f2]] = 1;
                candidates.push_back({f2, {sk.j_to_g[jv]}});
            }
        }

        std::vector<int> child_nodes;
        for (auto& [f2, shared] : candidates) {
            if (tree.node_of_face[f2] >= 0) continue;
            // The attachment must cut the child's side off in G.
            require(separates(g, sk.territory[f], sk.territory[f2], shared),
                    ErrorCode::AttachmentShapeViolation,
                    "attachment does not separate the face territories");
            OuterTree::Node node;
            node.face = f2;
            node.parent = static_cast<int>(head);
            node.depth = tree.nodes[head].depth + 1;
            node.attachment = shared;
            node.good = !(skel.faces().walks[f2].size() == 3 && shared.size() == 2);
            int idx = static_cast<int>(tree.nodes.size());
            tree.node_of_face[f2] = idx;
            tree.nodes.push_back(std::move(node));
            child_nodes.push_back(idx);
        }
        tree.nodes[head].children = std::move(child_nodes);
    }

    for (int f : bounded)
        require(tree.node_of_face[f] >= 0, ErrorCode::AttachmentShapeViolation,
                "skeleton face unreachable through separating attachments");

    // Each non-root attachment must cut its whole subtree side off from the
    // rest of G, not just from the parent face.
    {
        std::vector<std::vector<int>> subtree_terr(tree.nodes.size());
        for (int i = static_cast<int>(tree.nodes.size()) - 1; i >= 0; --i) {
            auto& mine = subtree_terr[i];
            const auto& terr = sk.territory[tree.nodes[i].face];
            mine.insert(mine.end(), terr.begin(), terr.end());
            for (int c : tree.nodes[i].children)
                mine.insert(mine.end(), subtree_terr[c].begin(), subtree_terr[c].end());
            std::sort(mine.begin(), mine.end());
            mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
        }
        std::vector<char> inside(g.vertex_count(), 0);
        for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
            for (int v : subtree_terr[i]) inside[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!inside[v]) rest.push_back(v);
            require(separates(g, subtree_terr[i], rest, tree.nodes[i].attachment),
                    ErrorCode::AttachmentShapeViolation,
                    "attachment does not separate its subtree from the rest");
            for (int v : subtree_terr[i]) inside[v] = 0;
        }
    }
    return tree;
}

// ── Case 4: composite skeleton ──────────────────────────────────────

Coloring case4_impl(const PlaneGraph& g, int degree_cap, const ColorOptions& opts) {
    SkeletonAnalysis sk = analyze_skeleton(g);
    OuterTree tree = build_outer_tree_from(g, sk);

    // Pick a good face whose strict descendants are all bad.  Deepest first,
    // but a face whose territory is entirely shared with other faces would
    // leave the parent side equal to the whole graph, so faces with a
    // private vertex (or the root, whose parent side is empty) win first.
    int pick = -1;
    {
        std::vector<int> coverage(g.vertex_count(), 0);
        for (const auto& node : tree.nodes)
            for (int v : sk.territory[node.face]) ++coverage[v];
        std::vector<char> all_bad_below(tree.nodes.size(), 1);
        for (int i = static_cast<int>(tree.nodes.size()) - 1; i >= 0; --i)
            for (int c : tree.nodes[i].children)
                if (tree.nodes[c].good || !all_bad_below[c]) all_bad_below[i] = 0;

        auto key = [&](int i) {
            const auto& node = tree.nodes[i];
            bool has_private = i == tree.root;
            for (int v : sk.territory[node.face])
                if (coverage[v] == 1) has_private = true;
            return std::make_tuple(has_private ? 0 : 1, -node.depth,
                                   sk.territory[node.face].front(), node.face);
        };
        for (int i = 0; i < static_cast<int>(tree.nodes.size()); ++i) {
            if (!tree.nodes[i].good || !all_bad_below[i]) continue;
            if (pick < 0 || key(i) < key(pick)) pick = i;
        }
    }
    require(pick >= 0, ErrorCode::InternalInvariantViolation, "no good face");
    const OuterTree::Node& fnode = tree.nodes[pick];

    // Subtree membership: 0 = outside (parent side), otherwise the child
    // index (1-based) whose subtree contains the face.
    std::vector<int> side(tree.nodes.size(), 0);
    {
        for (std::size_t ci = 0; ci < fnode.children.size(); ++ci) {
            std::queue<int> q;
            q.push(fnode.children[ci]);
            while (!q.empty()) {
                int a = q.front();
                q.pop();
                side[a] = static_cast<int>(ci) + 1;
                for (int c : tree.nodes[a].children) q.push(c);
            }
        }
        side[pick] = -1;
    }

    int k = static_cast<int>(fnode.children.size());
    const std::vector<int>& x0 = fnode.attachment;
    std::vector<char> in_x0(g.vertex_count(), 0);
    for (int v : x0) in_x0[v] = 1;

    // Region vertex sets.
    std::vector<int> gf_vertices = sk.territory[fnode.face];
    std::vector<int> g0_vertices;
    std::vector<std::vector<int>> gi_vertices(k);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& terr = sk.territory[tree.nodes[i].face];
        if (side[i] == 0)
            g0_vertices.insert(g0_vertices.end(), terr.begin(), terr.end());
        else if (side[i] > 0)
            gi_vertices[side[i] - 1].insert(gi_vertices[side[i] - 1].end(),
                                            terr.begin(), terr.end());
    }
    auto dedupe = [](std::vector<int>& xs) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    };
    dedupe(g0_vertices);
    for (auto& xs : gi_vertices) dedupe(xs);

    // Attachment pairs of the bad children; the endpoint outside the
    // parent attachment drives the prescribed edge.
    std::vector<std::pair<int, int>> uv(k);
    for (int i = 0; i < k; ++i) {
        const auto& att = tree.nodes[fnode.children[i]].attachment;
        require(att.size() == 2, ErrorCode::InternalInvariantViolation,
                "child of the deepest good face lacks a two-vertex attachment");
        int a = att[0], b = att[1];
        require(!(in_x0[a] && in_x0[b]), ErrorCode::InternalInvariantViolation,
                "child attachment contained in the parent attachment");
        if (in_x0[b]) std::swap(a, b);
        if (!in_x0[a] && !in_x0[b] && a > b) std::swap(a, b);
        uv[i] = {a, b};
    }

    Coloring colors(g.vertex_count(), 0);

    // Step 1: parent side by the general recursion, the chosen face by the
    // chordless-cycle case.
    Coloring g0_colors(g.vertex_count(), 0);
    if (!g0_vertices.empty()) {
        require(static_cast<int>(g0_vertices.size()) < g.vertex_count(),
                ErrorCode::InternalInvariantViolation, "parent side did not shrink");
        auto [g0, g0_map] = induced_single(g, g0_vertices,
                                           ErrorCode::InternalInvariantViolation,
                                           "parent side disconnected");
        Coloring sub = color_impl(g0, degree_cap, opts);
        for (std::size_t i = 0; i < sub.size(); ++i)
            g0_colors[g0_map.origin[i].front()] = sub[i];
    }
    require(static_cast<int>(gf_vertices.size()) < g.vertex_count(),
            ErrorCode::InternalInvariantViolation, "face territory did not shrink");
    auto [gf, gf_map] = induced_single(g, gf_vertices,
                                       ErrorCode::InternalInvariantViolation,
                                       "face territory disconnected");
    Coloring gf_colors_sub = case2_impl(gf, degree_cap, opts);
    Coloring gf_colors(g.vertex_count(), 0);
    for (std::size_t i = 0; i < gf_colors_sub.size(); ++i)
        gf_colors[gf_map.origin[i].front()] = gf_colors_sub[i];

    auto [gf_outer_sub, gf_second_sub] = boundary_layers(gf);
    std::vector<char> on_gf_outer(g.vertex_count(), 0);
    for (int v : gf_outer_sub) on_gf_outer[gf_map.origin[v].front()] = 1;

    // Step 2: align the parent attachment, flip its at most two outer
    // neighbors away from their unique attachment neighbor, and push its
    // interior neighbors to color 3.
    if (!x0.empty()) {
        for (int v : x0) {
            require(g0_colors[v] == 1 || g0_colors[v] == 2,
                    ErrorCode::InternalInvariantViolation,
                    "parent attachment vertex not colored 1 or 2");
            gf_colors[v] = g0_colors[v];
        }
        std::vector<int> flip;
        for (int w : gf_vertices) {
            if (!on_gf_outer[w] || in_x0[w]) continue;
            int count = 0, attachment_color = 0;
            for (int nb : gf.neighbors(gf_map.forward[w])) {
                int nb_g = gf_map.origin[nb].front();
                if (in_x0[nb_g]) {
                    ++count;
                    attachment_color = gf_colors[nb_g];
                }
            }
            if (count == 0) continue;
            require(count == 1, ErrorCode::NonUniqueNeighborInX0,
                    "outer neighbor of the attachment is adjacent to both its vertices");
            flip.push_back(w);
            gf_colors[w] = attachment_color == 1 ? 2 : 1;
        }
        require(flip.size() <= 2, ErrorCode::InternalInvariantViolation,
                "more than two outer neighbors of the parent attachment");
        int pushed = 0;
        for (int w : gf_vertices) {
            if (on_gf_outer[w]) continue;
            bool touches = false;
            for (int nb : g.neighbors(w))
                if (in_x0[nb]) touches = true;
            if (touches) {
                gf_colors[w] = 3;
                ++pushed;
            }
        }
        require(pushed <= 2 * degree_cap - 4, ErrorCode::InternalInvariantViolation,
                "too many interior neighbors of the parent attachment");
    }

    // Step 3: each child side through the triangulated-skeleton case with
    // the post-step-2 colors of its attachment pair.
    for (int i = 0; i < k; ++i) {
        require(static_cast<int>(gi_vertices[i].size()) < g.vertex_count(),
                ErrorCode::InternalInvariantViolation, "child side did not shrink");
        auto [gi, gi_map] = induced_single(g, gi_vertices[i],
                                           ErrorCode::InternalInvariantViolation,
                                           "child side disconnected");
        auto [a, b] = uv[i];
        Coloring sub = case3_impl(gi, gi_map.forward[a], gi_map.forward[b],
                                  gf_colors[a], gf_colors[b], degree_cap, opts);
        Coloring gi_colors(g.vertex_count(), 0);
        for (std::size_t x = 0; x < sub.size(); ++x)
            gi_colors[gi_map.origin[x].front()] = sub[x];
        for (int w : gi_vertices[i]) {
            require(colors[w] == 0 || colors[w] == gi_colors[w],
                    ErrorCode::InternalInvariantViolation,
                    "child sides disagree on a shared vertex");
            colors[w] = gi_colors[w];
        }
    }

    // Union of the pieces; every overlap must agree.
    for (int w : gf_vertices) {
        require(colors[w] == 0 || colors[w] == gf_colors[w],
                ErrorCode::InternalInvariantViolation,
                "face and child colorings disagree on a shared vertex");
        colors[w] = gf_colors[w];
    }
    for (int w : g0_vertices) {
        require(colors[w] == 0 || colors[w] == g0_colors[w],
                ErrorCode::InternalInvariantViolation,
                "parent side disagrees with the rest on a shared vertex");
        colors[w] = g0_colors[w];
    }
    for (int w = 0; w < g.vertex_count(); ++w)
        require(colors[w] != 0, ErrorCode::InternalInvariantViolation,
                "vertex left uncolored by the composite case");

    maybe_verify_level(g, colors, degree_cap, opts);
    return colors;
}

// ── Dispatch ────────────────────────────────────────────────────────

Coloring color_impl(const PlaneGraph& g, int degree_cap, const ColorOptions& opts) {
    CaseTag tag = classify_case(g);
    switch (tag.kind) {
        case CaseKind::Base:
            return Coloring{1};
        case CaseKind::DegreeOne: {
            int v = *tag.degree_one_vertex;
            int u = g.neighbors(v).front();
            std::vector<int> keep;
            for (int w = 0; w < g.vertex_count(); ++w)
                if (w != v) keep.push_back(w);
            auto [sub, vm] = induced_single(g, keep,
                                            ErrorCode::InternalInvariantViolation,
                                            "leaf removal disconnected the graph");
            Coloring sub_colors = color_impl(sub, degree_cap, opts);
            Coloring colors(g.vertex_count(), 0);
            for (std::size_t i = 0; i < sub_colors.size(); ++i)
                colors[vm.origin[i].front()] = sub_colors[i];
            require(colors[u] == 1 || colors[u] == 2,
                    ErrorCode::InternalInvariantViolation,
                    "support of a leaf not colored 1 or 2");
            colors[v] = colors[u] == 1 ? 2 : 1;
            maybe_verify_level(g, colors, degree_cap, opts);
            return colors;
        }
        case CaseKind::ChordlessCycle:
            return case2_impl(g, degree_cap, opts);
        case CaseKind::TriangulatedSkeleton: {
            // Unconstrained entry: smallest outer skeleton edge, colors 1, 2.
            SkeletonAnalysis sk = analyze_skeleton(g);
            const auto& jouter = sk.skeleton.faces().walks[sk.skeleton.faces().outer];
            std::pair<int, int> best{-1, -1};
            for (const Dart& d : jouter) {
                int a = sk.j_to_g[d.first], b = sk.j_to_g[d.second];
                std::pair<int, int> e{std::min(a, b), std::max(a, b)};
                if (best.first < 0 || e < best) best = e;
            }
            return case3_impl(g, best.first, best.second, 1, 2, degree_cap, opts);
        }
        case CaseKind::Composite: {
            // The skeleton's face tree cannot span across a bridge (face
            // boundaries on the two sides are disjoint), so split there
            // first.
            if (auto bridge = smallest_bridge(g))
                return bridge_split_impl(g, *bridge, degree_cap, opts);
            return case4_impl(g, degree_cap, opts);
        }
    }
    fail(ErrorCode::InternalInvariantViolation, "unreachable case");
}

}  // namespace

// ── Public surface ──────────────────────────────────────────────────

CaseTag classify_case(const PlaneGraph& g) {
    require(g.near_triangulated(), ErrorCode::NotNearTriangulated,
            "graph has a non-triangular bounded face");
    if (g.vertex_count() == 1) return {CaseKind::Base, std::nullopt};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) return {CaseKind::DegreeOne, v};

    SkeletonAnalysis sk = analyze_skeleton(g);
    bool cycle = true;
    for (int j = 0; j < sk.skeleton.vertex_count(); ++j)
        if (sk.skeleton.degree(j) != 2) cycle = false;
    if (cycle) return {CaseKind::ChordlessCycle, std::nullopt};

    bool all_triangles = true;
    for (int f = 0; f < sk.skeleton.faces().count(); ++f)
        if (f != sk.skeleton.faces().outer && sk.skeleton.faces().walks[f].size() != 3)
            all_triangles = false;
    if (all_triangles) return {CaseKind::TriangulatedSkeleton, std::nullopt};
    return {CaseKind::Composite, std::nullopt};
}

OuterTree build_outer_tree(const PlaneGraph& g, const PlaneGraph& skeleton,
                           const VertexMap& skeleton_map) {
    SkeletonAnalysis sk = analyze_skeleton(g);
    require(sk.skeleton.vertex_count() == skeleton.vertex_count() &&
                sk.skeleton.edge_count() == skeleton.edge_count(),
            ErrorCode::InvalidInput, "skeleton does not match the graph");
    (void)skeleton_map;
    return build_outer_tree_from(g, sk);
}

Coloring color_near_triangulated(const PlaneGraph& g, int degree_cap,
                                 const ColorOptions& options) {
    require(degree_cap >= std::max(1, g.max_degree()), ErrorCode::InvalidInput,
            "degree parameter below the maximum degree");
    Coloring colors = color_impl(g, degree_cap, options);
    PropertyReport report = check_layer_properties(g, colors, degree_cap);
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "inductive guarantees violated at the top level");
    return colors;
}

Coloring color_case2(const PlaneGraph& g, int degree_cap, const ColorOptions& options) {
    require(degree_cap >= std::max(1, g.max_degree()), ErrorCode::InvalidInput,
            "degree parameter below the maximum degree");
    CaseTag tag = classify_case(g);
    require(tag.kind == CaseKind::ChordlessCycle, ErrorCode::InvalidInput,
            "outer skeleton is not a chordless cycle");
    Coloring colors = case2_impl(g, degree_cap, options);
    PropertyReport report = check_layer_properties(g, colors, degree_cap,
                                                     LayerCheckOptions{.case2 = true});
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "chordless-cycle case violated its guarantees");
    return colors;
}

Coloring color_case3(const PlaneGraph& g, int u, int v, int phi_u, int phi_v,
                     int degree_cap, const ColorOptions& options) {
    require(degree_cap >= std::max(1, g.max_degree()), ErrorCode::InvalidInput,
            "degree parameter below the maximum degree");
    require(g.near_triangulated(), ErrorCode::NotNearTriangulated,
            "graph has a non-triangular bounded face");
    Coloring colors = case3_impl(g, u, v, phi_u, phi_v, degree_cap, options);
    PropertyReport report = check_layer_properties(
        g, colors, degree_cap,
        LayerCheckOptions{.case3 = true,
                            .case3_u = u,
                            .case3_v = v,
                            .case3_phi_u = phi_u,
                            .case3_phi_v = phi_v});
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "triangulated-skeleton case violated its guarantees");
    return colors;
}

Coloring color_case4(const PlaneGraph& g, int degree_cap, const ColorOptions& options) {
    require(degree_cap >= std::max(1, g.max_degree()), ErrorCode::InvalidInput,
            "degree parameter below the maximum degree");
    CaseTag tag = classify_case(g);
    require(tag.kind == CaseKind::Composite, ErrorCode::InvalidInput,
            "graph is handled by an earlier case");
    Coloring colors = case4_impl(g, degree_cap, options);
    PropertyReport report = check_layer_properties(g, colors, degree_cap);
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "composite case violated its guarantees");
    return colors;
}

Coloring color_planar(const PlaneGraph& g, const ColorOptions& options) {
    int delta = g.max_degree();
    Coloring colors;
    if (delta <= 2) {
        // Paths and even cycles take a proper 2-coloring (all components
        // singletons).  An odd cycle cannot avoid color 3 on its outer face
        // while staying proper, so it alternates 1, 2 instead and accepts a
        // single component of size 2.
        colors.assign(g.vertex_count(), 0);
        bool two_colorable = true;
        std::queue<int> q;
        colors[0] = 1;
        q.push(0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int nb : g.neighbors(u)) {
                if (colors[nb] == 0) {
                    colors[nb] = colors[u] == 1 ? 2 : 1;
                    q.push(nb);
                } else if (colors[nb] == colors[u]) {
                    two_colorable = false;
                }
            }
        }
        if (!two_colorable) {
            const auto& walk = g.faces().walks[g.faces().outer];
            int len = static_cast<int>(walk.size());
            int start = 0;
            for (int i = 0; i < len; ++i)
                if (walk[i].first < walk[start].first) start = i;
            std::vector<char> seen(g.vertex_count(), 0);
            int position = 0;
            for (int i = 0; i < len; ++i) {
                int v = walk[(start + i) % len].first;
                if (seen[v]) continue;
                seen[v] = 1;
                colors[v] = position % 2 == 0 ? 1 : 2;
                ++position;
            }
        }
    } else {
        Augmentation aug = near_triangulate(g);
        Coloring full = color_near_triangulated(aug.graph, 3 * delta, options);
        colors.assign(full.begin(), full.begin() + g.vertex_count());
    }
    PropertyReport report = check_planar_properties(g, colors, std::max(delta, 1));
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "whole-graph guarantees violated");
    return colors;
}

}  // namespace clustercolor
