#include "clustercolor/two_coloring.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "clustercolor/bounds.hpp"
#include "clustercolor/verify.hpp"

namespace clustercolor {

namespace {

int opposite(int color) { return color == 1 ? 2 : 1; }

std::vector<int> sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

// ── PathInstance ────────────────────────────────────────────────────

int PathInstance::path_position(int v) const {
    return v >= 0 && v < static_cast<int>(path_pos_.size()) ? path_pos_[v] : -1;
}

PathInstance PathInstance::make(PlaneGraph graph, std::vector<int> path,
                                int root_vertex) {
    PathInstance inst;
    inst.graph = std::move(graph);
    inst.path = std::move(path);
    inst.root_vertex = root_vertex;
    const PlaneGraph& g = inst.graph;
    int n = g.vertex_count();
    int p = static_cast<int>(inst.path.size());

    require(p >= 3, ErrorCode::HypothesisViolation, "path must have at least 3 vertices");
    inst.path_pos_.assign(n, -1);
    for (int i = 0; i < p; ++i) {
        int v = inst.path[i];
        require(v >= 0 && v < n, ErrorCode::InvalidInput, "path id out of range");
        require(inst.path_pos_[v] < 0, ErrorCode::InvalidInput, "path repeats a vertex");
        inst.path_pos_[v] = i;
    }
    require(root_vertex >= 0 && root_vertex < n && inst.path_pos_[root_vertex] < 0,
            ErrorCode::HypothesisViolation, "root vertex must lie in the stable set");

    for (int v = 0; v < n; ++v)
        if (inst.path_pos_[v] < 0) inst.stable.push_back(v);

    // P induced: path vertices are adjacent exactly to their path neighbors.
    for (int i = 0; i < p; ++i) {
        int v = inst.path[i];
        for (int nb : g.neighbors(v)) {
            int j = inst.path_pos_[nb];
            if (j >= 0)
                require(std::abs(i - j) == 1, ErrorCode::HypothesisViolation,
                        "path is not induced (chord at vertex " + std::to_string(v) + ")");
        }
        if (i + 1 < p)
            require(g.has_edge(v, inst.path[i + 1]), ErrorCode::HypothesisViolation,
                    "consecutive path vertices not adjacent");
    }

    // S stable, every member of degree >= 2, degree-2 members with
    // non-adjacent neighbors.
    for (int s : inst.stable) {
        for (int nb : g.neighbors(s))
            require(inst.path_pos_[nb] >= 0, ErrorCode::HypothesisViolation,
                    "stable set contains adjacent vertices");
        require(g.degree(s) >= 2, ErrorCode::HypothesisViolation,
                "stable vertex " + std::to_string(s) + " has degree below 2");
        if (g.degree(s) == 2) {
            int a = g.neighbors(s)[0], b = g.neighbors(s)[1];
            require(!g.has_edge(a, b), ErrorCode::HypothesisViolation,
                    "degree-2 stable vertex with adjacent neighbors");
        }
    }

    // Root adjacent to exactly the path endpoints.
    {
        require(g.degree(root_vertex) == 2, ErrorCode::HypothesisViolation,
                "root vertex degree must be exactly 2");
        std::vector<int> nbrs = sorted_unique(g.neighbors(root_vertex));
        std::vector<int> ends = sorted_unique({inst.path.front(), inst.path.back()});
        require(nbrs == ends, ErrorCode::HypothesisViolation,
                "root vertex must be adjacent to exactly the path endpoints");
    }

    // Outer face bounded by the cycle on V(P) + r.
    {
        const auto& walk = g.faces().walks[g.faces().outer];
        require(static_cast<int>(walk.size()) == p + 1, ErrorCode::HypothesisViolation,
                "outer face is not the path-root cycle");
        std::vector<int> tails;
        for (const Dart& d : walk) tails.push_back(d.first);
        std::vector<int> expected = inst.path;
        expected.push_back(root_vertex);
        require(sorted_unique(tails) == sorted_unique(expected) &&
                    sorted_unique(tails).size() == walk.size(),
                ErrorCode::HypothesisViolation,
                "outer face is not the path-root cycle");
    }

    // Every two consecutive path vertices share a stable neighbor.
    for (int i = 0; i + 1 < p; ++i) {
        int u = inst.path[i], v = inst.path[i + 1];
        bool found = false;
        for (int nb : g.neighbors(u)) {
            if (inst.path_pos_[nb] >= 0 || nb == root_vertex) continue;
            if (g.has_edge(nb, v)) {
                found = true;
                break;
            }
        }
        require(found, ErrorCode::HypothesisViolation,
                "consecutive path vertices without a common stable neighbor");
    }

    for (int v : inst.path)
        inst.path_degree = std::max(inst.path_degree, g.degree(v));
    inst.max_degree = g.max_degree();
    require(inst.path_degree >= 2, ErrorCode::HypothesisViolation,
            "path degree below 2");
    return inst;
}

// ── alternate_coloring ──────────────────────────────────────────────

std::vector<int> alternate_coloring(int k, int color_a, int color_b) {
    require(k >= 0, ErrorCode::InvalidInput, "negative interior count");
    require((color_a == 1 || color_a == 2) && (color_b == 1 || color_b == 2),
            ErrorCode::InvalidColor, "endpoint colors must be 1 or 2");
    std::vector<int> seq;
    seq.reserve(k + 2);
    seq.push_back(color_a);
    if (k == 1) {
        seq.push_back(color_a == 1 && color_b == 1 ? 2 : 1);
    } else if (k >= 2) {
        seq.push_back(opposite(color_a));
        for (int i = 2; i <= k - 1; ++i) seq.push_back(opposite(seq.back()));
        seq.push_back(opposite(color_b));
    }
    seq.push_back(color_b);

    for (std::size_t i = 0; i + 2 < seq.size(); ++i)
        require(!(seq[i] == seq[i + 1] && seq[i + 1] == seq[i + 2]),
                ErrorCode::InternalInvariantViolation,
                "three consecutive equal colors in alternate coloring");
    if (k >= 1) {
        require(color_a != 2 || seq[1] == 1, ErrorCode::InternalInvariantViolation,
                "left endpoint of color 2 not followed by a 1");
        require(color_b != 2 || seq[k] == 1, ErrorCode::InternalInvariantViolation,
                "right endpoint of color 2 not preceded by a 1");
    }
    return seq;
}

// ── FaceTree ────────────────────────────────────────────────────────

FaceTree build_face_tree(const PathInstance& inst) {
    const PlaneGraph& g = inst.graph;
    const FaceSet& fs = g.faces();
    std::vector<char> in_stable(g.vertex_count(), 0);
    for (int s : inst.stable) in_stable[s] = 1;

    FaceTree tree;
    tree.node_of_face.assign(fs.count(), -1);

    // Root: the unique bounded face at the root vertex.
    {
        auto root_faces = g.bounded_faces_at(inst.root_vertex);
        require(root_faces.size() == 1, ErrorCode::InternalInvariantViolation,
                "root vertex must have exactly one bounded face");
        FaceTree::Node node;
        node.face = root_faces[0];
        node.s = inst.root_vertex;
        tree.root = 0;
        tree.node_of_face[node.face] = 0;
        tree.nodes.push_back(std::move(node));
    }

    auto fill_node = [&](FaceTree::Node& node) {
        auto boundary = fs.vertices_of(node.face);
        std::vector<char> on_boundary(g.vertex_count(), 0);
        for (int v : boundary) on_boundary[v] = 1;

        for (int v : boundary)
            if (in_stable[v] && v != node.s) node.stable_set.push_back(v);

        // Extreme path neighbors of s on this face.
        int best_lo = -1, best_hi = -1;
        for (int nb : g.neighbors(node.s)) {
            if (!on_boundary[nb]) continue;
            int pos = inst.path_position(nb);
            if (pos < 0) continue;
            if (best_lo < 0 || pos < inst.path_position(best_lo)) best_lo = nb;
            if (best_hi < 0 || pos > inst.path_position(best_hi)) best_hi = nb;
        }
        if (node.s == inst.root_vertex) {
            node.a = inst.path.front();
            node.b = inst.path.back();
        } else {
            require(best_lo >= 0 && best_hi >= 0 && best_lo != best_hi,
                    ErrorCode::InternalInvariantViolation,
                    "face vertex s lacks two path neighbors on the boundary");
            node.a = best_lo;
            node.b = best_hi;
        }

        for (int v : boundary)
            if (inst.path_position(v) >= 0 && v != node.a && v != node.b)
                node.corners.push_back(v);
        std::sort(node.corners.begin(), node.corners.end(), [&](int u, int v) {
            return inst.path_position(u) < inst.path_position(v);
        });

        std::vector<char> is_corner(g.vertex_count(), 0);
        for (int v : node.corners) is_corner[v] = 1;
        std::set<int> pivot_set;
        for (int u : node.stable_set)
            for (int nb : g.neighbors(u)) {
                if (nb == node.a || nb == node.b || is_corner[nb]) continue;
                require(inst.path_position(nb) >= 0,
                        ErrorCode::InternalInvariantViolation,
                        "stable vertex adjacent to a non-path vertex");
                pivot_set.insert(nb);
            }
        node.pivots.assign(pivot_set.begin(), pivot_set.end());
        std::sort(node.pivots.begin(), node.pivots.end(), [&](int u, int v) {
            return inst.path_position(u) < inst.path_position(v);
        });
        for (int v : node.pivots) {
            int anchor = -1;
            for (int nb : g.neighbors(v))
                if (std::binary_search(node.stable_set.begin(), node.stable_set.end(), nb)) {
                    require(anchor < 0, ErrorCode::InternalInvariantViolation,
                            "pivot with two stable anchors on one face");
                    anchor = nb;
                }
            node.psi[v] = anchor;
            if (g.degree(v) == 3) {
                auto faces_at = g.bounded_faces_at(v);
                bool all_triangles =
                    faces_at.size() == 2 &&
                    fs.walks[faces_at[0]].size() == 3 && fs.walks[faces_at[1]].size() == 3;
                if (all_triangles) node.isolated_pivots.push_back(v);
            }
        }
    };

    fill_node(tree.nodes[0]);

    // Breadth-first over faces sharing a residual stable vertex.
    for (std::size_t head = 0; head < tree.nodes.size(); ++head) {
        std::vector<int> child_nodes;
        for (int u : tree.nodes[head].stable_set) {
            for (int f : g.bounded_faces_at(u)) {
                if (f == tree.nodes[head].face) continue;
                require(tree.node_of_face[f] < 0, ErrorCode::InternalInvariantViolation,
                        "face reachable from two tree nodes");
                FaceTree::Node node;
                node.face = f;
                node.parent = static_cast<int>(head);
                node.depth = tree.nodes[head].depth + 1;
                node.s = u;
                int idx = static_cast<int>(tree.nodes.size());
                tree.node_of_face[f] = idx;
                tree.nodes.push_back(std::move(node));
                fill_node(tree.nodes[idx]);
                // The shared stable vertex must be unique.
                {
                    auto parent_boundary = fs.vertices_of(tree.nodes[head].face);
                    auto child_boundary = fs.vertices_of(f);
                    int shared = 0;
                    for (int v : child_boundary)
                        if (in_stable[v] &&
                            std::binary_search(parent_boundary.begin(),
                                               parent_boundary.end(), v))
                            ++shared;
                    require(shared == 1, ErrorCode::InternalInvariantViolation,
                            "parent and child share more than one stable vertex");
                }
                child_nodes.push_back(idx);
            }
        }
        std::sort(child_nodes.begin(), child_nodes.end(), [&](int x, int y) {
            int px = inst.path_position(tree.nodes[x].a);
            int py = inst.path_position(tree.nodes[y].a);
            if (px != py) return px < py;
            return tree.nodes[x].face < tree.nodes[y].face;
        });
        tree.nodes[head].children = std::move(child_nodes);
    }

    // Every bounded face reached.
    for (int f = 0; f < fs.count(); ++f)
        if (f != fs.outer)
            require(tree.node_of_face[f] >= 0, ErrorCode::InternalInvariantViolation,
                    "face tree does not span all bounded faces");

    // Corners and pivots partition the internal path vertices.
    {
        std::vector<int> owner(g.vertex_count(), -1);
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            for (int v : tree.nodes[i].corners) {
                require(owner[v] < 0, ErrorCode::InternalInvariantViolation,
                        "vertex is a corner or pivot of two faces");
                owner[v] = static_cast<int>(i);
            }
            for (int v : tree.nodes[i].pivots) {
                require(owner[v] < 0, ErrorCode::InternalInvariantViolation,
                        "vertex is a corner or pivot of two faces");
                owner[v] = static_cast<int>(i);
            }
        }
        for (int i = 1; i + 1 < static_cast<int>(inst.path.size()); ++i)
            require(owner[inst.path[i]] >= 0, ErrorCode::InternalInvariantViolation,
                    "internal path vertex is neither corner nor pivot");
    }

    // Leaves are exactly the triangular faces sharing an edge with the
    // outer face.
    for (const auto& node : tree.nodes) {
        bool leaf = node.children.empty();
        const auto& walk = fs.walks[node.face];
        bool outer_edge = false;
        for (const Dart& d : walk)
            if (g.face_left_of({d.second, d.first}) == fs.outer) outer_edge = true;
        bool is_leaf_shape = walk.size() == 3 && outer_edge;
        require(leaf == is_leaf_shape, ErrorCode::InternalInvariantViolation,
                "leaf faces must be exactly the boundary triangles");
    }

    return tree;
}

// ── color_path_instance ─────────────────────────────────────────────

Coloring color_path_instance(const PathInstance& inst) {
    const PlaneGraph& g = inst.graph;
    int d = inst.path_degree;
    require(d >= 2, ErrorCode::HypothesisViolation,
            "path degree must be at least 2");
    FaceTree tree = build_face_tree(inst);

    Coloring colors(g.vertex_count(), 0);
    for (int s : inst.stable) colors[s] = 2;

    auto apply_alternate = [&](const std::vector<int>& members) {
        // members sorted by path position, endpoints already colored.
        int k = static_cast<int>(members.size()) - 2;
        auto seq = alternate_coloring(k, colors[members.front()], colors[members.back()]);
        for (int i = 1; i <= k; ++i) {
            require(colors[members[i]] == 0, ErrorCode::InternalInvariantViolation,
                    "corner colored twice");
            colors[members[i]] = seq[i];
        }
    };

    // Depth-first, children in stored order.
    std::vector<int> stack = {tree.root};
    while (!stack.empty()) {
        const FaceTree::Node& node = tree.nodes[stack.back()];
        stack.pop_back();
        if (node.parent < 0) {
            colors[inst.path.front()] = 2;
            colors[inst.path.back()] = 2;
        } else {
            require(colors[node.a] != 0 && colors[node.b] != 0,
                    ErrorCode::InternalInvariantViolation,
                    "face processed before its anchors were colored");
        }
        std::vector<int> members;
        members.push_back(node.a);
        members.insert(members.end(), node.corners.begin(), node.corners.end());
        members.push_back(node.b);
        apply_alternate(members);

        bool low_band = node.depth % (2 * d) < d;
        for (int v : node.pivots) {
            require(colors[v] == 0, ErrorCode::InternalInvariantViolation,
                    "pivot colored twice");
            bool isolated = std::find(node.isolated_pivots.begin(),
                                      node.isolated_pivots.end(),
                                      v) != node.isolated_pivots.end();
            colors[v] = isolated ? 2 : (low_band ? 1 : 2);
        }
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            stack.push_back(*it);
    }

    for (int v = 0; v < g.vertex_count(); ++v)
        require(colors[v] != 0, ErrorCode::InternalInvariantViolation,
                "vertex left uncolored");

    PropertyReport report = check_two_coloring_postconditions(inst, colors);
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "path coloring violates its guarantees");
    return colors;
}

// ── CycleInstance ───────────────────────────────────────────────────

int CycleInstance::cycle_position(int v) const {
    return v >= 0 && v < static_cast<int>(cycle_pos_.size()) ? cycle_pos_[v] : -1;
}

CycleInstance CycleInstance::make(PlaneGraph graph) {
    CycleInstance inst;
    inst.graph = std::move(graph);
    const PlaneGraph& g = inst.graph;
    const auto& walk = g.faces().walks[g.faces().outer];
    int len = static_cast<int>(walk.size());
    require(len >= 3, ErrorCode::HypothesisViolation,
            "outer face must be a cycle of length at least 3");

    inst.cycle_pos_.assign(g.vertex_count(), -1);
    for (int i = 0; i < len; ++i) {
        int v = walk[i].first;
        require(inst.cycle_pos_[v] < 0, ErrorCode::HypothesisViolation,
                "outer walk repeats a vertex; it does not bound a cycle");
        inst.cycle_pos_[v] = i;
        inst.cycle.push_back(v);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (inst.cycle_pos_[v] < 0) inst.stable.push_back(v);

    for (int i = 0; i < len; ++i) {
        int v = inst.cycle[i];
        for (int nb : g.neighbors(v)) {
            int j = inst.cycle_pos_[nb];
            if (j < 0) continue;
            int diff = std::abs(i - j);
            require(diff == 1 || diff == len - 1, ErrorCode::HypothesisViolation,
                    "cycle has a chord at vertex " + std::to_string(v));
        }
        inst.cycle_degree = std::max(inst.cycle_degree, g.degree(v));
    }
    for (int s : inst.stable)
        for (int nb : g.neighbors(s))
            require(inst.cycle_pos_[nb] >= 0, ErrorCode::HypothesisViolation,
                    "stable set contains adjacent vertices");
    inst.max_degree = g.max_degree();
    return inst;
}

// ── normalize / replay / reverse ────────────────────────────────────

namespace {

// Iteration order around the cycle: stored direction, starting at the
// smallest vertex id.
std::vector<int> canonical_cycle_order(const std::vector<int>& cycle) {
    int start = static_cast<int>(
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<int> order(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i)
        order[i] = static_cast<int>((start + i) % cycle.size());
    return order;
}

// Plant an apex over cycle vertex v (current id, degree 2) and its two
// walk neighbors; returns the new graph.
PlaneGraph plant_apex(const PlaneGraph& g, int v, std::array<int, 3>* attach_out) {
    auto faces_at = g.bounded_faces_at(v);
    require(faces_at.size() == 1, ErrorCode::InternalInvariantViolation,
            "degree-2 cycle vertex must have one bounded corner");
    int f = faces_at[0];
    const auto& walk = g.faces().walks[f];
    int len = static_cast<int>(walk.size());
    int pos = -1;
    for (int i = 0; i < len; ++i)
        if (walk[i].first == v) pos = i;
    require(pos >= 0, ErrorCode::InternalInvariantViolation,
            "cycle vertex missing from its corner face");
    std::array<int, 3> attach = {walk[(pos - 1 + len) % len].first, v,
                                 walk[pos].second};
    if (attach_out) *attach_out = attach;
    return add_apex_in_face(g, f, {attach[0], attach[1], attach[2]});
}

}  // namespace

std::pair<PathInstance, NormalizationPlan>
normalize_cycle_instance(const CycleInstance& cyc) {
    const PlaneGraph& g = cyc.graph;
    NormalizationPlan plan;
    plan.original_n = g.vertex_count();
    plan.original_outer = *g.outer_dart();

    // Prune stable vertices of degree <= 1, or degree 2 with adjacent
    // neighbors; record enough to restore them exactly.
    for (int s : cyc.stable) {
        bool prune = g.degree(s) <= 1;
        if (g.degree(s) == 2) {
            int a = g.neighbors(s)[0], b = g.neighbors(s)[1];
            if (g.has_edge(a, b)) prune = true;
        }
        if (prune) plan.removed.push_back(s);
    }
    for (int v : plan.removed) {
        plan.removed_rotations.push_back(g.neighbors(v));
        std::vector<int> positions;
        for (int nb : g.neighbors(v)) positions.push_back(g.rotation_index(nb, v));
        plan.removed_positions.push_back(std::move(positions));
    }

    std::vector<char> removed_mask(g.vertex_count(), 0);
    for (int v : plan.removed) removed_mask[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed_mask[v]) keep.push_back(v);
    auto parts = induced_plane_subgraph(g, keep);
    require(parts.size() == 1, ErrorCode::InternalInvariantViolation,
            "pruning disconnected the instance");
    PlaneGraph current = std::move(parts[0].first);
    plan.strip_map = std::move(parts[0].second);

    std::vector<int> cycle_cur(cyc.cycle.size());
    for (std::size_t i = 0; i < cyc.cycle.size(); ++i)
        cycle_cur[i] = plan.strip_map.forward[cyc.cycle[i]];
    int len = static_cast<int>(cycle_cur.size());
    auto order = canonical_cycle_order(cycle_cur);

    // Greedy maximal stable set of degree-2 cycle vertices; each chosen
    // vertex gets an apex joined to it and its two cycle neighbors.
    {
        std::vector<char> chosen(len, 0);
        for (int idx : order) {
            if (current.degree(cycle_cur[idx]) != 2) continue;
            if (chosen[(idx + 1) % len] || chosen[(idx - 1 + len) % len]) continue;
            chosen[idx] = 1;
            std::array<int, 3> attach;
            current = plant_apex(current, cycle_cur[idx], &attach);
            plan.apex_attach.push_back(attach);
        }
    }
    for (int v : cycle_cur)
        require(current.degree(v) >= 3, ErrorCode::InternalInvariantViolation,
                "cycle vertex still of degree 2 after planting apexes");

    // Stitch: give every consecutive cycle pair a common off-cycle
    // neighbor by connecting the face-sharing neighbor of the first to the
    // second.
    std::vector<char> on_cycle(current.vertex_count(), 0);
    auto refresh_on_cycle = [&]() {
        on_cycle.assign(current.vertex_count(), 0);
        for (int v : cycle_cur) on_cycle[v] = 1;
    };
    refresh_on_cycle();
    for (int q = 0; q < len; ++q) {
        int u = cycle_cur[order[q]];
        int v = cycle_cur[(order[q] + 1) % len];
        bool covered = false;
        for (int nb : current.neighbors(u))
            if (!on_cycle[nb] && current.has_edge(nb, v)) {
                covered = true;
                break;
            }
        if (covered) continue;
        int inner = current.face_left_of({v, u});
        auto boundary = current.faces().vertices_of(inner);
        int s = -1;
        for (int nb : current.neighbors(u)) {
            if (on_cycle[nb]) continue;
            if (std::binary_search(boundary.begin(), boundary.end(), nb)) {
                require(s < 0, ErrorCode::InternalInvariantViolation,
                        "two off-cycle neighbors share the inner face");
                s = nb;
            }
        }
        require(s >= 0, ErrorCode::InternalInvariantViolation,
                "no off-cycle neighbor on the inner face");
        current = add_edge_in_face(current, inner, s, v);
        plan.added_edges.push_back({s, v});
        refresh_on_cycle();
    }

    // Split the smallest cycle edge and thread the path the long way round.
    {
        int best = -1;
        Dart best_edge{-1, -1};
        for (int i = 0; i < len; ++i) {
            int a = cycle_cur[i], b = cycle_cur[(i + 1) % len];
            Dart e{std::min(a, b), std::max(a, b)};
            if (best < 0 || e < best_edge) {
                best = i;
                best_edge = e;
            }
        }
        int a = cycle_cur[best], b = cycle_cur[(best + 1) % len];
        int x = std::min(a, b), y = std::max(a, b);
        auto [with_r, r] = subdivide_edge(current, x, y);
        current = std::move(with_r);
        plan.split_x = x;
        plan.split_y = y;
        plan.split_r = r;
    }

    // Path from x to y avoiding the split edge, in cycle order.
    std::vector<int> path;
    {
        int px = -1;
        for (int i = 0; i < len; ++i)
            if (cycle_cur[i] == plan.split_x) px = i;
        int step = cycle_cur[(px + 1) % len] == plan.split_y ? -1 : 1;
        for (int i = 0; i < len; ++i)
            path.push_back(cycle_cur[((px + step * i) % len + len) % len]);
        require(path.back() == plan.split_y, ErrorCode::InternalInvariantViolation,
                "path threading failed");
    }

    PathInstance inst = PathInstance::make(std::move(current), std::move(path),
                                           plan.split_r);
    require(inst.max_degree <= 2 * cyc.max_degree,
            ErrorCode::InternalInvariantViolation,
            "normalization more than doubled the maximum degree");
    require(inst.path_degree <= cyc.cycle_degree + 2,
            ErrorCode::InternalInvariantViolation,
            "normalization raised a cycle degree by more than 2");
    return {std::move(inst), std::move(plan)};
}

PathInstance replay_normalization(const CycleInstance& cyc,
                                  const NormalizationPlan& plan) {
    std::vector<char> removed_mask(cyc.graph.vertex_count(), 0);
    for (int v : plan.removed) removed_mask[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < cyc.graph.vertex_count(); ++v)
        if (!removed_mask[v]) keep.push_back(v);
    auto parts = induced_plane_subgraph(cyc.graph, keep);
    require(parts.size() == 1, ErrorCode::InternalInvariantViolation,
            "replay: pruning disconnected the instance");
    PlaneGraph current = std::move(parts[0].first);

    for (const auto& attach : plan.apex_attach) {
        auto faces_at = current.bounded_faces_at(attach[1]);
        require(faces_at.size() == 1, ErrorCode::InternalInvariantViolation,
                "replay: apex target has no unique corner face");
        current = add_apex_in_face(current, faces_at[0],
                                   {attach[0], attach[1], attach[2]});
    }

    std::vector<int> cycle_cur(cyc.cycle.size());
    for (std::size_t i = 0; i < cyc.cycle.size(); ++i)
        cycle_cur[i] = parts[0].second.forward[cyc.cycle[i]];
    int len = static_cast<int>(cycle_cur.size());
    for (const Dart& e : plan.added_edges) {
        int pos = -1;
        for (int i = 0; i < len; ++i)
            if (cycle_cur[i] == e.second) pos = i;
        require(pos >= 0, ErrorCode::InternalInvariantViolation,
                "replay: stitched endpoint not on cycle");
        int u = cycle_cur[(pos - 1 + len) % len];
        int inner = current.face_left_of({e.second, u});
        current = add_edge_in_face(current, inner, e.first, e.second);
    }

    auto [with_r, r] = subdivide_edge(current, plan.split_x, plan.split_y);
    require(r == plan.split_r, ErrorCode::InternalInvariantViolation,
            "replay: split vertex id diverged");
    current = std::move(with_r);

    std::vector<int> path;
    {
        int px = -1;
        for (int i = 0; i < len; ++i)
            if (cycle_cur[i] == plan.split_x) px = i;
        int step = cycle_cur[(px + 1) % len] == plan.split_y ? -1 : 1;
        for (int i = 0; i < len; ++i)
            path.push_back(cycle_cur[((px + step * i) % len + len) % len]);
    }
    return PathInstance::make(std::move(current), std::move(path), plan.split_r);
}

PlaneGraph reverse_normalization(const PathInstance& inst,
                                 const NormalizationPlan& plan) {
    std::vector<std::vector<int>> rot = inst.graph.rotations();

    // Undo the split: drop r, re-join the cycle edge.
    {
        int r = plan.split_r;
        require(r == static_cast<int>(rot.size()) - 1,
                ErrorCode::InternalInvariantViolation, "split vertex is not last");
        int x = plan.split_x, y = plan.split_y;
        std::replace(rot[x].begin(), rot[x].end(), r, y);
        std::replace(rot[y].begin(), rot[y].end(), r, x);
        rot.pop_back();
    }
    // Undo stitching edges.
    for (auto it = plan.added_edges.rbegin(); it != plan.added_edges.rend(); ++it) {
        rot[it->first].erase(
            std::find(rot[it->first].begin(), rot[it->first].end(), it->second));
        rot[it->second].erase(
            std::find(rot[it->second].begin(), rot[it->second].end(), it->first));
    }
    // Undo apexes (they are the trailing ids, in order).
    for (auto it = plan.apex_attach.rbegin(); it != plan.apex_attach.rend(); ++it) {
        int apex = static_cast<int>(rot.size()) - 1;
        for (int w : rot[apex])
            rot[w].erase(std::find(rot[w].begin(), rot[w].end(), apex));
        rot.pop_back();
    }

    // Translate back to original ids and re-insert the pruned vertices.
    std::vector<std::vector<int>> orig_rot(plan.original_n);
    for (std::size_t i = 0; i < rot.size(); ++i) {
        int old_id = plan.strip_map.origin[i].front();
        for (int nb : rot[i])
            orig_rot[old_id].push_back(plan.strip_map.origin[nb].front());
    }
    for (std::size_t i = 0; i < plan.removed.size(); ++i) {
        int v = plan.removed[i];
        orig_rot[v] = plan.removed_rotations[i];
    }
    // Insertion positions refer to the final original rotations; ascending
    // order keeps earlier inserts from shifting later ones.
    {
        std::vector<std::tuple<int, int, int>> inserts;  // (vertex, index, inserted)
        for (std::size_t i = 0; i < plan.removed.size(); ++i)
            for (std::size_t j = 0; j < plan.removed_rotations[i].size(); ++j)
                inserts.emplace_back(plan.removed_rotations[i][j],
                                     plan.removed_positions[i][j], plan.removed[i]);
        std::sort(inserts.begin(), inserts.end());
        for (auto& [w, idx, v] : inserts) {
            if (std::find(plan.removed.begin(), plan.removed.end(), w) !=
                plan.removed.end())
                continue;  // rotation already restored verbatim
            orig_rot[w].insert(orig_rot[w].begin() + idx, v);
        }
    }

    return PlaneGraph::build(plan.original_n, std::move(orig_rot),
                             plan.original_outer);
}

Coloring color_cycle_instance(const CycleInstance& cyc) {
    auto [inst, plan] = normalize_cycle_instance(cyc);
    Coloring inner = color_path_instance(inst);

    Coloring out(cyc.graph.vertex_count(), 0);
    for (int v = 0; v < cyc.graph.vertex_count(); ++v) {
        int mapped = plan.strip_map.forward[v];
        out[v] = mapped >= 0 ? inner[mapped] : 2;
    }
    PropertyReport report = check_two_coloring_postconditions(cyc, out);
    require(report.pass(), ErrorCode::InternalInvariantViolation,
            "cycle coloring violates its guarantees");
    return out;
}

}  // namespace clustercolor
