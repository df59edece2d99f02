#include "clustercolor/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace clustercolor {

namespace {

std::string dart_str(Dart d) {
    return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
}

std::vector<int> sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// Union-find over face ids, plain and small.
struct FaceUnion {
    std::vector<int> parent;
    explicit FaceUnion(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

// ── FaceSet ─────────────────────────────────────────────────────────

std::vector<int> FaceSet::vertices_of(int face) const {
    std::vector<int> vs;
    vs.reserve(walks[face].size());
    for (const Dart& d : walks[face]) vs.push_back(d.first);
    return sorted_unique(std::move(vs));
}

// ── PlaneGraph ──────────────────────────────────────────────────────

PlaneGraph PlaneGraph::build(int n, std::vector<std::vector<int>> rotations,
                             std::optional<Dart> outer) {
    PlaneGraph g;
    g.n_ = n;
    g.rotations_ = std::move(rotations);
    g.outer_ = outer;
    g.validate_and_trace();
    return g;
}

int PlaneGraph::rotation_index(int u, int v) const {
    const auto& rot = rotations_[u];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == v) return i;
    return -1;
}

bool PlaneGraph::has_edge(int u, int v) const {
    return rotation_index(u, v) >= 0;
}

int PlaneGraph::dart_slot(int u, int v) const {
    int idx = rotation_index(u, v);
    require(idx >= 0, ErrorCode::NoSuchEdge,
            "no dart " + dart_str({u, v}));
    return dart_offset_[u] + idx;
}

int PlaneGraph::face_left_of(Dart d) const {
    return face_of_dart_[dart_slot(d.first, d.second)];
}

std::vector<int> PlaneGraph::bounded_faces_at(int v) const {
    std::vector<int> fs;
    for (int nb : rotations_[v]) {
        int f = face_left_of({v, nb});
        if (f != faces_.outer) fs.push_back(f);
    }
    return sorted_unique(std::move(fs));
}

bool PlaneGraph::near_triangulated() const {
    for (int f = 0; f < faces_.count(); ++f) {
        if (f == faces_.outer) continue;
        if (faces_.walks[f].size() != 3) return false;
    }
    return true;
}

void PlaneGraph::validate_and_trace() {
    require(n_ >= 1, ErrorCode::InvalidInput, "vertex count must be positive");
    require(static_cast<int>(rotations_.size()) == n_, ErrorCode::InvalidInput,
            "rotation table size mismatch");

    // Simplicity and symmetry.
    edge_count_ = 0;
    max_degree_ = 0;
    for (int u = 0; u < n_; ++u) {
        std::set<int> seen;
        for (int v : rotations_[u]) {
            require(v >= 0 && v < n_, ErrorCode::InvalidInput,
                    "neighbor id out of range at vertex " + std::to_string(u));
            require(v != u, ErrorCode::LoopOrMultiEdge,
                    "loop at vertex " + std::to_string(u));
            require(seen.insert(v).second, ErrorCode::LoopOrMultiEdge,
                    "parallel edge " + dart_str({u, v}));
            require(rotation_index(v, u) >= 0, ErrorCode::AsymmetricRotation,
                    "dart " + dart_str({u, v}) + " has no reverse");
        }
        edge_count_ += degree(u);
        max_degree_ = std::max(max_degree_, degree(u));
    }
    edge_count_ /= 2;

    // Connectivity.
    std::vector<char> visited(n_, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : rotations_[u])
            if (!visited[v]) {
                visited[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    require(reached == n_, ErrorCode::Disconnected,
            "graph is not connected (" + std::to_string(reached) + " of " +
                std::to_string(n_) + " reachable)");

    // Outer dart.
    if (n_ == 1) {
        require(!outer_.has_value(), ErrorCode::InvalidInput,
                "single-vertex graph has no darts");
        faces_.walks = {std::vector<Dart>{}};
        faces_.outer = 0;
        dart_offset_.assign(1, 0);
        face_of_dart_.clear();
        return;
    }
    require(outer_.has_value(), ErrorCode::InvalidInput,
            "outer dart required for graphs with edges");
    Dart od = *outer_;
    require(od.first >= 0 && od.first < n_ && rotation_index(od.first, od.second) >= 0,
            ErrorCode::InvalidInput, "outer dart " + dart_str(od) + " does not exist");

    // Face tracing: successor of (u, v) is (v, w) with w the rotation
    // successor of u at v.  Iterating darts lexicographically makes every
    // walk start at its smallest dart and orders faces by that dart.
    dart_offset_.assign(n_ + 1, 0);
    for (int u = 0; u < n_; ++u) dart_offset_[u + 1] = dart_offset_[u] + degree(u);
    face_of_dart_.assign(2 * edge_count_, -1);
    faces_.walks.clear();
    faces_.outer = -1;

    for (int u = 0; u < n_; ++u) {
        std::vector<int> nbrs = rotations_[u];
        std::sort(nbrs.begin(), nbrs.end());
        for (int v : nbrs) {
            if (face_of_dart_[dart_slot(u, v)] >= 0) continue;
            int face_id = static_cast<int>(faces_.walks.size());
            std::vector<Dart> walk;
            Dart cur{u, v};
            do {
                walk.push_back(cur);
                face_of_dart_[dart_slot(cur.first, cur.second)] = face_id;
                int idx = rotation_index(cur.second, cur.first);
                int next = rotations_[cur.second][(idx + 1) % degree(cur.second)];
                cur = {cur.second, next};
            } while (cur != Dart{u, v});
            faces_.walks.push_back(std::move(walk));
        }
    }
    faces_.outer = face_of_dart_[dart_slot(od.first, od.second)];

    // Genus check via Euler's relation.
    long long euler = static_cast<long long>(n_) - edge_count_ + faces_.count();
    require(euler == 2, ErrorCode::GenusPositive,
            "V - E + F = " + std::to_string(euler) + ", embedding is not genus 0");
}

// ── Free functions ──────────────────────────────────────────────────

PlaneGraph build_plane_graph(int n, std::vector<std::vector<int>> rotations,
                             std::optional<Dart> outer) {
    return PlaneGraph::build(n, std::move(rotations), std::move(outer));
}

const FaceSet& trace_faces(const PlaneGraph& g) { return g.faces(); }

std::pair<std::vector<int>, std::vector<int>> boundary_layers(const PlaneGraph& g) {
    if (g.vertex_count() == 1) return {{0}, {}};
    std::vector<int> outer_vertices = g.faces().vertices_of(g.faces().outer);
    std::vector<char> on_outer(g.vertex_count(), 0);
    for (int v : outer_vertices) on_outer[v] = 1;
    std::vector<int> second;
    for (int v : outer_vertices)
        for (int nb : g.neighbors(v))
            if (!on_outer[nb]) second.push_back(nb);
    return {outer_vertices, sorted_unique(std::move(second))};
}

std::vector<std::vector<int>> peel(const PlaneGraph& g) {
    std::vector<std::vector<int>> layers;
    // Work list of (piece, new id -> original id).
    std::vector<std::pair<PlaneGraph, std::vector<int>>> work;
    {
        std::vector<int> identity(g.vertex_count());
        std::iota(identity.begin(), identity.end(), 0);
        work.emplace_back(g, std::move(identity));
    }
    while (!work.empty()) {
        std::vector<int> layer;
        std::vector<std::pair<PlaneGraph, std::vector<int>>> next;
        for (auto& [piece, to_orig] : work) {
            auto [outer, _] = boundary_layers(piece);
            for (int v : outer) layer.push_back(to_orig[v]);
            std::vector<char> is_outer(piece.vertex_count(), 0);
            for (int v : outer) is_outer[v] = 1;
            std::vector<int> keep;
            for (int v = 0; v < piece.vertex_count(); ++v)
                if (!is_outer[v]) keep.push_back(v);
            if (keep.empty()) continue;
            for (auto& [sub, vm] : induced_plane_subgraph(piece, keep)) {
                std::vector<int> composed(sub.vertex_count());
                for (int v = 0; v < sub.vertex_count(); ++v)
                    composed[v] = to_orig[vm.origin[v].front()];
                next.emplace_back(std::move(sub), std::move(composed));
            }
        }
        layers.push_back(sorted_unique(std::move(layer)));
        work = std::move(next);
    }
    return layers;
}

std::vector<std::pair<PlaneGraph, VertexMap>>
induced_plane_subgraph(const PlaneGraph& g, const std::vector<int>& keep_in) {
    require(!keep_in.empty(), ErrorCode::EmptySelection, "empty vertex selection");
    std::vector<int> keep = sorted_unique(keep_in);
    for (int v : keep)
        require(v >= 0 && v < g.vertex_count(), ErrorCode::InvalidInput,
                "selection id out of range");
    std::vector<char> kept(g.vertex_count(), 0);
    for (int v : keep) kept[v] = 1;

    // Components of G[keep], ordered by smallest member.
    std::vector<int> comp_of(g.vertex_count(), -1);
    std::vector<std::vector<int>> comps;
    for (int s : keep) {
        if (comp_of[s] >= 0) continue;
        int id = static_cast<int>(comps.size());
        std::vector<int> members;
        std::queue<int> q;
        q.push(s);
        comp_of[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            members.push_back(u);
            for (int v : g.neighbors(u))
                if (kept[v] && comp_of[v] < 0) {
                    comp_of[v] = id;
                    q.push(v);
                }
        }
        comps.push_back(sorted_unique(std::move(members)));
    }

    std::vector<std::pair<PlaneGraph, VertexMap>> out;
    for (const auto& members : comps) {
        std::vector<int> new_id(g.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            new_id[members[i]] = i;

        std::vector<std::vector<int>> rot(members.size());
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            for (int nb : g.neighbors(members[i]))
                if (new_id[nb] >= 0 && comp_of[nb] == comp_of[members[i]])
                    rot[i].push_back(new_id[nb]);

        std::optional<Dart> outer;
        if (members.size() >= 2) {
            Dart od = *g.outer_dart();
            if (new_id[od.first] >= 0 && new_id[od.second] >= 0 &&
                comp_of[od.first] == comp_of[members[0]]) {
                outer = Dart{new_id[od.first], new_id[od.second]};
            } else {
                // Merge the faces of G across every edge not inside this
                // component; the classes are exactly the faces of the
                // component, and the class of G's outer face marks which
                // side is outside.
                FaceUnion fu(g.faces().count());
                for (int u = 0; u < g.vertex_count(); ++u)
                    for (int v : g.neighbors(u)) {
                        if (u > v) continue;
                        bool inside = new_id[u] >= 0 && new_id[v] >= 0 &&
                                      comp_of[u] == comp_of[members[0]] &&
                                      comp_of[v] == comp_of[members[0]];
                        if (!inside) fu.unite(g.face_left_of({u, v}),
                                              g.face_left_of({v, u}));
                    }
                int outer_class = fu.find(g.faces().outer);
                for (int u : members) {
                    std::vector<int> nbrs = g.neighbors(u);
                    std::sort(nbrs.begin(), nbrs.end());
                    for (int v : nbrs) {
                        if (new_id[v] < 0 || comp_of[v] != comp_of[u]) continue;
                        if (fu.find(g.face_left_of({u, v})) == outer_class) {
                            outer = Dart{new_id[u], new_id[v]};
                            break;
                        }
                    }
                    if (outer) break;
                }
                require(outer.has_value(), ErrorCode::InternalInvariantViolation,
                        "no dart of the component borders the outer region");
            }
        }

        VertexMap vm;
        vm.forward = new_id;
        vm.origin.resize(members.size());
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            vm.origin[i] = {members[i]};
        out.emplace_back(
            PlaneGraph::build(static_cast<int>(members.size()), std::move(rot), outer),
            std::move(vm));
    }
    return out;
}

std::pair<PlaneGraph, VertexMap>
contract_connected_set(const PlaneGraph& g, const std::vector<int>& x_in) {
    require(!x_in.empty(), ErrorCode::NotConnectedSet, "empty contraction set");
    std::vector<int> xs = sorted_unique(x_in);
    for (int v : xs)
        require(v >= 0 && v < g.vertex_count(), ErrorCode::InvalidInput,
                "contraction id out of range");
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : xs) in_x[v] = 1;

    // Connectivity of G[X].
    {
        std::queue<int> q;
        std::vector<char> seen(g.vertex_count(), 0);
        q.push(xs[0]);
        seen[xs[0]] = 1;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (in_x[v] && !seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    q.push(v);
                }
        }
        require(reached == static_cast<int>(xs.size()), ErrorCode::NotConnectedSet,
                "contraction set does not induce a connected subgraph");
    }

    int m = g.vertex_count() - static_cast<int>(xs.size());
    VertexMap vm;
    vm.forward.assign(g.vertex_count(), -1);
    {
        int next = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_x[v]) vm.forward[v] = next++;
        for (int v : xs) vm.forward[v] = m;
        vm.origin.resize(m + 1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_x[v]) vm.origin[vm.forward[v]] = {v};
        vm.origin[m] = xs;
    }

    if (m == 0) {
        // The whole graph collapses to a point.
        return {PlaneGraph::build(1, {{}}, std::nullopt), std::move(vm)};
    }

    // Walk around the boundary of X, collecting external darts in clockwise
    // order; this cyclic order becomes the rotation of the contracted vertex.
    std::vector<Dart> walk;
    {
        std::optional<Dart> start;
        for (int u : xs) {
            std::vector<int> nbrs = g.neighbors(u);
            std::sort(nbrs.begin(), nbrs.end());
            for (int v : nbrs)
                if (!in_x[v]) {
                    start = Dart{u, v};
                    break;
                }
            if (start) break;
        }
        require(start.has_value(), ErrorCode::InternalInvariantViolation,
                "connected graph with no edge leaving the contraction set");
        Dart cur = *start;
        long long cap = 8LL * g.edge_count() + 8;
        do {
            walk.push_back(cur);
            int a = cur.first, b = cur.second;
            while (true) {
                require(--cap > 0, ErrorCode::InternalInvariantViolation,
                        "boundary walk did not close");
                int idx = g.rotation_index(a, b);
                int nb = g.neighbors(a)[(idx + 1) % g.degree(a)];
                if (!in_x[nb]) {
                    cur = {a, nb};
                    break;
                }
                b = a;
                a = nb;
            }
        } while (cur != *start);

        std::size_t external = 0;
        for (int u : xs)
            for (int v : g.neighbors(u))
                if (!in_x[v]) ++external;
        require(walk.size() == external, ErrorCode::InternalInvariantViolation,
                "boundary walk missed external darts");
    }

    // One retained edge copy per outside neighbor; default is the first
    // occurrence along the boundary walk.
    std::map<int, Dart> kept;
    for (const Dart& d : walk) kept.try_emplace(d.second, d);

    // Pick the outer dart, overriding the retained copy when the old outer
    // walk only touches X through a single endpoint.
    std::optional<Dart> outer;
    {
        const auto& outer_walk = g.faces().walks[g.faces().outer];
        for (const Dart& d : outer_walk)
            if (!in_x[d.first] && !in_x[d.second]) {
                outer = Dart{vm.forward[d.first], vm.forward[d.second]};
                break;
            }
        if (!outer) {
            for (const Dart& d : outer_walk) {
                if (in_x[d.first] && !in_x[d.second]) {
                    kept[d.second] = d;
                    outer = Dart{m, vm.forward[d.second]};
                    break;
                }
                if (!in_x[d.first] && in_x[d.second]) {
                    kept[d.first] = Dart{d.second, d.first};
                    outer = Dart{vm.forward[d.first], m};
                    break;
                }
            }
        }
        if (!outer) {
            // The old outer walk lies entirely inside X; designate the face
            // at the first retained external dart.
            Dart d = kept.at(walk.front().second);
            outer = Dart{m, vm.forward[d.second]};
        }
    }

    std::vector<std::vector<int>> rot(m + 1);
    for (const Dart& d : walk)
        if (kept.at(d.second) == d) rot[m].push_back(vm.forward[d.second]);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (in_x[w]) continue;
        for (int nb : g.neighbors(w)) {
            if (!in_x[nb]) {
                rot[vm.forward[w]].push_back(vm.forward[nb]);
            } else if (kept.at(w) == Dart{nb, w}) {
                rot[vm.forward[w]].push_back(m);
            }
        }
    }

    return {PlaneGraph::build(m + 1, std::move(rot), outer), std::move(vm)};
}

namespace {

// First index on the walk whose dart tail equals v; -1 if absent.
int first_walk_position(const std::vector<Dart>& walk, int v) {
    for (int i = 0; i < static_cast<int>(walk.size()); ++i)
        if (walk[i].first == v) return i;
    return -1;
}

// Insert `added` into rot just after the unique occurrence of `after`.
void insert_after(std::vector<int>& rot, int after, const std::vector<int>& added) {
    auto it = std::find(rot.begin(), rot.end(), after);
    require(it != rot.end(), ErrorCode::InternalInvariantViolation,
            "corner anchor missing from rotation");
    rot.insert(it + 1, added.begin(), added.end());
}

}  // namespace

PlaneGraph add_apex_in_face(const PlaneGraph& g, int face,
                            const std::vector<int>& attach) {
    require(face >= 0 && face < g.faces().count(), ErrorCode::InvalidInput,
            "face id out of range");
    require(!attach.empty(), ErrorCode::InvalidInput, "empty attachment list");
    {
        std::vector<int> copy = sorted_unique(attach);
        require(copy.size() == attach.size(), ErrorCode::InvalidInput,
                "attachment vertices must be distinct");
    }
    const auto& walk = g.faces().walks[face];
    std::vector<int> pos(attach.size());
    for (std::size_t i = 0; i < attach.size(); ++i) {
        pos[i] = first_walk_position(walk, attach[i]);
        require(pos[i] >= 0, ErrorCode::VerticesNotOnFace,
                "vertex " + std::to_string(attach[i]) + " not on face walk");
    }
    // The list must follow the cyclic walk order.
    {
        std::size_t lo = std::min_element(pos.begin(), pos.end()) - pos.begin();
        for (std::size_t i = 1; i < pos.size(); ++i) {
            int prev = pos[(lo + i - 1) % pos.size()];
            int cur = pos[(lo + i) % pos.size()];
            require(prev < cur, ErrorCode::InvalidInput,
                    "attachment vertices not in walk order");
        }
    }

    int s = g.vertex_count();
    std::vector<std::vector<int>> rot = g.rotations();
    rot.emplace_back(attach.rbegin(), attach.rend());
    int len = static_cast<int>(walk.size());
    for (std::size_t i = 0; i < attach.size(); ++i) {
        int incoming_origin = walk[(pos[i] - 1 + len) % len].first;
        insert_after(rot[attach[i]], incoming_origin, {s});
    }
    return PlaneGraph::build(s + 1, std::move(rot), g.outer_dart());
}

PlaneGraph add_edge_in_face(const PlaneGraph& g, int face, int u, int v) {
    require(face >= 0 && face < g.faces().count(), ErrorCode::InvalidInput,
            "face id out of range");
    require(u != v, ErrorCode::InvalidInput, "edge endpoints must differ");
    require(!g.has_edge(u, v), ErrorCode::EdgeExists,
            "edge " + dart_str({u, v}) + " already present");
    const auto& walk = g.faces().walks[face];
    int pu = first_walk_position(walk, u);
    int pv = first_walk_position(walk, v);
    require(pu >= 0 && pv >= 0, ErrorCode::VerticesNotOnFace,
            "edge endpoints must lie on the face walk");

    int len = static_cast<int>(walk.size());
    std::vector<std::vector<int>> rot = g.rotations();
    insert_after(rot[u], walk[(pu - 1 + len) % len].first, {v});
    insert_after(rot[v], walk[(pv - 1 + len) % len].first, {u});
    return PlaneGraph::build(g.vertex_count(), std::move(rot), g.outer_dart());
}

std::pair<PlaneGraph, int> subdivide_edge(const PlaneGraph& g, int u, int v) {
    require(g.has_edge(u, v), ErrorCode::NoSuchEdge,
            "edge " + dart_str({u, v}) + " absent");
    int r = g.vertex_count();
    std::vector<std::vector<int>> rot = g.rotations();
    rot[u][g.rotation_index(u, v)] = r;
    rot[v][g.rotation_index(v, u)] = r;
    rot.push_back({u, v});
    std::optional<Dart> outer = g.outer_dart();
    if (outer == Dart{u, v}) outer = Dart{u, r};
    if (outer == Dart{v, u}) outer = Dart{v, r};
    return {PlaneGraph::build(r + 1, std::move(rot), outer), r};
}

std::vector<std::pair<PlaneGraph, VertexMap>>
split_plane_components(int n, const std::vector<std::vector<int>>& rotations,
                       std::optional<Dart> outer) {
    require(n >= 1, ErrorCode::InvalidInput, "vertex count must be positive");
    require(static_cast<int>(rotations.size()) == n, ErrorCode::InvalidInput,
            "rotation table size mismatch");
    for (int u = 0; u < n; ++u)
        for (int v : rotations[u])
            require(v >= 0 && v < n, ErrorCode::InvalidInput,
                    "neighbor id out of range");

    std::vector<int> comp_of(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (comp_of[s] >= 0) continue;
        int id = static_cast<int>(comps.size());
        std::vector<int> members;
        std::queue<int> q;
        q.push(s);
        comp_of[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            members.push_back(u);
            for (int v : rotations[u])
                if (comp_of[v] < 0) {
                    comp_of[v] = id;
                    q.push(v);
                }
        }
        comps.push_back(sorted_unique(std::move(members)));
    }

    std::vector<std::pair<PlaneGraph, VertexMap>> out;
    for (const auto& members : comps) {
        std::vector<int> new_id(n, -1);
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            new_id[members[i]] = i;
        std::vector<std::vector<int>> rot(members.size());
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            for (int nb : rotations[members[i]]) rot[i].push_back(new_id[nb]);

        std::optional<Dart> comp_outer;
        if (outer && comp_of[outer->first] == comp_of[members[0]] &&
            new_id[outer->second] >= 0) {
            comp_outer = Dart{new_id[outer->first], new_id[outer->second]};
        } else {
            for (int u : members) {
                if (rotations[u].empty()) continue;
                int best = *std::min_element(rotations[u].begin(), rotations[u].end());
                comp_outer = Dart{new_id[u], new_id[best]};
                break;
            }
        }

        VertexMap vm;
        vm.forward = new_id;
        vm.origin.resize(members.size());
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            vm.origin[i] = {members[i]};
        out.emplace_back(
            PlaneGraph::build(static_cast<int>(members.size()), std::move(rot),
                              comp_outer),
            std::move(vm));
    }
    return out;
}

}  // namespace clustercolor
