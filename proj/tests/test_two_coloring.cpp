#include <doctest.h>

#include <algorithm>

#include "clustercolor/bounds.hpp"
#include "clustercolor/two_coloring.hpp"
#include "clustercolor/verify.hpp"
#include "support/instances.hpp"

using namespace clustercolor;

namespace {

// Path 0..4 under a two-level arc structure: one wide arc (6) anchored at
// the endpoints, and two arcs (7, 8) tiling its pocket with junction 2.
// Ids: path 0..4, root 5, arcs 6 (top), 7 over [0,2], 8 over [2,4].
PathInstance junction_instance() {
    std::vector<std::vector<int>> rot = {
        {5, 6, 7, 1},  // x
        {0, 7, 2},     // covered by arc 7
        {1, 7, 8, 3},  // junction of arcs 7 and 8
        {2, 8, 4},     // covered by arc 8
        {3, 8, 6, 5},  // y
        {4, 0},        // root
        {4, 0},        // top arc
        {2, 1, 0},     // left arc
        {4, 3, 2},     // right arc
    };
    PlaneGraph g = PlaneGraph::build(9, std::move(rot), Dart{1, 0});
    return PathInstance::make(std::move(g), {0, 1, 2, 3, 4}, 5);
}

// P = (x, w, y) with a single stable vertex s ~ {x, w, y} plus root r.
// Ids: x=0, w=1, y=2, r=3, s=4.
PathInstance one_arc_instance() {
    std::vector<std::vector<int>> rot = {
        {3, 4, 1},  // x
        {0, 4, 2},  // w (covered by s)
        {1, 4, 3},  // y
        {2, 0},     // r
        {2, 1, 0},  // s
    };
    PlaneGraph g = PlaneGraph::build(5, std::move(rot), Dart{1, 0});
    return PathInstance::make(std::move(g), {0, 1, 2}, 3);
}

}  // namespace

TEST_CASE("alternate coloring rules") {
    CHECK(alternate_coloring(0, 1, 1) == std::vector<int>{1, 1});
    CHECK(alternate_coloring(1, 1, 1) == std::vector<int>{1, 2, 1});
    CHECK(alternate_coloring(1, 1, 2) == std::vector<int>{1, 1, 2});
    CHECK(alternate_coloring(1, 2, 2) == std::vector<int>{2, 1, 2});
    CHECK(alternate_coloring(3, 2, 2) == std::vector<int>{2, 1, 2, 1, 2});
    CHECK(alternate_coloring(2, 1, 1) == std::vector<int>{1, 2, 2, 1});
    CHECK(alternate_coloring(4, 2, 1) == std::vector<int>{2, 1, 2, 1, 2, 1});
    CHECK_THROWS_AS(alternate_coloring(1, 0, 1), GraphError);
    CHECK_THROWS_AS(alternate_coloring(1, 3, 1), GraphError);
}

TEST_CASE("face tree of the junction instance") {
    PathInstance inst = junction_instance();
    CHECK(inst.path_degree == 4);
    FaceTree tree = build_face_tree(inst);
    REQUIRE(tree.nodes.size() == 6);  // root, middle face, four leaf triangles
    const auto& root = tree.nodes[tree.root];
    CHECK(root.s == 5);
    CHECK(root.a == 0);
    CHECK(root.b == 4);
    CHECK(root.stable_set == std::vector<int>{6});
    CHECK(root.corners.empty());
    CHECK(root.pivots.empty());
    REQUIRE(root.children.size() == 1);

    const auto& middle = tree.nodes[root.children[0]];
    CHECK(middle.s == 6);
    CHECK(middle.a == 0);
    CHECK(middle.b == 4);
    CHECK(middle.depth == 1);
    CHECK(middle.stable_set == std::vector<int>{7, 8});
    CHECK(middle.corners == std::vector<int>{2});  // the junction
    CHECK(middle.pivots == std::vector<int>{1, 3});
    CHECK(middle.psi.at(1) == 7);
    CHECK(middle.psi.at(3) == 8);
    CHECK(middle.isolated_pivots == std::vector<int>{1, 3});
    REQUIRE(middle.children.size() == 4);
    for (int child : middle.children) {
        CHECK(tree.nodes[child].depth == 2);
        CHECK(tree.nodes[child].children.empty());
        CHECK(tree.nodes[child].corners.empty());
        CHECK(tree.nodes[child].pivots.empty());
    }
}

TEST_CASE("face tree of the one-arc instance: w is an isolated pivot") {
    PathInstance inst = one_arc_instance();
    CHECK(inst.path_degree == 3);
    FaceTree tree = build_face_tree(inst);
    REQUIRE(tree.nodes.size() == 3);
    const auto& root = tree.nodes[tree.root];
    CHECK(root.s == 3);
    CHECK(root.stable_set == std::vector<int>{4});
    CHECK(root.corners.empty());
    CHECK(root.pivots == std::vector<int>{1});
    CHECK(root.psi.at(1) == 4);
    CHECK(root.isolated_pivots == std::vector<int>{1});
    // Children are the two triangles under s.
    REQUIRE(root.children.size() == 2);
    CHECK(tree.nodes[root.children[0]].s == 4);
    CHECK(tree.nodes[root.children[1]].s == 4);
}

TEST_CASE("instance validation rejects broken hypotheses") {
    // Degree-1 stable vertex.
    {
        std::vector<std::vector<int>> rot = {
            {3, 1}, {0, 4, 2}, {1, 3}, {2, 0}, {1}};
        PlaneGraph g = PlaneGraph::build(5, std::move(rot), Dart{1, 0});
        CHECK_THROWS_AS(PathInstance::make(std::move(g), {0, 1, 2}, 3), GraphError);
    }
    // Degree-2 stable vertex whose neighbors are consecutive on the path.
    {
        std::vector<std::vector<int>> rot = {
            {3, 4, 1}, {0, 4, 5, 2}, {1, 5, 3}, {2, 0}, {1, 0}, {2, 1}};
        PlaneGraph g = PlaneGraph::build(6, std::move(rot), Dart{1, 0});
        try {
            PathInstance::make(std::move(g), {0, 1, 2}, 3);
            CHECK(false);
        } catch (const GraphError& e) {
            CHECK(e.code() == ErrorCode::HypothesisViolation);
        }
    }
    // Missing common stable neighbor: bare square with the root only.
    {
        std::vector<std::vector<int>> rot = {
            {3, 1}, {0, 2}, {1, 3}, {2, 0}};
        PlaneGraph g = PlaneGraph::build(4, std::move(rot), Dart{1, 0});
        CHECK_THROWS_AS(PathInstance::make(std::move(g), {0, 1, 2}, 3), GraphError);
    }
}

TEST_CASE("coloring the hand instances") {
    {
        PathInstance inst = junction_instance();
        Coloring colors = color_path_instance(inst);
        // Endpoints, stable set, and the two isolated pivots get 2; the lone
        // corner between two 2-colored anchors gets 1.
        CHECK(colors == Coloring{2, 2, 1, 2, 2, 2, 2, 2, 2});
        auto report = check_two_coloring_postconditions(inst, colors);
        CHECK(report.pass());
        // d = 4, Delta = 4: 2-component cap is 12^8.
        CHECK(bounds::power(BigCount(3 * inst.max_degree), 3 * inst.path_degree - 4) ==
              429981696);
    }
    {
        PathInstance inst = one_arc_instance();
        Coloring colors = color_path_instance(inst);
        for (int v = 0; v < 5; ++v) CHECK(colors[v] == 2);  // isolated pivot gets 2
        CHECK(check_two_coloring_postconditions(inst, colors).pass());
    }
}

TEST_CASE("generated path instances color within their caps") {
    int count_2 = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        PathInstance inst = testsupport::random_path_instance(seed, 30);
        Coloring colors = color_path_instance(inst);
        auto report = check_two_coloring_postconditions(inst, colors);
        CHECK(report.pass());
        count_2 += std::count(colors.begin(), colors.end(), 2);
        CHECK(std::count(colors.begin(), colors.end(), 2) >=
              static_cast<long>(inst.stable.size()) + 2);
    }
    CHECK(count_2 > 0);
}

TEST_CASE("face tree depth spread around each internal vertex stays small") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        PathInstance inst = testsupport::random_path_instance(seed, 20);
        FaceTree tree = build_face_tree(inst);
        int d = inst.path_degree;
        // For each internal path vertex, the depths of its incident bounded
        // faces stay within d-2 of its own face's depth.
        std::vector<int> home(inst.graph.vertex_count(), -1);
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            for (int v : tree.nodes[i].corners) home[v] = static_cast<int>(i);
            for (int v : tree.nodes[i].pivots) home[v] = static_cast<int>(i);
        }
        for (std::size_t p = 1; p + 1 < inst.path.size(); ++p) {
            int w = inst.path[p];
            REQUIRE(home[w] >= 0);
            int base = tree.nodes[home[w]].depth;
            for (int f : inst.graph.bounded_faces_at(w)) {
                int node = tree.node_of_face[f];
                REQUIRE(node >= 0);
                CHECK(tree.nodes[node].depth - base <= d - 2);
                CHECK(tree.nodes[node].depth >= base);
            }
        }
    }
}

TEST_CASE("cycle instance validation") {
    // Wheel: C4 plus hub.
    std::vector<std::vector<int>> rot = {
        {3, 4, 1}, {0, 4, 2}, {1, 4, 3}, {2, 4, 0}, {3, 2, 1, 0}};
    PlaneGraph g = PlaneGraph::build(5, std::move(rot), Dart{1, 0});
    CycleInstance inst = CycleInstance::make(std::move(g));
    CHECK(inst.cycle.size() == 4);
    CHECK(inst.stable == std::vector<int>{4});
    CHECK(inst.cycle_degree == 3);
    CHECK(inst.max_degree == 4);
}

TEST_CASE("wheel normalization needs no surgery besides the split") {
    std::vector<std::vector<int>> rot = {
        {3, 4, 1}, {0, 4, 2}, {1, 4, 3}, {2, 4, 0}, {3, 2, 1, 0}};
    PlaneGraph g = PlaneGraph::build(5, std::move(rot), Dart{1, 0});
    CycleInstance inst = CycleInstance::make(std::move(g));
    auto [path_inst, plan] = normalize_cycle_instance(inst);
    CHECK(plan.removed.empty());
    CHECK(plan.apex_attach.empty());
    CHECK(plan.added_edges.empty());
    CHECK(plan.split_r == 5);
    CHECK(path_inst.path.size() == 4);

    PathInstance replayed = replay_normalization(inst, plan);
    CHECK(replayed.graph.rotations() == path_inst.graph.rotations());
    CHECK(replayed.graph.outer_dart() == path_inst.graph.outer_dart());
    CHECK(replayed.path == path_inst.path);

    PlaneGraph restored = reverse_normalization(path_inst, plan);
    CHECK(restored.rotations() == inst.graph.rotations());
    CHECK(restored.outer_dart() == inst.graph.outer_dart());
}

TEST_CASE("bare five-cycle normalization plants two apexes") {
    std::vector<std::vector<int>> rot = {
        {4, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}};
    PlaneGraph g = PlaneGraph::build(5, std::move(rot), Dart{1, 0});
    CycleInstance inst = CycleInstance::make(std::move(g));
    auto [path_inst, plan] = normalize_cycle_instance(inst);
    CHECK(plan.removed.empty());
    CHECK(plan.apex_attach.size() == 2);  // greedy stable set on a 5-cycle
    CHECK_FALSE(plan.added_edges.empty());

    PathInstance replayed = replay_normalization(inst, plan);
    CHECK(replayed.graph.rotations() == path_inst.graph.rotations());
    PlaneGraph restored = reverse_normalization(path_inst, plan);
    CHECK(restored.rotations() == inst.graph.rotations());

    Coloring colors = color_cycle_instance(inst);
    CHECK(check_two_coloring_postconditions(inst, colors).pass());
    // 1-components capped by 2d+5 = 9, trivially at this size but asserted.
    CHECK(bounds::f2(1, 1) == 7776);
}

TEST_CASE("pruned stable vertices come back colored 2") {
    // C4 plus a pendant stable vertex on the cycle.
    std::vector<std::vector<int>> rot = {
        {3, 4, 1}, {0, 2}, {1, 3}, {2, 0}, {0}};
    PlaneGraph g = PlaneGraph::build(5, std::move(rot), Dart{1, 0});
    CycleInstance inst = CycleInstance::make(std::move(g));
    auto [path_inst, plan] = normalize_cycle_instance(inst);
    CHECK(plan.removed == std::vector<int>{4});
    PlaneGraph restored = reverse_normalization(path_inst, plan);
    CHECK(restored.rotations() == inst.graph.rotations());

    Coloring colors = color_cycle_instance(inst);
    CHECK(colors[4] == 2);
    CHECK(check_two_coloring_postconditions(inst, colors).pass());
}

TEST_CASE("generated cycle instances color within caps and replay exactly") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        CycleInstance inst = testsupport::random_cycle_instance(seed, 24);
        auto [path_inst, plan] = normalize_cycle_instance(inst);

        PathInstance replayed = replay_normalization(inst, plan);
        CHECK(replayed.graph.rotations() == path_inst.graph.rotations());
        CHECK(replayed.graph.outer_dart() == path_inst.graph.outer_dart());
        CHECK(replayed.path == path_inst.path);

        PlaneGraph restored = reverse_normalization(path_inst, plan);
        CHECK(restored.rotations() == inst.graph.rotations());
        CHECK(restored.outer_dart() == inst.graph.outer_dart());

        Coloring colors = color_cycle_instance(inst);
        CHECK(check_two_coloring_postconditions(inst, colors).pass());
    }
}
