#include <doctest.h>

#include <algorithm>

#include "clustercolor/generators.hpp"
#include "clustercolor/three_coloring.hpp"
#include "clustercolor/triangulate.hpp"
#include "clustercolor/verify.hpp"

using namespace clustercolor;

namespace {

PlaneGraph triangle() {
    return PlaneGraph::build(3, {{2, 1}, {0, 2}, {1, 0}}, Dart{1, 0});
}

PlaneGraph k4() {
    return PlaneGraph::build(4, {{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}},
                             Dart{1, 0});
}

// Two triangles glued along an edge: vertices 0,1 shared, 2 and 3 apart.
PlaneGraph glued_triangles() {
    return PlaneGraph::build(4, {{2, 1, 3}, {3, 0, 2}, {1, 0}, {0, 1}}, Dart{0, 2});
}

// Wheel: 5-cycle rim plus hub.
PlaneGraph w5() {
    std::vector<std::vector<int>> rot = {
        {4, 5, 1}, {0, 5, 2}, {1, 5, 3}, {2, 5, 4}, {3, 5, 0}, {4, 3, 2, 1, 0}};
    return PlaneGraph::build(6, std::move(rot), Dart{1, 0});
}

}  // namespace

TEST_CASE("case classification follows the fixed order") {
    CHECK(classify_case(PlaneGraph::build(1, {{}}, std::nullopt)).kind ==
          CaseKind::Base);

    PlaneGraph edge = PlaneGraph::build(2, {{1}, {0}}, Dart{0, 1});
    auto tag = classify_case(edge);
    CHECK(tag.kind == CaseKind::DegreeOne);
    CHECK(tag.degree_one_vertex == 0);

    CHECK(classify_case(triangle()).kind == CaseKind::ChordlessCycle);
    CHECK(classify_case(k4()).kind == CaseKind::ChordlessCycle);
    CHECK(classify_case(glued_triangles()).kind == CaseKind::TriangulatedSkeleton);
    CHECK(classify_case(w5()).kind == CaseKind::ChordlessCycle);

    PlaneGraph square = PlaneGraph::build(4, {{3, 1}, {0, 2}, {1, 3}, {2, 0}},
                                          Dart{1, 0});
    CHECK_THROWS_AS(classify_case(square), GraphError);
}

TEST_CASE("frame discipline: triple shift is the identity") {
    Coloring c = {1, 2, 3, 1, 2};
    ColorFrame pi = ColorFrame::shift();
    CHECK(pi.apply(pi.apply(pi.apply(c))) == c);
    CHECK(pi.apply(c) == Coloring{2, 3, 1, 2, 3});
}

TEST_CASE("base and leaf cases") {
    PlaneGraph single = PlaneGraph::build(1, {{}}, std::nullopt);
    CHECK(color_near_triangulated(single, 1) == Coloring{1});

    PlaneGraph edge = PlaneGraph::build(2, {{1}, {0}}, Dart{0, 1});
    Coloring c = color_near_triangulated(edge, 1);
    CHECK(c[0] != c[1]);
    CHECK(c[0] >= 1);
    CHECK(c[1] <= 2);
}

TEST_CASE("triangle: two colors, components of size at most 2") {
    Coloring c = color_near_triangulated(triangle(), 3);
    auto census = monochromatic_components(triangle(), c);
    CHECK(census.overall_max() <= 2);
    for (int v = 0; v < 3; ++v) CHECK(c[v] <= 2);
}

TEST_CASE("K4: apex colored 2, rim from {1,2}") {
    ColorOptions opts;
    opts.verify_levels = true;
    Coloring c = color_near_triangulated(k4(), 3, opts);
    CHECK(c[3] == 2);
    for (int v = 0; v < 3; ++v) CHECK((c[v] == 1 || c[v] == 2));
    CHECK(check_layer_properties(k4(), c, 3).pass());
}

TEST_CASE("wheel: hub colored 2 through the cycle reduction") {
    ColorOptions opts;
    opts.verify_levels = true;
    Coloring c = color_case2(w5(), 5, opts);
    CHECK(c[5] == 2);
    LayerCheckOptions t;
    t.case2 = true;
    CHECK(check_layer_properties(w5(), c, 5, t).pass());
}

TEST_CASE("glued triangles through the triangulated-skeleton case") {
    PlaneGraph g = glued_triangles();
    ColorOptions opts;
    opts.verify_levels = true;
    Coloring c = color_case3(g, 2, 0, 1, 2, 3, opts);
    CHECK(c[2] == 1);
    CHECK(c[0] == 2);
    // Parity coloring: neighbors of u (other than v) avoid phi_u.
    for (int nb : g.neighbors(2))
        if (nb != 0) CHECK(c[nb] != 1);
}

TEST_CASE("prescribing equal endpoint colors keeps the pair isolated") {
    PlaneGraph g = glued_triangles();
    Coloring c = color_case3(g, 2, 0, 1, 1, 3);
    CHECK(c[2] == 1);
    CHECK(c[0] == 1);
    // The 1-component containing v is exactly {u, v}.
    auto census = monochromatic_components(g, c);
    for (const auto& comp : census.per_color[1].max_components)
        CHECK(comp.size() <= 2);
}

TEST_CASE("outer tree on a filled square with a hanging triangle") {
    // Square 0,1,2,3 around hub 5, plus a triangle 2,3,4 glued on the outer
    // edge {2,3}.  The skeleton has a quadrilateral face (good, the root)
    // and a triangular face with a two-vertex attachment (bad).
    PlaneGraph g = PlaneGraph::build(
        6,
        {{3, 5, 1}, {0, 5, 2}, {3, 4, 1, 5}, {4, 2, 5, 0}, {2, 3},
         {3, 2, 1, 0}},
        Dart{1, 0});
    REQUIRE(g.near_triangulated());
    SUBCASE("tree shape") {
        std::vector<int> outer_set = boundary_layers(g).first;
        auto parts = induced_plane_subgraph(g, outer_set);
        OuterTree tree = build_outer_tree(g, parts[0].first, parts[0].second);
        REQUIRE(tree.nodes.size() == 2);
        const auto& root = tree.nodes[tree.root];
        CHECK(root.good);
        CHECK(root.attachment.empty());
        REQUIRE(root.children.size() == 1);
        const auto& child = tree.nodes[root.children[0]];
        CHECK(child.attachment == std::vector<int>{2, 3});
        bool triangle_is_child =
            parts[0].first.faces().walks[child.face].size() == 3;
        CHECK(triangle_is_child == !child.good);
    }
    SUBCASE("composite coloring") {
        ColorOptions opts;
        opts.verify_levels = true;
        CHECK(classify_case(g).kind == CaseKind::Composite);
        Coloring c = color_case4(g, g.max_degree(), opts);
        CHECK(check_layer_properties(g, c, g.max_degree()).pass());
    }
}

TEST_CASE("outer tree with a cut-vertex attachment") {
    // Two triangles sharing exactly one vertex (bowtie).
    PlaneGraph g = PlaneGraph::build(
        5, {{2, 1, 4, 3}, {0, 2}, {1, 0}, {4, 0}, {0, 3}}, Dart{1, 0});
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    auto parts = induced_plane_subgraph(g, all);
    OuterTree tree = build_outer_tree(g, parts[0].first, parts[0].second);
    REQUIRE(tree.nodes.size() == 2);
    const auto& child = tree.nodes[tree.nodes[tree.root].children[0]];
    CHECK(child.attachment == std::vector<int>{0});
    CHECK(child.good);  // triangular but single-vertex attachment
}

TEST_CASE("deepest good face on a good-bad-bad chain is the root") {
    // Filled square (hub 6), triangle 2,3,4 on edge {2,3}, then triangle
    // 3,4,5 on edge {3,4}: the skeleton chain is quad - bad - bad.
    PlaneGraph g = PlaneGraph::build(
        7,
        {{3, 6, 1}, {0, 6, 2}, {3, 4, 1, 6}, {5, 4, 2, 6, 0}, {5, 2, 3},
         {4, 3}, {3, 2, 1, 0}},
        Dart{1, 0});
    REQUIRE(g.near_triangulated());
    std::vector<int> outer_set = boundary_layers(g).first;
    auto parts = induced_plane_subgraph(g, outer_set);
    OuterTree tree = build_outer_tree(g, parts[0].first, parts[0].second);
    REQUIRE(tree.nodes.size() == 3);
    int good_count = 0;
    for (const auto& node : tree.nodes)
        if (node.good) ++good_count;
    CHECK(good_count == 1);  // only the quadrilateral
    CHECK(tree.nodes[tree.root].good);

    ColorOptions opts;
    opts.verify_levels = true;
    CHECK(classify_case(g).kind == CaseKind::Composite);
    Coloring c = color_case4(g, g.max_degree(), opts);
    CHECK(check_layer_properties(g, c, g.max_degree()).pass());
}

TEST_CASE("whole-graph entry point") {
    SUBCASE("five-cycle avoids color 3 at the cost of one pair") {
        std::vector<std::vector<int>> rot = {
            {4, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}};
        PlaneGraph c5 = PlaneGraph::build(5, std::move(rot), Dart{1, 0});
        Coloring c = color_planar(c5);
        auto census = monochromatic_components(c5, c);
        CHECK(census.overall_max() == 2);
        for (int v = 0; v < 5; ++v) CHECK(c[v] != 3);
        CHECK(check_planar_properties(c5, c, 2).pass());
    }
    SUBCASE("even cycles and paths get proper 2-colorings") {
        PlaneGraph c6 = PlaneGraph::build(
            6, {{5, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}}, Dart{1, 0});
        Coloring c = color_planar(c6);
        CHECK(monochromatic_components(c6, c).overall_max() == 1);
        PlaneGraph p4 = PlaneGraph::build(4, {{1}, {0, 2}, {1, 3}, {2}}, Dart{0, 1});
        Coloring cp = color_planar(p4);
        CHECK(monochromatic_components(p4, cp).overall_max() == 1);
    }
    SUBCASE("degree-2 graphs take the proper-coloring shortcut") {
        PlaneGraph square = PlaneGraph::build(4, {{3, 1}, {0, 2}, {1, 3}, {2, 0}},
                                              Dart{1, 0});
        Coloring c = color_planar(square);
        auto census = monochromatic_components(square, c);
        CHECK(census.overall_max() == 1);
    }
    SUBCASE("a chorded pentagon goes through the ring gadget") {
        PlaneGraph g = PlaneGraph::build(
            5, {{4, 2, 1}, {0, 2}, {1, 0, 3}, {2, 4}, {0, 3}}, Dart{1, 0});
        REQUIRE(g.max_degree() == 3);
        REQUIRE_FALSE(g.near_triangulated());
        Coloring c = color_planar(g);
        CHECK(check_planar_properties(g, c, 3).pass());
    }
    SUBCASE("triangular grid") {
        PlaneGraph g = generators::triangular_grid(6);
        Coloring c = color_planar(g);
        CHECK(check_planar_properties(g, c, 6).pass());
        auto [outer, second] = boundary_layers(g);
        for (int v : outer) CHECK(c[v] != 3);
    }
    SUBCASE("random near-triangulations with per-level verification") {
        ColorOptions opts;
        opts.verify_levels = true;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            PlaneGraph g = generators::random_near_triangulation(40, seed);
            Coloring c = color_planar(g, opts);
            CHECK(check_planar_properties(g, c, g.max_degree()).pass());
        }
    }
    SUBCASE("random plane graphs") {
        ColorOptions opts;
        opts.verify_levels = true;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            PlaneGraph g = generators::random_plane_graph(35, seed, 0.3);
            Coloring c = color_planar(g, opts);
            CHECK(check_planar_properties(g, c, std::max(1, g.max_degree())).pass());
        }
    }
}

TEST_CASE("near-triangulated coloring keeps interior layers consistent") {
    ColorOptions opts;
    opts.verify_levels = true;
    for (std::uint64_t seed = 20; seed <= 32; ++seed) {
        PlaneGraph g = generators::random_near_triangulation(60, seed);
        int cap = g.max_degree();
        Coloring c = color_near_triangulated(g, cap, opts);
        auto report = check_layer_properties(g, c, cap);
        CHECK(report.pass());
    }
}
