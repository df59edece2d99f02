#include "clustercolor/verify.hpp"

#include <algorithm>
#include <queue>

#include "clustercolor/two_coloring.hpp"

namespace clustercolor {

namespace {

void require_total(const Coloring& coloring, int n, int max_color = 3) {
    require(static_cast<int>(coloring.size()) == n, ErrorCode::PartialColoring,
            "coloring length does not match vertex count");
    for (int v = 0; v < n; ++v)
        require(coloring[v] >= 1 && coloring[v] <= max_color,
                ErrorCode::PartialColoring,
                "vertex " + std::to_string(v) + " is uncolored or out of range");
}

// All monochromatic components, each a sorted vertex list, ordered by
// smallest member.  BFS from ascending seeds keeps the census deterministic.
std::vector<std::vector<int>> components_of_color(
    const std::vector<std::vector<int>>& adjacency, const Coloring& coloring,
    int color) {
    int n = static_cast<int>(adjacency.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (coloring[s] != color || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : adjacency[u])
                if (coloring[v] == color && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

PropertyCheck size_cap_check(const std::string& name, bool asserted,
                             const BigCount& cap,
                             const std::vector<std::vector<int>>& offenders_pool) {
    PropertyCheck check;
    check.name = name;
    check.asserted = asserted;
    check.bound = cap.str();
    for (const auto& comp : offenders_pool) {
        if (BigCount(comp.size()) > cap) {
            check.pass = false;
            check.witness_component = comp;
            check.detail = "component of size " + std::to_string(comp.size()) +
                           " exceeds cap";
            break;
        }
    }
    return check;
}

}  // namespace

int ComponentReport::overall_max() const {
    int m = 0;
    for (const auto& [color, census] : per_color) m = std::max(m, census.max_size);
    return m;
}

const PropertyCheck* PropertyReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ComponentReport component_census(const std::vector<std::vector<int>>& adjacency,
                                 const Coloring& coloring) {
    int max_color = 3;
    for (int c : coloring) max_color = std::max(max_color, c);
    require_total(coloring, static_cast<int>(adjacency.size()), max_color);
    ComponentReport report;
    for (int color = 1; color <= max_color; ++color) {
        ColorCensus census;
        auto comps = components_of_color(adjacency, coloring, color);
        census.component_count = static_cast<int>(comps.size());
        for (const auto& comp : comps) {
            int size = static_cast<int>(comp.size());
            ++census.size_histogram[size];
            census.max_size = std::max(census.max_size, size);
        }
        for (const auto& comp : comps)
            if (static_cast<int>(comp.size()) == census.max_size && census.max_size > 0)
                census.max_components.push_back(comp);
        report.per_color[color] = std::move(census);
    }
    return report;
}

ComponentReport monochromatic_components(const PlaneGraph& g, const Coloring& coloring) {
    return component_census(g.rotations(), coloring);
}

PropertyReport check_layer_properties(const PlaneGraph& g, const Coloring& coloring,
                                        int degree_parameter,
                                        const LayerCheckOptions& opts) {
    require_total(coloring, g.vertex_count());
    require(degree_parameter >= g.max_degree(), ErrorCode::InvalidInput,
            "degree parameter below the actual maximum degree");
    std::uint64_t d = static_cast<std::uint64_t>(degree_parameter);

    auto [outer, second] = boundary_layers(g);
    std::vector<char> on_outer(g.vertex_count(), 0), on_second(g.vertex_count(), 0);
    for (int v : outer) on_outer[v] = 1;
    for (int v : second) on_second[v] = 1;

    auto comps1 = components_of_color(g.rotations(), coloring, 1);
    auto comps2 = components_of_color(g.rotations(), coloring, 2);
    auto comps3 = components_of_color(g.rotations(), coloring, 3);

    auto meets = [](const std::vector<int>& comp, const std::vector<char>& mask) {
        for (int v : comp)
            if (mask[v]) return true;
        return false;
    };

    PropertyReport report;

    {
        PropertyCheck c;
        c.name = "(i) no color 3 on outer layer";
        for (int v : outer)
            if (coloring[v] == 3) {
                c.pass = false;
                c.witness_vertex = v;
                break;
            }
        report.checks.push_back(std::move(c));
    }
    {
        PropertyCheck c;
        c.name = "(ii) no color 1 on second layer";
        for (int v : second)
            if (coloring[v] == 1) {
                c.pass = false;
                c.witness_vertex = v;
                break;
            }
        report.checks.push_back(std::move(c));
    }

    auto [f1_bar, f2_bar] = bounds::barred_bounds(d);
    auto [f1_bar_rec, f2_bar_rec] = bounds::recursive_barred_bounds(d);

    {
        std::vector<std::vector<int>> pool;
        for (const auto& comp : comps1)
            if (meets(comp, on_outer)) pool.push_back(comp);
        report.checks.push_back(
            size_cap_check("(iii) 1-components meeting outer layer", true, f1_bar, pool));
    }
    {
        std::vector<std::vector<int>> pool;
        for (const auto& comp : comps2)
            if (meets(comp, on_outer) || meets(comp, on_second)) pool.push_back(comp);
        report.checks.push_back(size_cap_check(
            "(iv) 2-components meeting first two layers", true, f2_bar_rec, pool));
        report.checks.push_back(size_cap_check(
            "(iv, printed constants) 2-components meeting first two layers", false,
            f2_bar, pool));
    }
    {
        std::vector<std::vector<int>> pool = comps1;
        pool.insert(pool.end(), comps2.begin(), comps2.end());
        pool.insert(pool.end(), comps3.begin(), comps3.end());
        BigCount cap = 6 * BigCount(d) * d * f2_bar_rec;
        BigCount cap_printed = 6 * BigCount(d) * d * f2_bar;
        report.checks.push_back(
            size_cap_check("(v) all monochromatic components", true, cap, pool));
        report.checks.push_back(size_cap_check(
            "(v, printed constants) all monochromatic components", false, cap_printed,
            pool));
    }

    if (opts.case2) {
        {
            std::vector<std::vector<int>> pool;
            for (const auto& comp : comps1)
                if (meets(comp, on_outer)) pool.push_back(comp);
            report.checks.push_back(size_cap_check(
                "(a) 1-components meeting outer layer", true, bounds::f1(d), pool));
        }
        {
            std::vector<std::vector<int>> pool;
            for (const auto& comp : comps2)
                if (meets(comp, on_outer) || meets(comp, on_second))
                    pool.push_back(comp);
            BigCount stable_deg = BigCount(d) * f1_bar_rec;
            BigCount cap = f1_bar_rec * BigCount(d) *
                           bounds::power(6 * stable_deg, 3 * d + 2);
            report.checks.push_back(size_cap_check(
                "(b) 2-components meeting first two layers", true, cap, pool));
        }
        {
            std::vector<std::vector<int>> pool;
            for (const auto& comp : comps3)
                if (meets(comp, on_second)) pool.push_back(comp);
            report.checks.push_back(size_cap_check(
                "(c) 3-components meeting second layer", true, f2_bar_rec, pool));
        }
    }

    if (opts.case3) {
        {
            PropertyCheck c;
            c.name = "(1) components meeting outer layer stay inside it";
            c.bound = BigCount(2 * d).str();
            std::vector<std::vector<int>> pool = comps1;
            pool.insert(pool.end(), comps2.begin(), comps2.end());
            pool.insert(pool.end(), comps3.begin(), comps3.end());
            for (const auto& comp : pool) {
                if (!meets(comp, on_outer)) continue;
                bool inside = std::all_of(comp.begin(), comp.end(),
                                          [&](int v) { return on_outer[v]; });
                if (!inside || comp.size() > 2 * d) {
                    c.pass = false;
                    c.witness_component = comp;
                    c.detail = inside ? "component exceeds 2D"
                                      : "component leaves the outer layer";
                    break;
                }
            }
            report.checks.push_back(std::move(c));
        }
        {
            PropertyCheck c;
            c.name = "(2) second layer entirely color 3";
            for (int v : second)
                if (coloring[v] != 3) {
                    c.pass = false;
                    c.witness_vertex = v;
                    break;
                }
            report.checks.push_back(std::move(c));
        }
        if (opts.case3_u >= 0) {
            PropertyCheck c;
            c.name = "(3) prescribed edge colors and exclusion around u";
            int u = opts.case3_u, v = opts.case3_v;
            if (coloring[u] != opts.case3_phi_u || coloring[v] != opts.case3_phi_v) {
                c.pass = false;
                c.witness_vertex = coloring[u] != opts.case3_phi_u ? u : v;
                c.detail = "prescribed color not respected";
            } else {
                for (int nb : g.neighbors(u)) {
                    if (nb == v) continue;
                    if (coloring[nb] == opts.case3_phi_u) {
                        c.pass = false;
                        c.witness_vertex = nb;
                        c.detail = "neighbor of u shares u's color";
                        break;
                    }
                }
            }
            report.checks.push_back(std::move(c));
        }
    }

    return report;
}

PropertyReport check_two_coloring_postconditions(const PathInstance& inst,
                                                 const Coloring& coloring) {
    const PlaneGraph& g = inst.graph;
    require_total(coloring, g.vertex_count());
    std::uint64_t d = static_cast<std::uint64_t>(inst.path_degree);
    std::uint64_t delta = static_cast<std::uint64_t>(inst.max_degree);

    PropertyReport report;
    {
        PropertyCheck c;
        c.name = "stable set and path endpoints colored 2";
        std::vector<int> must_be_2 = inst.stable;
        must_be_2.push_back(inst.path.front());
        must_be_2.push_back(inst.path.back());
        for (int v : must_be_2)
            if (coloring[v] != 2) {
                c.pass = false;
                c.witness_vertex = v;
                break;
            }
        report.checks.push_back(std::move(c));
    }
    {
        PropertyCheck c;
        c.name = "1-paths of length at most 2d+1";
        c.bound = BigCount(2 * d + 1).str();
        std::size_t run = 0;
        for (int v : inst.path) {
            run = coloring[v] == 1 ? run + 1 : 0;
            if (run > 2 * d + 1) {
                c.pass = false;
                c.witness_vertex = v;
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        auto comps = component_census(g.rotations(), coloring);
        report.checks.push_back(size_cap_check("1-components capped", true,
                                               BigCount(2 * d + 1),
                                               comps.per_color[1].max_components));
        report.checks.push_back(size_cap_check(
            "2-components capped", true, bounds::power(BigCount(3 * delta), 3 * d - 4),
            comps.per_color[2].max_components));
    }
    return report;
}

PropertyReport check_two_coloring_postconditions(const CycleInstance& inst,
                                                 const Coloring& coloring) {
    const PlaneGraph& g = inst.graph;
    require_total(coloring, g.vertex_count());
    std::uint64_t d = static_cast<std::uint64_t>(inst.cycle_degree);
    std::uint64_t delta = static_cast<std::uint64_t>(inst.max_degree);

    PropertyReport report;
    {
        PropertyCheck c;
        c.name = "stable set colored 2";
        for (int v : inst.stable)
            if (coloring[v] != 2) {
                c.pass = false;
                c.witness_vertex = v;
                break;
            }
        report.checks.push_back(std::move(c));
    }
    {
        auto comps = component_census(g.rotations(), coloring);
        report.checks.push_back(size_cap_check("1-components capped", true,
                                               BigCount(2 * d + 5),
                                               comps.per_color[1].max_components));
        report.checks.push_back(size_cap_check("2-components capped", true,
                                               bounds::f2(d, delta),
                                               comps.per_color[2].max_components));
    }
    return report;
}

PropertyReport check_planar_properties(const PlaneGraph& g, const Coloring& coloring,
                                          int degree_parameter) {
    require_total(coloring, g.vertex_count());
    require(degree_parameter >= g.max_degree(), ErrorCode::InvalidInput,
            "degree parameter below the actual maximum degree");
    std::uint64_t d = static_cast<std::uint64_t>(std::max(degree_parameter, 1));

    auto [outer, second] = boundary_layers(g);
    std::vector<char> on_outer(g.vertex_count(), 0);
    for (int v : outer) on_outer[v] = 1;

    PropertyReport report;
    {
        std::vector<std::vector<int>> pool;
        for (int color = 1; color <= 3; ++color) {
            auto comps = components_of_color(g.rotations(), coloring, color);
            pool.insert(pool.end(), comps.begin(), comps.end());
        }
        report.checks.push_back(size_cap_check("(I) all monochromatic components",
                                               true, bounds::final_bound(d), pool));
    }
    {
        PropertyCheck c;
        c.name = "(II) no color 3 on outer face";
        for (int v : outer)
            if (coloring[v] == 3) {
                c.pass = false;
                c.witness_vertex = v;
                break;
            }
        report.checks.push_back(std::move(c));
    }
    {
        PropertyCheck c;
        c.name = "(III) 1-components meeting outer face stay inside, size <= 6^4 D^3";
        BigCount cap = BigCount(1296) * d * d * d;
        c.bound = cap.str();
        for (const auto& comp : components_of_color(g.rotations(), coloring, 1)) {
            bool meets_outer = false, inside = true;
            for (int v : comp) {
                if (on_outer[v]) meets_outer = true;
                else inside = false;
            }
            if (!meets_outer) continue;
            if (!inside || BigCount(comp.size()) > cap) {
                c.pass = false;
                c.witness_component = comp;
                c.detail = inside ? "component exceeds cap"
                                  : "component leaves the outer face";
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace clustercolor
