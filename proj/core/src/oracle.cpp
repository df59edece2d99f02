#include "clustercolor/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "clustercolor/verify.hpp"

namespace clustercolor {
namespace oracle {

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    // Smallest root-branch index known feasible; branches above it abort.
    std::atomic<int> best_feasible_branch{std::numeric_limits<int>::max()};
    Clock::time_point deadline_start;
    SearchBudget budget;

    bool expired() const {
        if (budget.max_seconds == std::numeric_limits<double>::infinity()) return false;
        std::chrono::duration<double> elapsed = Clock::now() - deadline_start;
        return elapsed.count() > budget.max_seconds;
    }
};

// Union-find with an undo log; no path compression so rollbacks are exact.
struct RollbackComponents {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> log;  // (child root, parent root)

    explicit RollbackComponents(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) const {
        while (parent[a] != a) a = parent[a];
        return a;
    }
    // Merge and return the new root's size.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return size[a];
        if (size[a] > size[b]) std::swap(a, b);
        parent[a] = b;
        size[b] += size[a];
        log.push_back({a, b});
        return size[b];
    }
    std::size_t mark() const { return log.size(); }
    void rollback(std::size_t mark) {
        while (log.size() > mark) {
            auto [child, root] = log.back();
            log.pop_back();
            size[root] -= size[child];
            parent[child] = child;
        }
    }
};

struct Searcher {
    const std::vector<std::vector<int>>& adjacency;
    const std::vector<int>& order;     // position -> vertex
    const std::vector<int>& position;  // vertex -> position
    int colors;
    int bound;
    Shared& shared;
    int branch_index;

    std::vector<int> assigned;  // vertex -> color, 0 unset
    RollbackComponents components;
    std::uint64_t local_nodes = 0;

    Searcher(const std::vector<std::vector<int>>& adj, const std::vector<int>& ord,
             const std::vector<int>& pos, int colors_, int bound_, Shared& shared_,
             int branch)
        : adjacency(adj),
          order(ord),
          position(pos),
          colors(colors_),
          bound(bound_),
          shared(shared_),
          branch_index(branch),
          assigned(adj.size(), 0),
          components(static_cast<int>(adj.size())) {}

    bool aborted() const {
        return shared.out_of_budget.load(std::memory_order_relaxed) ||
               branch_index > shared.best_feasible_branch.load(std::memory_order_relaxed);
    }

    // Try color c on vertex v; returns false (and rolls back) if a
    // component would exceed the bound.
    bool place(int v, int c, std::size_t* mark) {
        *mark = components.mark();
        assigned[v] = c;
        for (int nb : adjacency[v]) {
            if (assigned[nb] != c) continue;
            if (components.unite(v, nb) > bound) {
                components.rollback(*mark);
                assigned[v] = 0;
                return false;
            }
        }
        return true;
    }

    // Depth-first from `depth`; true when a full assignment was reached.
    bool dfs(std::size_t depth) {
        if (depth == order.size()) return true;
        ++local_nodes;
        std::uint64_t total = shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (total > shared.budget.max_nodes ||
            ((total & 0x3ff) == 0 && shared.expired())) {
            shared.out_of_budget.store(true, std::memory_order_relaxed);
            return false;
        }
        if (aborted()) return false;
        int v = order[depth];
        int limit = depth == 0 ? 1 : colors;  // pin the first vertex's color
        for (int c = 1; c <= limit; ++c) {
            std::size_t mark;
            if (!place(v, c, &mark)) continue;
            if (dfs(depth + 1)) return true;
            components.rollback(mark);
            assigned[v] = 0;
            if (aborted()) return false;
        }
        return false;
    }
};

std::vector<int> search_order(const std::vector<std::vector<int>>& adjacency) {
    std::vector<int> order(adjacency.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adjacency[a].size() > adjacency[b].size() ||
               (adjacency[a].size() == adjacency[b].size() && a < b);
    });
    return order;
}

void validate_witness(const std::vector<std::vector<int>>& adjacency,
                      const Coloring& witness, int bound) {
    ComponentReport census = component_census(adjacency, witness);
    require(census.overall_max() <= bound, ErrorCode::InternalInvariantViolation,
            "search produced a witness violating the bound");
}

}  // namespace

OracleResult feasible(const std::vector<std::vector<int>>& adjacency, int colors,
                      int bound, const SearchBudget& budget, int jobs) {
    require(colors >= 1, ErrorCode::InvalidInput, "need at least one color");
    require(bound >= 1, ErrorCode::InvalidInput, "need a positive bound");
    int n = static_cast<int>(adjacency.size());

    Shared shared;
    shared.budget = budget;
    shared.deadline_start = Clock::now();

    if (n == 0) return {Feasibility::Feasible, {}, 0};

    std::vector<int> order = search_order(adjacency);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;

    auto finish = [&](Feasibility status, Coloring witness) {
        OracleResult result;
        result.status = status;
        result.witness = std::move(witness);
        result.nodes = shared.nodes.load();
        if (status == Feasibility::Feasible)
            validate_witness(adjacency, result.witness, bound);
        return result;
    };

    if (jobs <= 1 || n < 3) {
        Searcher searcher(adjacency, order, position, colors, bound, shared, 0);
        bool found = searcher.dfs(0);
        if (found) return finish(Feasibility::Feasible, searcher.assigned);
        if (shared.out_of_budget.load()) return finish(Feasibility::Unknown, {});
        return finish(Feasibility::Infeasible, {});
    }

    // Parallel mode: branch on the colors of the second and third vertices
    // in the order.  The feasible branch with the smallest index supplies
    // the witness, so the outcome does not depend on thread timing.
    struct Branch {
        int c1, c2;
        Feasibility status = Feasibility::Unknown;
        Coloring witness;
        bool ran = false;
    };
    std::vector<Branch> branches;
    for (int c1 = 1; c1 <= colors; ++c1)
        for (int c2 = 1; c2 <= colors; ++c2) branches.push_back({c1, c2});

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= branches.size()) return;
            Branch& br = branches[i];
            br.ran = true;
            Searcher searcher(adjacency, order, position, colors, bound, shared,
                              static_cast<int>(i));
            std::size_t m0, m1;
            bool ok = searcher.place(order[0], 1, &m0) &&
                      searcher.place(order[1], br.c1, &m1) &&
                      [&] {
                          std::size_t m2;
                          return searcher.place(order[2], br.c2, &m2);
                      }();
            bool found = ok && searcher.dfs(3);
            if (found) {
                br.status = Feasibility::Feasible;
                br.witness = searcher.assigned;
                // Abort branches that can no longer win.
                int expect = shared.best_feasible_branch.load();
                while (static_cast<int>(i) < expect &&
                       !shared.best_feasible_branch.compare_exchange_weak(expect,
                                                                          static_cast<int>(i))) {
                }
            } else {
                br.status = shared.out_of_budget.load() ? Feasibility::Unknown
                                                        : Feasibility::Infeasible;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (const Branch& br : branches)
        if (br.status == Feasibility::Feasible)
            return finish(Feasibility::Feasible, br.witness);
    for (const Branch& br : branches)
        if (br.status == Feasibility::Unknown) return finish(Feasibility::Unknown, {});
    return finish(Feasibility::Infeasible, {});
}

MinMaxResult min_max_component(const std::vector<std::vector<int>>& adjacency,
                               int colors, const SearchBudget& budget, int jobs) {
    require(colors >= 1, ErrorCode::InvalidInput, "need at least one color");
    int n = static_cast<int>(adjacency.size());
    MinMaxResult result;
    if (n == 0) {
        result.status = Feasibility::Feasible;
        return result;
    }

    Clock::time_point start = Clock::now();
    std::uint64_t nodes_used = 0;
    for (int b = 1; b <= n; ++b) {
        SearchBudget remaining = budget;
        if (remaining.max_nodes != std::numeric_limits<std::uint64_t>::max()) {
            if (nodes_used >= remaining.max_nodes) {
                result.status = Feasibility::Unknown;
                result.nodes = nodes_used;
                return result;
            }
            remaining.max_nodes -= nodes_used;
        }
        if (remaining.max_seconds != std::numeric_limits<double>::infinity()) {
            std::chrono::duration<double> elapsed = Clock::now() - start;
            remaining.max_seconds -= elapsed.count();
            if (remaining.max_seconds <= 0) {
                result.status = Feasibility::Unknown;
                result.nodes = nodes_used;
                return result;
            }
        }
        OracleResult step = feasible(adjacency, colors, b, remaining, jobs);
        nodes_used += step.nodes;
        if (step.status == Feasibility::Unknown) {
            result.status = Feasibility::Unknown;
            result.nodes = nodes_used;
            return result;
        }
        if (step.status == Feasibility::Feasible) {
            result.status = Feasibility::Feasible;
            result.value = b;
            result.witness = std::move(step.witness);
            result.nodes = nodes_used;
            return result;
        }
    }
    fail(ErrorCode::InternalInvariantViolation,
         "bound equal to the vertex count must be feasible");
}

}  // namespace oracle
}  // namespace clustercolor
