#include <doctest.h>

#include "design_support.hpp"
#include "observa/design.hpp"
#include "observa/generators.hpp"

using namespace observa;

namespace {

Topology topology_named(const char* name) { return topology_of(named_example(name)); }

// All arc sets with at most max_arcs arcs on n nodes (self-loops allowed).
std::vector<Topology> small_topologies(std::size_t n, std::size_t max_arcs) {
    std::vector<Arc> all;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v) all.push_back({u, v});
    std::vector<Topology> out;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_arcs) continue;
        Topology t;
        for (NodeId v = 0; v < n; ++v) t.node_labels.push_back(std::to_string(v));
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((mask >> i) & 1) t.arcs.push_back(all[i]);
        out.push_back(t);
    }
    return out;
}

void check_result(const Topology& t, DesignTarget target, DesignGoal goal, std::size_t k, const DesignResult& r) {
    if (r.status != DesignStatus::feasible) return;
    REQUIRE(r.assignment);
    const ColoringAssignment& a = *r.assignment;
    CHECK(a.k <= k);
    CHECK(support::canonical(a.colors, target_order(t, target)));
    CHECK(support::passes(apply_coloring(t, a), goal));
}

}  // namespace

TEST_SUITE_BEGIN("design");

TEST_CASE("node coloring examples") {
    const Topology twocyc = topology_named("twocyc");
    CHECK(design_node_coloring_observable(twocyc, 1).status == DesignStatus::infeasible);
    const DesignResult two = design_node_coloring_observable(twocyc, 2);
    CHECK(two.status == DesignStatus::feasible);
    REQUIRE(two.assignment);
    CHECK(two.assignment->colors == std::vector<ColorId>{0, 1});
    CHECK(min_observation_time(apply_coloring(twocyc, *two.assignment)) == 1);

    const Topology reduced = reduce_3colorability(UndirectedGraph::complete(3)).output;
    const DesignResult three = design_node_coloring_observable(reduced, 3);
    CHECK(three.status == DesignStatus::feasible);
    check_result(reduced, DesignTarget::nodes, DesignGoal::observable, 3, three);
}

TEST_CASE("edge coloring examples") {
    const Topology star = topology_named("star(2)");
    CHECK(design_edge_coloring_partly_observable(star, 1).status == DesignStatus::infeasible);
    const DesignResult two = design_edge_coloring_partly_observable(star, 2);
    CHECK(two.status == DesignStatus::feasible);
    check_result(star, DesignTarget::edges, DesignGoal::partly_observable, 2, two);
    CHECK(design_edge_coloring_partly_observable(topology_named("loop1"), 1).status == DesignStatus::feasible);
    CHECK_THROWS_AS(design_edge_coloring_partly_observable(star, 0), GraphError);
}

TEST_CASE("minimum colors") {
    const auto twocyc = minimum_colors(topology_named("twocyc"), DesignTarget::nodes);
    CHECK(twocyc.status == DesignStatus::feasible);
    CHECK(twocyc.k == 2);
    const auto star = minimum_colors(topology_named("star(2)"), DesignTarget::edges);
    CHECK(star.status == DesignStatus::feasible);
    CHECK(star.k == 2);
    for (DesignTarget target : {DesignTarget::nodes, DesignTarget::edges}) {
        const auto loop = minimum_colors(topology_named("loop1"), target);
        CHECK(loop.status == DesignStatus::feasible);
        CHECK(loop.k == 1);
    }
    const auto empty = minimum_colors(Topology{}, DesignTarget::edges);
    CHECK(empty.status == DesignStatus::feasible);
    CHECK(empty.k == 1);

    // With one color per target no pair can move apart, so the search
    // always ends by the number of targets.
    ColoredDigraph dense = ColoredDigraph::with_nodes(3, {"a"});
    for (NodeId u = 0; u < 3; ++u)
        for (NodeId v = 0; v < 3; ++v) dense.add_edge(u, v, 0);
    const auto full = minimum_colors(topology_of(dense), DesignTarget::nodes);
    CHECK(full.status == DesignStatus::feasible);
    CHECK(full.k == 3);
}

TEST_CASE("budgets") {
    DesignBudget tiny;
    tiny.max_nodes = 1;
    const Topology reduced = reduce_3colorability(UndirectedGraph::complete(3)).output;
    CHECK(design_node_coloring_observable(reduced, 3, tiny).status == DesignStatus::budget_exceeded);

    DesignBudget some;
    some.max_nodes = 4;
    const auto r = minimum_colors(topology_named("twocyc"), DesignTarget::nodes, some);
    CHECK(r.status == DesignStatus::budget_exceeded);
    CHECK(r.k == 1);
}

TEST_CASE("solver matches exhaustive enumeration on small topologies") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const Topology& t : small_topologies(n, 5)) {
            for (DesignTarget target : {DesignTarget::nodes, DesignTarget::edges}) {
                for (DesignGoal goal : {DesignGoal::observable, DesignGoal::partly_observable}) {
                    for (std::size_t k = 1; k <= 2; ++k) {
                        const DesignResult r = design_coloring(t, target, goal, k);
                        CHECK((r.status == DesignStatus::feasible) ==
                              support::exhaustive_feasible(t, target, goal, k));
                        check_result(t, target, goal, k, r);
                    }
                }
            }
        }
    }
}

TEST_CASE("first feasible canonical assignment is returned") {
    for (const Topology& t : small_topologies(3, 4)) {
        for (DesignTarget target : {DesignTarget::nodes, DesignTarget::edges}) {
            const DesignGoal goal = default_goal(target);
            const auto order = target_order(t, target);
            const std::size_t slots = order.size();
            std::optional<std::vector<ColorId>> first;
            support::each_assignment(slots, 3, order, [&](const std::vector<ColorId>& c) {
                if (!support::canonical(c, order)) return false;
                std::size_t used = 0;
                for (ColorId x : c) used = std::max<std::size_t>(used, x + 1u);
                if (!support::passes(support::colored_by(t, target, c, std::max<std::size_t>(used, 1)), goal))
                    return false;
                first = c;
                return true;
            });
            const DesignResult r = design_coloring(t, target, goal, 3);
            REQUIRE(first.has_value() == (r.status == DesignStatus::feasible));
            if (first) CHECK(r.assignment->colors == *first);
        }
    }
}

TEST_CASE("feasibility is monotone in k") {
    for (const Topology& t : small_topologies(3, 4)) {
        for (DesignTarget target : {DesignTarget::nodes, DesignTarget::edges}) {
            const DesignGoal goal = default_goal(target);
            for (std::size_t k = 1; k <= 2; ++k)
                if (design_coloring(t, target, goal, k).status == DesignStatus::feasible)
                    CHECK(design_coloring(t, target, goal, k + 1).status == DesignStatus::feasible);
        }
    }
}

TEST_CASE("JSON results") {
    const Topology t = topology_named("twocyc");
    const auto r = minimum_colors(t, DesignTarget::nodes);
    const auto j = to_json(r, t);
    CHECK(j["status"] == "feasible");
    CHECK(j["k"] == 2);
    CHECK(j["assignment"]["0"] == 0);
    CHECK(j["assignment"]["1"] == 1);
    CHECK(j["graph"]["colors"].size() == 2);
    CHECK(j.contains("stats"));

    const Topology star = topology_named("star(2)");
    const auto e = to_json(design_edge_coloring_partly_observable(star, 2), star, 2);
    CHECK(e["assignment"].size() == 4);
    CHECK(e["assignment"][0].size() == 3);
    CHECK(e["requested_k"] == 2);
}

TEST_SUITE_END();
