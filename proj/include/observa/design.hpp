#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "observa/colored_digraph.hpp"

namespace observa {

enum class DesignTarget { nodes, edges };
enum class DesignGoal { observable, partly_observable };

std::string_view to_string(DesignTarget target);
std::string_view to_string(DesignGoal goal);

/// The goal the hardness results pair with each target: observability for
/// node colorings, partial observability for edge colorings.
DesignGoal default_goal(DesignTarget target);

/// Whether (target, goal) is one of the two combinations backed by a known
/// hardness result; the other two are solved the same way but unvalidated.
bool is_experimental(DesignTarget target, DesignGoal goal);

struct DesignBudget {
    std::uint64_t max_nodes = 20'000'000;
    std::chrono::milliseconds time_limit{60'000};
};

/// colors[i] is the color of node i (nodes target) or of topology.arcs[i]
/// (edges target). Colors form a prefix 0..k-1 and appear in first-touch
/// order along the search ordering.
struct ColoringAssignment {
    DesignTarget target = DesignTarget::nodes;
    std::vector<ColorId> colors;
    std::size_t k = 0;
};

enum class DesignStatus { feasible, infeasible, budget_exceeded };
std::string_view to_string(DesignStatus status);

struct DesignResult {
    DesignStatus status = DesignStatus::infeasible;
    std::optional<ColoringAssignment> assignment;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
};

struct MinimumColorsResult {
    DesignStatus status = DesignStatus::infeasible;
    /// k_min when feasible; otherwise the largest k proven infeasible (0 if none).
    std::size_t k = 0;
    std::optional<ColoringAssignment> assignment;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
};

/// Exhaustive backtracking over k-colorings of the targets. Targets are
/// visited by descending degree (ties by index), colors ascending, and a new
/// color index is only opened after all smaller ones are used. The first
/// feasible leaf is therefore the lexicographically smallest canonical one.
DesignResult design_coloring(const Topology& topology, DesignTarget target, DesignGoal goal, std::size_t k,
                             const DesignBudget& budget = {});

DesignResult design_node_coloring_observable(const Topology& topology, std::size_t k,
                                             const DesignBudget& budget = {});
DesignResult design_edge_coloring_partly_observable(const Topology& topology, std::size_t k,
                                                    const DesignBudget& budget = {});

/// Ascending search over k = 1 .. max(1, number of targets). The node and
/// time budgets apply to the whole search.
MinimumColorsResult minimum_colors(const Topology& topology, DesignTarget target, DesignGoal goal,
                                   const DesignBudget& budget = {});
MinimumColorsResult minimum_colors(const Topology& topology, DesignTarget target, const DesignBudget& budget = {});

/// Colored graph on the topology's nodes with colors "c0".."c<k-1>". For a
/// node coloring every arc takes the color of its head.
ColoredDigraph apply_coloring(const Topology& topology, const ColoringAssignment& assignment);

/// The order in which the solver assigns targets.
std::vector<std::size_t> target_order(const Topology& topology, DesignTarget target);

nlohmann::json to_json(const DesignResult& result, const Topology& topology, std::size_t requested_k);
nlohmann::json to_json(const MinimumColorsResult& result, const Topology& topology);

}  // namespace observa
