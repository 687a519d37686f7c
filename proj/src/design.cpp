#include "observa/design.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "observa/analysis.hpp"
#include "observa/graph_algorithms.hpp"
#include "observa/pair_graph.hpp"
#include "observa/serialization.hpp"

namespace observa {

std::string_view to_string(DesignTarget target) { return target == DesignTarget::nodes ? "nodes" : "edges"; }

std::string_view to_string(DesignGoal goal) {
    return goal == DesignGoal::observable ? "observable" : "partly_observable";
}

std::string_view to_string(DesignStatus status) {
    switch (status) {
        case DesignStatus::feasible: return "feasible";
        case DesignStatus::infeasible: return "infeasible";
        case DesignStatus::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

DesignGoal default_goal(DesignTarget target) {
    return target == DesignTarget::nodes ? DesignGoal::observable : DesignGoal::partly_observable;
}

bool is_experimental(DesignTarget target, DesignGoal goal) { return goal != default_goal(target); }

std::vector<std::size_t> target_order(const Topology& topology, DesignTarget target) {
    const std::size_t n = topology.node_count();
    std::vector<std::size_t> degree(n, 0), out_degree(n, 0);
    for (const Arc& a : topology.arcs) {
        ++degree[a.from];
        ++degree[a.to];
        ++out_degree[a.from];
    }
    std::vector<std::size_t> key;
    if (target == DesignTarget::nodes) {
        key = degree;
    } else {
        for (const Arc& a : topology.arcs) key.push_back(out_degree[a.from]);
    }
    std::vector<std::size_t> order(key.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
    return order;
}

namespace {

constexpr ColorId unassigned = std::numeric_limits<ColorId>::max();

struct OutOfBudget {};

ColoredDigraph single_color(const Topology& topology) {
    ColoredDigraph g;
    g.node_labels = topology.node_labels;
    g.add_color("c0");
    for (const Arc& a : topology.arcs) g.edges.push_back({a.from, a.to, 0});
    return g;
}

class Search {
public:
    using Clock = std::chrono::steady_clock;

    Search(const Topology& topology, DesignTarget target, DesignGoal goal, std::size_t k, std::uint64_t max_nodes,
           Clock::time_point deadline)
        : topology_(topology),
          target_(target),
          goal_(goal),
          k_(k),
          max_nodes_(max_nodes),
          deadline_(deadline),
          order_(target_order(topology, target)),
          colors_(order_.size(), unassigned),
          asymptotic_(asymptotically_reachable(single_color(topology))) {
        in_arcs_.resize(topology.node_count());
        for (std::size_t i = 0; i < topology.arcs.size(); ++i) in_arcs_[topology.arcs[i].to].push_back(i);
    }

    std::optional<ColoringAssignment> run() {
        if (dfs(0, 0)) return found_;
        return std::nullopt;
    }

    std::uint64_t nodes_explored() const { return explored_; }

private:
    bool dfs(std::size_t position, std::size_t used) {
        if (position == order_.size()) return accept_leaf(used);
        const std::size_t slot = order_[position];
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (++explored_ > max_nodes_) throw OutOfBudget{};
            if ((explored_ & 63) == 0 && Clock::now() > deadline_) throw OutOfBudget{};
            colors_[slot] = static_cast<ColorId>(c);
            if (colors_new_edges(slot) && !consistent()) continue;
            if (dfs(position + 1, std::max(used, c + 1))) return true;
        }
        colors_[slot] = unassigned;
        return false;
    }

    bool colors_new_edges(std::size_t slot) const {
        return target_ == DesignTarget::edges || !in_arcs_[slot].empty();
    }

    ColorId arc_color(std::size_t arc) const {
        return target_ == DesignTarget::edges ? colors_[arc] : colors_[topology_.arcs[arc].to];
    }

    // Colored graph over the arcs that already have a color.
    ColoredDigraph partial_graph() const {
        ColoredDigraph g = ColoredDigraph::with_nodes(topology_.node_count());
        g.node_labels = topology_.node_labels;
        for (std::size_t c = 0; c < k_; ++c) g.add_color("c" + std::to_string(c));
        for (std::size_t i = 0; i < topology_.arcs.size(); ++i) {
            const ColorId c = arc_color(i);
            if (c != unassigned) g.edges.push_back({topology_.arcs[i].from, topology_.arcs[i].to, c});
        }
        return g;
    }

    // Both pair graphs only grow as more arcs get colors, and the asymptotic
    // set depends on the topology alone, so a violation here is final.
    bool consistent() const {
        const ColoredDigraph g = partial_graph();
        if (goal_ == DesignGoal::observable) {
            const TransitionTable table(g);
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (!asymptotic_.contains(v)) continue;
                for (ColorId c = 0; c < g.color_count(); ++c)
                    if (table.successors(v, c).size() >= 2) return false;
            }
            return topological_order(PairGraph(g, PairGraphKind::g2).adjacency()).has_value();
        }
        return topological_order(PairGraph(g, PairGraphKind::g2_tilde).adjacency()).has_value();
    }

    bool accept_leaf(std::size_t used) {
        ColoringAssignment a{target_, colors_, used};
        const ColoredDigraph g = apply_coloring(topology_, a);
        const bool ok = goal_ == DesignGoal::observable ? is_observable(g).holds : is_partly_observable(g).holds;
        if (ok) found_ = std::move(a);
        return ok;
    }

    const Topology& topology_;
    DesignTarget target_;
    DesignGoal goal_;
    std::size_t k_;
    std::uint64_t max_nodes_;
    Clock::time_point deadline_;
    std::vector<std::size_t> order_;
    std::vector<ColorId> colors_;
    NodeSet asymptotic_;
    std::vector<std::vector<std::size_t>> in_arcs_;
    std::uint64_t explored_ = 0;
    ColoringAssignment found_;
};

DesignResult solve(const Topology& topology, DesignTarget target, DesignGoal goal, std::size_t k,
                   std::uint64_t max_nodes, Search::Clock::time_point deadline) {
    if (k == 0) throw GraphError("number of colors must be at least 1");
    const auto start = Search::Clock::now();
    Search search(topology, target, goal, k, max_nodes, deadline);
    DesignResult result;
    try {
        result.assignment = search.run();
        result.status = result.assignment ? DesignStatus::feasible : DesignStatus::infeasible;
    } catch (const OutOfBudget&) {
        result.status = DesignStatus::budget_exceeded;
    }
    result.nodes_explored = search.nodes_explored();
    result.elapsed = Search::Clock::now() - start;
    return result;
}

nlohmann::json assignment_json(const ColoringAssignment& a, const Topology& topology) {
    if (a.target == DesignTarget::nodes) {
        nlohmann::json out = nlohmann::json::object();
        for (std::size_t v = 0; v < a.colors.size(); ++v) out[topology.node_labels[v]] = a.colors[v];
        return out;
    }
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < a.colors.size(); ++i) {
        const Arc& arc = topology.arcs[i];
        out.push_back({topology.node_labels[arc.from], topology.node_labels[arc.to], a.colors[i]});
    }
    return out;
}

}  // namespace

DesignResult design_coloring(const Topology& topology, DesignTarget target, DesignGoal goal, std::size_t k,
                             const DesignBudget& budget) {
    return solve(topology, target, goal, k, budget.max_nodes, std::chrono::steady_clock::now() + budget.time_limit);
}

DesignResult design_node_coloring_observable(const Topology& topology, std::size_t k, const DesignBudget& budget) {
    return design_coloring(topology, DesignTarget::nodes, DesignGoal::observable, k, budget);
}

DesignResult design_edge_coloring_partly_observable(const Topology& topology, std::size_t k,
                                                    const DesignBudget& budget) {
    return design_coloring(topology, DesignTarget::edges, DesignGoal::partly_observable, k, budget);
}

MinimumColorsResult minimum_colors(const Topology& topology, DesignTarget target, DesignGoal goal,
                                   const DesignBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + budget.time_limit;
    const std::size_t targets = target == DesignTarget::nodes ? topology.node_count() : topology.arcs.size();
    const std::size_t upper = std::max<std::size_t>(1, targets);
    MinimumColorsResult out;
    for (std::size_t k = 1; k <= upper; ++k) {
        const std::uint64_t left = budget.max_nodes > out.nodes_explored ? budget.max_nodes - out.nodes_explored : 0;
        DesignResult r = solve(topology, target, goal, k, left, deadline);
        out.nodes_explored += r.nodes_explored;
        if (r.status == DesignStatus::feasible) {
            out.status = DesignStatus::feasible;
            out.k = k;
            out.assignment = std::move(r.assignment);
            break;
        }
        if (r.status == DesignStatus::budget_exceeded) {
            out.status = DesignStatus::budget_exceeded;
            break;
        }
        out.k = k;
    }
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

MinimumColorsResult minimum_colors(const Topology& topology, DesignTarget target, const DesignBudget& budget) {
    return minimum_colors(topology, target, default_goal(target), budget);
}

ColoredDigraph apply_coloring(const Topology& topology, const ColoringAssignment& assignment) {
    const std::size_t expected =
        assignment.target == DesignTarget::nodes ? topology.node_count() : topology.arcs.size();
    if (assignment.colors.size() != expected) throw GraphError("assignment does not cover the target set");
    ColoredDigraph g;
    g.node_labels = topology.node_labels;
    for (std::size_t c = 0; c < assignment.k; ++c) g.add_color("c" + std::to_string(c));
    for (std::size_t i = 0; i < topology.arcs.size(); ++i) {
        const Arc& a = topology.arcs[i];
        const ColorId c = assignment.target == DesignTarget::nodes ? assignment.colors[a.to] : assignment.colors[i];
        if (c >= assignment.k) throw GraphError("assignment uses a color outside 0..k-1");
        g.edges.push_back({a.from, a.to, c});
    }
    return g;
}

nlohmann::json to_json(const DesignResult& result, const Topology& topology, std::size_t requested_k) {
    nlohmann::json out;
    out["status"] = to_string(result.status);
    out["requested_k"] = requested_k;
    if (result.assignment) {
        out["k"] = result.assignment->k;
        out["target"] = to_string(result.assignment->target);
        out["assignment"] = assignment_json(*result.assignment, topology);
        out["graph"] = graph_to_json(apply_coloring(topology, *result.assignment));
    }
    out["stats"] = {{"nodes_explored", result.nodes_explored}, {"elapsed_seconds", result.elapsed.count()}};
    return out;
}

nlohmann::json to_json(const MinimumColorsResult& result, const Topology& topology) {
    nlohmann::json out;
    out["status"] = to_string(result.status);
    if (result.status == DesignStatus::feasible) {
        out["k"] = result.k;
    } else {
        out["largest_infeasible_k"] = result.k;
    }
    if (result.assignment) {
        out["target"] = to_string(result.assignment->target);
        out["assignment"] = assignment_json(*result.assignment, topology);
        out["graph"] = graph_to_json(apply_coloring(topology, *result.assignment));
    }
    out["stats"] = {{"nodes_explored", result.nodes_explored}, {"elapsed_seconds", result.elapsed.count()}};
    return out;
}

}  // namespace observa
