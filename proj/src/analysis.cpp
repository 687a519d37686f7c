#include "observa/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "observa/graph_algorithms.hpp"

namespace observa {

namespace {

void require_closed(const ColoredDigraph& graph) {
    if (!graph.unobservable.empty())
        throw GraphError("graph has unobservable edges; apply epsilon_closure first");
}

std::optional<Witness> pair_cycle(const PairGraph& pairs) {
    const auto cycle = find_short_cycle(pairs.adjacency());
    if (cycle.empty()) return std::nullopt;
    PairCycleWitness w;
    w.kind = pairs.kind();
    for (std::uint32_t v : cycle) w.pairs.push_back(pairs.pair(v));
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
        const auto colors = pairs.edge_colors(w.pairs[i], w.pairs[(i + 1) % w.pairs.size()]);
        w.colors.push_back(colors.front());
    }
    return w;
}

std::optional<Witness> branching_node(const ColoredDigraph& graph) {
    const NodeSet asymptotic = asymptotically_reachable(graph);
    const TransitionTable table(graph);
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (!asymptotic.contains(v)) continue;
        for (ColorId c = 0; c < graph.color_count(); ++c) {
            const auto succ = table.successors(v, c);
            if (succ.size() >= 2) return BranchingWitness{v, c, succ[0], succ[1]};
        }
    }
    return std::nullopt;
}

Verdict observable_given(const ColoredDigraph& graph, const PairGraph& g2) {
    if (auto w = pair_cycle(g2)) return {false, std::move(w)};
    if (auto w = branching_node(graph)) return {false, std::move(w)};
    return {true, std::nullopt};
}

std::size_t longest_path(const PairGraph& acyclic) {
    const Csr& adj = acyclic.adjacency();
    const std::vector<bool> all(adj.size(), true);
    const auto order = topological_order(adj, all);
    if (!order) throw std::logic_error("longest path requested on a cyclic pair graph");
    const auto lengths = longest_path_lengths(adj, *order, all);
    std::size_t best = 0;
    for (std::size_t v = 0; v < lengths.size(); ++v)
        if (acyclic.contains(acyclic.pair(static_cast<std::uint32_t>(v)))) best = std::max(best, lengths[v]);
    return best;
}

// Longest word admitting two allowed paths with distinct end nodes, computed
// in the augmented pair graph restricted to pairs that can still reach an
// off-diagonal pair.
std::size_t longest_bad_word(const ColoredDigraph& graph) {
    const PairGraph h(graph, PairGraphKind::augmented);
    const Csr& adj = h.adjacency();
    const std::size_t n = graph.node_count();
    std::vector<bool> off_diagonal(adj.size(), false);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = 0; b < n; ++b)
            if (a != b) off_diagonal[h.index({a, b})] = true;
    const auto active = reachable_from(adj.reversed(), off_diagonal);
    const auto order = topological_order(adj, active);
    if (!order)
        throw std::logic_error("internal error: augmented pair graph has a cycle reaching an off-diagonal pair "
                               "although the graph is observable");
    const auto lengths = longest_path_lengths(adj, *order, active);
    std::size_t best = 0;
    for (std::size_t v = 0; v < lengths.size(); ++v)
        if (off_diagonal[v]) best = std::max(best, lengths[v]);
    return best;
}

}  // namespace

PairGraph build_pair_graph(const ColoredDigraph& graph, PairGraphKind kind) {
    require_closed(graph);
    return PairGraph(graph, kind);
}

Verdict is_observable(const ColoredDigraph& graph) {
    require_closed(graph);
    return observable_given(graph, PairGraph(graph, PairGraphKind::g2));
}

Verdict is_partly_observable(const ColoredDigraph& graph) {
    require_closed(graph);
    const PairGraph tilde(graph, PairGraphKind::g2_tilde);
    if (auto w = pair_cycle(tilde)) return {false, std::move(w)};
    return {true, std::nullopt};
}

bool is_partly_aposteriori_observable(const ColoredDigraph& graph) {
    require_closed(graph);
    const PairGraph g2(graph, PairGraphKind::g2);
    return topological_order(g2.adjacency()).has_value();
}

std::optional<std::size_t> min_observation_time(const ColoredDigraph& graph) {
    if (!is_observable(graph).holds) return std::nullopt;
    if (graph.node_count() <= 1) return 0;
    return longest_bad_word(graph) + 1;
}

std::optional<std::size_t> min_partial_observation_time(const ColoredDigraph& graph) {
    require_closed(graph);
    const PairGraph tilde(graph, PairGraphKind::g2_tilde);
    if (!topological_order(tilde.adjacency())) return std::nullopt;
    if (graph.node_count() <= 1) return 0;
    return longest_path(tilde) + 1;
}

ObservabilityReport analyze(const ColoredDigraph& graph) {
    require_closed(graph);
    ObservabilityReport report;
    const PairGraph g2(graph, PairGraphKind::g2);
    const PairGraph tilde(graph, PairGraphKind::g2_tilde);

    const Verdict observable = observable_given(graph, g2);
    report.observable = observable.holds;
    report.witness = observable.witness;

    report.partial_witness = pair_cycle(tilde);
    report.partly_observable = !report.partial_witness.has_value();
    report.partly_aposteriori = topological_order(g2.adjacency()).has_value();

    const bool trivial = graph.node_count() <= 1;
    if (report.observable) report.min_time = trivial ? 0 : longest_bad_word(graph) + 1;
    if (report.partly_observable) report.min_partial_time = trivial ? 0 : longest_path(tilde) + 1;
    return report;
}

std::string describe(const Witness& witness, const ColoredDigraph& graph) {
    std::ostringstream out;
    if (const auto* cycle = std::get_if<PairCycleWitness>(&witness)) {
        out << to_string(cycle->kind) << " cycle:";
        for (std::size_t i = 0; i < cycle->pairs.size(); ++i) {
            const PairNode& p = cycle->pairs[i];
            out << " (" << graph.node_labels[p.first] << "," << graph.node_labels[p.second] << ") -"
                << graph.color_labels[cycle->colors[i]] << "->";
        }
        const PairNode& first = cycle->pairs.front();
        out << " (" << graph.node_labels[first.first] << "," << graph.node_labels[first.second] << ")";
    } else {
        const auto& b = std::get<BranchingWitness>(witness);
        out << "node " << graph.node_labels[b.node] << " has two outgoing edges of color "
            << graph.color_labels[b.color] << " (to " << graph.node_labels[b.first_target] << " and "
            << graph.node_labels[b.second_target] << ")";
    }
    return out.str();
}

}  // namespace observa
