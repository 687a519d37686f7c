#include "observa/colored_digraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "observa/graph_algorithms.hpp"

namespace observa {

std::optional<NodeId> ColoredDigraph::find_node(std::string_view label) const {
    for (std::size_t i = 0; i < node_labels.size(); ++i)
        if (node_labels[i] == label) return static_cast<NodeId>(i);
    return std::nullopt;
}

std::optional<ColorId> ColoredDigraph::find_color(std::string_view label) const {
    for (std::size_t i = 0; i < color_labels.size(); ++i)
        if (color_labels[i] == label) return static_cast<ColorId>(i);
    return std::nullopt;
}

NodeId ColoredDigraph::add_node(std::string label) {
    node_labels.push_back(std::move(label));
    return static_cast<NodeId>(node_labels.size() - 1);
}

ColorId ColoredDigraph::add_color(std::string label) {
    color_labels.push_back(std::move(label));
    return static_cast<ColorId>(color_labels.size() - 1);
}

ColoredDigraph ColoredDigraph::with_nodes(std::size_t n, std::vector<std::string> colors) {
    ColoredDigraph g;
    for (std::size_t i = 0; i < n; ++i) g.node_labels.push_back(std::to_string(i));
    g.color_labels = std::move(colors);
    return g;
}

bool same_graph(const ColoredDigraph& a, const ColoredDigraph& b) {
    if (a.node_labels != b.node_labels || a.color_labels != b.color_labels) return false;
    std::multiset<Edge> ea(a.edges.begin(), a.edges.end());
    std::multiset<Edge> eb(b.edges.begin(), b.edges.end());
    std::multiset<Arc> ua(a.unobservable.begin(), a.unobservable.end());
    std::multiset<Arc> ub(b.unobservable.begin(), b.unobservable.end());
    return ea == eb && ua == ub;
}

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what, ValidationReport& report) {
    std::map<std::string_view, std::size_t> first;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) {
            report.issues.push_back({Severity::error, std::string("empty ") + what + " label",
                                     std::string(what) + "s[" + std::to_string(i) + "]"});
            continue;
        }
        auto [it, inserted] = first.emplace(labels[i], i);
        if (!inserted) {
            report.issues.push_back({Severity::error,
                                     std::string("duplicate ") + what + " label '" + labels[i] + "'",
                                     std::string(what) + "s[" + std::to_string(i) + "]"});
        }
    }
}

}  // namespace

ValidationReport validate(const ColoredDigraph& graph) {
    ValidationReport report;
    const std::size_t n = graph.node_count();
    const std::size_t m = graph.color_count();
    check_labels(graph.node_labels, "node", report);
    check_labels(graph.color_labels, "color", report);

    std::set<Edge> seen;
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const Edge& e = graph.edges[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (e.from >= n || e.to >= n) {
            const NodeId bad = e.from >= n ? e.from : e.to;
            report.issues.push_back(
                {Severity::error, "dangling endpoint: node " + std::to_string(bad) + " is not declared", where});
        }
        if (e.color >= m) {
            report.issues.push_back(
                {Severity::error, "undeclared color " + std::to_string(e.color), where});
        }
        if (!seen.insert(e).second) {
            report.issues.push_back({Severity::error, "duplicate edge", where});
        }
    }
    std::set<Arc> seen_arcs;
    for (std::size_t i = 0; i < graph.unobservable.size(); ++i) {
        const Arc& a = graph.unobservable[i];
        const std::string where = "unobservable[" + std::to_string(i) + "]";
        if (a.from >= n || a.to >= n) {
            const NodeId bad = a.from >= n ? a.from : a.to;
            report.issues.push_back(
                {Severity::error, "dangling endpoint: node " + std::to_string(bad) + " is not declared", where});
        }
        if (!seen_arcs.insert(a).second) {
            report.issues.push_back({Severity::error, "duplicate unobservable edge", where});
        }
    }
    report.ok = std::none_of(report.issues.begin(), report.issues.end(),
                             [](const ValidationIssue& i) { return i.severity == Severity::error; });
    return report;
}

TransitionTable::TransitionTable(const ColoredDigraph& graph)
    : n_(graph.node_count()), m_(graph.color_count()) {
    const std::size_t slots = n_ * m_;
    offsets_.assign(slots + 1, 0);
    std::vector<Edge> sorted = graph.edges;
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.color, a.from, a.to) < std::tie(b.color, b.from, b.to);
    });
    for (const Edge& e : sorted) ++offsets_[static_cast<std::size_t>(e.color) * n_ + e.from + 1];
    for (std::size_t i = 0; i < slots; ++i) offsets_[i + 1] += offsets_[i];
    targets_.reserve(sorted.size());
    for (const Edge& e : sorted) targets_.push_back(e.to);

    masks_.assign(slots, NodeSet(n_));
    for (const Edge& e : sorted) masks_[static_cast<std::size_t>(e.color) * n_ + e.from].insert(e.to);
}

namespace {

Csr colorless_adjacency(const ColoredDigraph& graph) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    arcs.reserve(graph.edges.size());
    for (const Edge& e : graph.edges) arcs.emplace_back(e.from, e.to);
    return Csr::from_edges(graph.node_count(), std::move(arcs));
}

}  // namespace

NodeSet asymptotically_reachable(const ColoredDigraph& graph) {
    const Csr adjacency = colorless_adjacency(graph);
    const auto seen = reachable_from(adjacency, on_cycle(adjacency));
    NodeSet result(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (seen[v]) result.insert(v);
    return result;
}

ColoredDigraph epsilon_closure(const ColoredDigraph& graph) {
    ColoredDigraph result = graph;
    result.unobservable.clear();
    if (graph.unobservable.empty()) return result;

    const std::size_t n = graph.node_count();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    for (const Arc& a : graph.unobservable) arcs.emplace_back(a.from, a.to);
    const Csr silent = Csr::from_edges(n, std::move(arcs));

    // Strict (one or more steps) silent reachability from every node.
    std::vector<std::vector<NodeId>> silent_reach(n);
    for (NodeId i = 0; i < n; ++i) {
        std::vector<bool> seeds(n, false);
        for (std::uint32_t j : silent.successors(i)) seeds[j] = true;
        const auto seen = reachable_from(silent, seeds);
        for (NodeId j = 0; j < n; ++j)
            if (seen[j]) silent_reach[i].push_back(j);
    }

    std::set<Edge> present(graph.edges.begin(), graph.edges.end());
    std::set<Edge> added;
    for (const Edge& e : graph.edges) {
        for (NodeId j : silent_reach[e.to]) {
            const Edge shortcut{e.from, j, e.color};
            if (!present.contains(shortcut)) added.insert(shortcut);
        }
    }
    result.edges.insert(result.edges.end(), added.begin(), added.end());
    return result;
}

Topology topology_of(const ColoredDigraph& graph) {
    Topology t;
    t.node_labels = graph.node_labels;
    std::set<Arc> arcs;
    for (const Edge& e : graph.edges) arcs.insert({e.from, e.to});
    for (const Arc& a : graph.unobservable) arcs.insert(a);
    t.arcs.assign(arcs.begin(), arcs.end());
    return t;
}

ColoredDigraph uncolored_graph(const Topology& topology) {
    ColoredDigraph g;
    g.node_labels = topology.node_labels;
    g.unobservable = topology.arcs;
    return g;
}

Word parse_word(const ColoredDigraph& graph, std::string_view text) {
    Word word;
    auto lookup = [&](std::string_view label) {
        const auto color = graph.find_color(label);
        if (!color) throw GraphError("unknown color '" + std::string(label) + "' in word");
        word.push_back(*color);
    };
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find(',', start), text.size());
            lookup(text.substr(start, end - start));
            start = end + 1;
        }
        return word;
    }
    for (std::size_t i = 0; i < text.size(); ++i) lookup(text.substr(i, 1));
    return word;
}

std::string format_word(const ColoredDigraph& graph, const Word& word) {
    const bool compact = std::all_of(graph.color_labels.begin(), graph.color_labels.end(),
                                     [](const std::string& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += graph.color_labels.at(word[i]);
    }
    return out;
}

void check_word(const ColoredDigraph& graph, const Word& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= graph.color_count())
            throw GraphError("undeclared color " + std::to_string(word[i]) + " at word position " +
                             std::to_string(i));
    }
}

}  // namespace observa
