#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "observa/node_set.hpp"

namespace observa {

using ColorId = std::uint32_t;

/// A colored transition. An edge carrying several colors is stored as several
/// triples with the same endpoints.
struct Edge {
    NodeId from = 0;
    NodeId to = 0;
    ColorId color = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An uncolored (unobservable) transition, or an arc of an uncolored topology.
struct Arc {
    NodeId from = 0;
    NodeId to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sequence of observed colors.
using Word = std::vector<ColorId>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-colored directed graph with dense node and color indices.
///
/// The struct is deliberately permissive: it can hold malformed content
/// (dangling endpoints, duplicates) so that validate() can report it. Every
/// algorithm in the library assumes a graph for which validate() is ok.
struct ColoredDigraph {
    std::vector<std::string> node_labels;
    std::vector<std::string> color_labels;
    std::vector<Edge> edges;
    std::vector<Arc> unobservable;

    std::size_t node_count() const { return node_labels.size(); }
    std::size_t color_count() const { return color_labels.size(); }

    std::optional<NodeId> find_node(std::string_view label) const;
    std::optional<ColorId> find_color(std::string_view label) const;

    NodeId add_node(std::string label);
    ColorId add_color(std::string label);
    void add_edge(NodeId from, NodeId to, ColorId color) { edges.push_back({from, to, color}); }

    /// Graph with nodes labeled "0".."n-1" and the given color labels.
    static ColoredDigraph with_nodes(std::size_t n, std::vector<std::string> colors = {});

    friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;
};

/// True when both graphs have the same labels (in order) and the same edge
/// sets, ignoring the order in which edges are listed.
bool same_graph(const ColoredDigraph& a, const ColoredDigraph& b);

enum class Severity { warning, error };

struct ValidationIssue {
    Severity severity = Severity::error;
    std::string message;
    std::string location;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate(const ColoredDigraph& graph);

/// Per-(color, node) successor lists and bitmasks.
class TransitionTable {
public:
    explicit TransitionTable(const ColoredDigraph& graph);

    std::size_t node_count() const { return n_; }
    std::size_t color_count() const { return m_; }

    std::span<const NodeId> successors(NodeId u, ColorId c) const {
        const std::size_t slot = static_cast<std::size_t>(c) * n_ + u;
        return {targets_.data() + offsets_[slot], targets_.data() + offsets_[slot + 1]};
    }
    const NodeSet& successor_set(NodeId u, ColorId c) const {
        return masks_[static_cast<std::size_t>(c) * n_ + u];
    }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
    std::vector<NodeSet> masks_;
};

/// Nodes at which paths of every sufficiently large length end: the nodes
/// reachable (colors ignored) from some node lying on a directed cycle.
NodeSet asymptotically_reachable(const ColoredDigraph& graph);

/// Replaces unobservable transitions by colored shortcuts: for every colored
/// edge (h, i, c) and every j reachable from i through one or more
/// unobservable edges, (h, j, c) is added. The result has no unobservable
/// edges; original colored edges keep their order and new ones are appended.
ColoredDigraph epsilon_closure(const ColoredDigraph& graph);

/// Uncolored view of a graph: distinct (from, to) pairs, sorted.
struct Topology {
    std::vector<std::string> node_labels;
    std::vector<Arc> arcs;

    std::size_t node_count() const { return node_labels.size(); }

    friend bool operator==(const Topology&, const Topology&) = default;
};

/// Union of colored and unobservable transitions with colors dropped.
Topology topology_of(const ColoredDigraph& graph);

/// Topology encoded as a color-free graph (arcs become unobservable edges).
ColoredDigraph uncolored_graph(const Topology& topology);

/// Parses a word from color labels. Labels may be comma-separated; without
/// commas each character is one label (requires single-character labels).
Word parse_word(const ColoredDigraph& graph, std::string_view text);

/// Inverse of parse_word: concatenated when every label is one character.
std::string format_word(const ColoredDigraph& graph, const Word& word);

void check_word(const ColoredDigraph& graph, const Word& word);

}  // namespace observa
