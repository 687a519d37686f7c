#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "observa/colored_digraph.hpp"
#include "observa/graph_algorithms.hpp"

namespace observa {

enum class PairGraphKind {
    /// Ordered pairs of distinct nodes; (v1,v2) -> (w1,w2) when one color
    /// allows both v1 -> w1 and v2 -> w2.
    g2,
    /// g2 plus (v1,v2) -> (w1,w2) when one color allows an edge from v1 or v2
    /// to w1 and an edge from v1 or v2 to w2.
    g2_tilde,
    /// g2's edge rule over all ordered pairs, diagonal included.
    augmented,
};

const char* to_string(PairGraphKind kind);

struct PairNode {
    NodeId first = 0;
    NodeId second = 0;

    bool diagonal() const { return first == second; }
    friend bool operator==(const PairNode&, const PairNode&) = default;
};

/// Auxiliary graph over ordered node pairs. Vertex ids are first * n + second
/// for every kind; for g2 and g2_tilde the diagonal ids exist in the index
/// space but are isolated and not part of the graph.
class PairGraph {
public:
    PairGraph(const ColoredDigraph& base, PairGraphKind kind);

    PairGraphKind kind() const { return kind_; }
    std::size_t base_size() const { return n_; }

    std::uint32_t index(PairNode p) const { return static_cast<std::uint32_t>(p.first * n_ + p.second); }
    PairNode pair(std::uint32_t id) const {
        return {static_cast<NodeId>(id / n_), static_cast<NodeId>(id % n_)};
    }
    bool contains(PairNode p) const { return kind_ == PairGraphKind::augmented || !p.diagonal(); }

    /// Number of pair nodes that belong to the graph.
    std::size_t node_count() const;
    std::size_t edge_count() const { return adjacency_.edge_count(); }

    const Csr& adjacency() const { return adjacency_; }

    bool has_edge(PairNode from, PairNode to) const;
    /// Colors witnessing the edge, ascending; empty when there is no edge.
    std::span<const ColorId> edge_colors(PairNode from, PairNode to) const;

    /// Pair graph as a colored graph with nodes labeled "v1|v2".
    ColoredDigraph to_colored(const ColoredDigraph& base) const;

private:
    PairGraphKind kind_;
    std::size_t n_;
    Csr adjacency_;
    std::vector<std::size_t> color_offsets_;  // per adjacency entry, plus sentinel
    std::vector<ColorId> colors_;
};

}  // namespace observa
