#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "observa/colored_digraph.hpp"
#include "observa/node_set.hpp"

namespace observa {

/// Set of positions compatible with the first `step` observed colors.
struct TrackState {
    NodeSet possible;
    std::size_t step = 0;
};

using PathCount = boost::multiprecision::cpp_int;

/// Entry (i, j) counts the paths from i to j whose color sequence is `word`.
struct CountMatrix {
    std::size_t size = 0;
    std::vector<PathCount> entries;  // row-major
    Word word;

    const PathCount& at(NodeId i, NodeId j) const { return entries[static_cast<std::size_t>(i) * size + j]; }
    /// Nodes whose column has a nonzero entry in some row of `rows`.
    NodeSet reachable_columns(const NodeSet& rows) const;
};

/// Successors of `state` along edges of `color`.
NodeSet step(const TransitionTable& table, const NodeSet& state, ColorId color);
NodeSet step(const ColoredDigraph& graph, const NodeSet& state, ColorId color);

/// States for every prefix of `word`, starting with `start` at step 0.
std::vector<TrackState> track(const ColoredDigraph& graph, const Word& word, const NodeSet& start);
std::vector<TrackState> track(const ColoredDigraph& graph, const Word& word);

/// Product of the per-color adjacency matrices along `word`; identity for the
/// empty word.
CountMatrix path_count_matrix(const ColoredDigraph& graph, const Word& word);

/// Steps t in 1..|word| after which at most one position remains possible,
/// starting from every node.
std::vector<std::size_t> localization_times(const ColoredDigraph& graph, const Word& word);

}  // namespace observa
