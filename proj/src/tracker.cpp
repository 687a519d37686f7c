#include "observa/tracker.hpp"

namespace observa {

NodeSet CountMatrix::reachable_columns(const NodeSet& rows) const {
    NodeSet out(size);
    rows.for_each([&](NodeId i) {
        for (NodeId j = 0; j < size; ++j)
            if (at(i, j) != 0) out.insert(j);
    });
    return out;
}

NodeSet step(const TransitionTable& table, const NodeSet& state, ColorId color) {
    if (color >= table.color_count()) throw GraphError("undeclared color " + std::to_string(color));
    NodeSet next(table.node_count());
    state.for_each([&](NodeId p) { next |= table.successor_set(p, color); });
    return next;
}

NodeSet step(const ColoredDigraph& graph, const NodeSet& state, ColorId color) {
    return step(TransitionTable(graph), state, color);
}

std::vector<TrackState> track(const ColoredDigraph& graph, const Word& word, const NodeSet& start) {
    check_word(graph, word);
    const TransitionTable table(graph);
    std::vector<TrackState> states;
    states.reserve(word.size() + 1);
    states.push_back({start, 0});
    for (std::size_t t = 0; t < word.size(); ++t)
        states.push_back({step(table, states.back().possible, word[t]), t + 1});
    return states;
}

std::vector<TrackState> track(const ColoredDigraph& graph, const Word& word) {
    return track(graph, word, NodeSet::full(graph.node_count()));
}

CountMatrix path_count_matrix(const ColoredDigraph& graph, const Word& word) {
    check_word(graph, word);
    const std::size_t n = graph.node_count();
    const TransitionTable table(graph);
    CountMatrix result;
    result.size = n;
    result.word = word;
    result.entries.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) result.entries[i * n + i] = 1;

    std::vector<PathCount> next(n * n);
    for (ColorId c : word) {
        std::fill(next.begin(), next.end(), PathCount(0));
        // next = current * A_c
        for (std::size_t i = 0; i < n; ++i) {
            for (NodeId p = 0; p < n; ++p) {
                const PathCount& count = result.entries[i * n + p];
                if (count == 0) continue;
                for (NodeId q : table.successors(p, c)) next[i * n + q] += count;
            }
        }
        result.entries.swap(next);
    }
    return result;
}

std::vector<std::size_t> localization_times(const ColoredDigraph& graph, const Word& word) {
    std::vector<std::size_t> times;
    for (const TrackState& s : track(graph, word)) {
        if (s.step >= 1 && s.possible.count() <= 1) times.push_back(s.step);
    }
    return times;
}

}  // namespace observa
