#include "observa/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "observa/tracker.hpp"

namespace observa {

namespace {

enum class Keep {
    nonempty,   // any word still allowing a path may turn bad later
    ambiguous,  // only words whose every prefix is ambiguous
};

struct Layer {
    std::vector<NodeSet> sets;
    std::vector<std::size_t> parent;
    std::vector<ColorId> color;
};

class LayeredSearch {
public:
    LayeredSearch(const ColoredDigraph& graph, Keep keep, const OracleBudget& budget)
        : table_(graph), keep_(keep), budget_(budget) {}

    Layer start() const {
        Layer l;
        l.sets.push_back(NodeSet::full(table_.node_count()));
        l.parent.push_back(0);
        l.color.push_back(0);
        return l;
    }

    // Distinct δ-sets one symbol further, in (parent, color) discovery order.
    Layer next(const Layer& previous) {
        Layer out;
        std::unordered_map<NodeSet, std::size_t, NodeSetHash> index;
        for (std::size_t i = 0; i < previous.sets.size(); ++i) {
            for (ColorId c = 0; c < table_.color_count(); ++c) {
                if (++expansions_ > budget_.max_word_count)
                    throw BudgetExceeded("oracle exceeded its word-count budget");
                NodeSet s = step(table_, previous.sets[i], c);
                const std::size_t size = s.count();
                if (size == 0 || (keep_ == Keep::ambiguous && size < 2)) continue;
                if (index.emplace(s, out.sets.size()).second) {
                    out.sets.push_back(std::move(s));
                    out.parent.push_back(i);
                    out.color.push_back(c);
                }
            }
        }
        return out;
    }

private:
    TransitionTable table_;
    Keep keep_;
    OracleBudget budget_;
    std::uint64_t expansions_ = 0;
};

bool has_ambiguous(const std::vector<NodeSet>& sets) {
    return std::any_of(sets.begin(), sets.end(), [](const NodeSet& s) { return s.count() >= 2; });
}

void check_length(std::size_t length, const OracleBudget& budget) {
    if (length > budget.max_word_length)
        throw BudgetExceeded("oracle needs words of length " + std::to_string(length) + " but the budget allows " +
                             std::to_string(budget.max_word_length));
}

// Whether some surviving word of exactly `length` symbols leaves an ambiguous
// δ-set. Frontiers are memoized by content: once a frontier repeats, the
// sequence of frontiers is periodic and the answer is read off the cycle.
bool ambiguous_at(const ColoredDigraph& graph, std::size_t length, Keep keep, const OracleBudget& budget) {
    check_length(length, budget);
    LayeredSearch search(graph, keep, budget);
    Layer layer = search.start();
    std::map<std::vector<NodeSet>, std::size_t> seen;
    std::vector<std::vector<NodeSet>> history;
    for (std::size_t depth = 0;; ++depth) {
        std::vector<NodeSet> key = layer.sets;
        std::sort(key.begin(), key.end());
        if (depth == length) return has_ambiguous(key);
        if (const auto it = seen.find(key); it != seen.end()) {
            const std::size_t first = it->second;
            const std::size_t period = depth - first;
            return has_ambiguous(history[first + (length - first) % period]);
        }
        seen.emplace(key, depth);
        history.push_back(std::move(key));
        layer = search.next(layer);
        if (layer.sets.empty()) return false;
    }
}

std::optional<WordWitness> longest(const ColoredDigraph& graph, std::size_t bound, Keep keep,
                                   const OracleBudget& budget) {
    check_length(bound, budget);
    if (graph.node_count() < 2) return std::nullopt;
    LayeredSearch search(graph, keep, budget);
    std::vector<Layer> layers{search.start()};
    std::size_t best_depth = 0;
    std::size_t best_index = 0;
    for (std::size_t depth = 1; depth <= bound; ++depth) {
        Layer next = search.next(layers.back());
        if (next.sets.empty()) break;
        for (std::size_t i = 0; i < next.sets.size(); ++i) {
            if (next.sets[i].count() >= 2) {
                best_depth = depth;
                best_index = i;
                break;
            }
        }
        layers.push_back(std::move(next));
    }
    WordWitness w;
    w.length = best_depth;
    w.word.resize(best_depth);
    std::size_t index = best_index;
    for (std::size_t depth = best_depth; depth > 0; --depth) {
        w.word[depth - 1] = layers[depth].color[index];
        index = layers[depth].parent[index];
    }
    return w;
}

class WordEnumerator {
public:
    WordEnumerator(const ColoredDigraph& graph, const OracleBudget& budget) : graph_(graph), budget_(budget) {}

    // Calls visit(word) for every word of `length`; stops when it returns true.
    template <class F>
    bool any(std::size_t length, F&& visit) {
        Word word(length, 0);
        return recurse(word, 0, visit);
    }

private:
    template <class F>
    bool recurse(Word& word, std::size_t position, F& visit) {
        if (position == word.size()) {
            if (++count_ > budget_.max_word_count) throw BudgetExceeded("oracle exceeded its word-count budget");
            return visit(word);
        }
        for (ColorId c = 0; c < graph_.color_count(); ++c) {
            word[position] = c;
            if (recurse(word, position + 1, visit)) return true;
        }
        return false;
    }

    const ColoredDigraph& graph_;
    OracleBudget budget_;
    std::uint64_t count_ = 0;
};

}  // namespace

bool oracle_is_observable(const ColoredDigraph& graph, const OracleBudget& budget) {
    const std::size_t n = graph.node_count();
    return !ambiguous_at(graph, n * n - n, Keep::nonempty, budget);
}

bool oracle_is_partly_observable(const ColoredDigraph& graph, const OracleBudget& budget) {
    const std::size_t n = graph.node_count();
    return !ambiguous_at(graph, n * n, Keep::ambiguous, budget);
}

std::optional<WordWitness> oracle_longest_bad_word(const ColoredDigraph& graph, std::size_t bound,
                                                   const OracleBudget& budget) {
    return longest(graph, bound, Keep::nonempty, budget);
}

std::optional<WordWitness> oracle_longest_ambiguous_word(const ColoredDigraph& graph, std::size_t bound,
                                                         const OracleBudget& budget) {
    return longest(graph, bound, Keep::ambiguous, budget);
}

bool oracle_is_observable_unpruned(const ColoredDigraph& graph, const OracleBudget& budget) {
    const std::size_t n = graph.node_count();
    const std::size_t length = n * n - n;
    check_length(length, budget);
    WordEnumerator words(graph, budget);
    const bool bad = words.any(length, [&](const Word& w) { return track(graph, w).back().possible.count() >= 2; });
    return !bad;
}

bool oracle_is_partly_observable_unpruned(const ColoredDigraph& graph, const OracleBudget& budget) {
    const std::size_t n = graph.node_count();
    if (n <= 1) return true;
    const std::size_t length = n * n;
    check_length(length, budget);
    WordEnumerator words(graph, budget);
    const bool bad = words.any(length, [&](const Word& w) {
        const auto states = track(graph, w);
        return std::all_of(states.begin() + 1, states.end(),
                           [](const TrackState& s) { return s.possible.count() >= 2; });
    });
    return !bad;
}

}  // namespace observa
