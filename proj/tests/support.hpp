#pragma once

// Corpora and naive reference computations shared by the unit tests and the
// acceptance runner. Nothing here uses the library's transition tables or
// pair graphs; δ is recomputed from the raw edge list.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "observa/colored_digraph.hpp"
#include "observa/generators.hpp"
#include "observa/serialization.hpp"

namespace support {

using observa::ColorId;
using observa::ColoredDigraph;
using observa::NodeId;
using observa::Word;

using Positions = std::set<NodeId>;

inline ColoredDigraph from_mask(std::size_t n, std::size_t m, std::uint64_t mask) {
    std::vector<std::string> colors;
    for (std::size_t c = 0; c < m; ++c) colors.push_back(std::string(1, static_cast<char>('a' + c)));
    ColoredDigraph g = ColoredDigraph::with_nodes(n, colors);
    std::size_t bit = 0;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
            for (ColorId c = 0; c < m; ++c, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v, c);
    return g;
}

// Every colored digraph on n <= max_n nodes with m colors (all edge subsets).
template <class F>
void for_each_exhaustive(std::size_t max_n, std::size_t m, F&& visit) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * n * m);
        for (std::uint64_t mask = 0; mask < total; ++mask) visit(from_mask(n, m, mask));
    }
}

// Seeded graphs with 1 <= n <= 5 and 1 <= m <= 3.
inline std::vector<ColoredDigraph> random_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double densities[] = {0.1, 0.15, 0.2, 0.3, 0.4, 0.5};
    std::vector<ColoredDigraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng() % 5;
        const std::size_t m = 1 + rng() % 3;
        const double p = densities[rng() % 6];
        out.push_back(observa::random_colored_graph(n, m, p, rng()));
    }
    return out;
}

inline std::string graph_summary(const ColoredDigraph& g) { return observa::graph_to_json(g).dump(); }

inline Positions all_positions(const ColoredDigraph& g) {
    Positions s;
    for (NodeId v = 0; v < g.node_count(); ++v) s.insert(v);
    return s;
}

inline Positions naive_step(const ColoredDigraph& g, const Positions& from, ColorId c) {
    Positions out;
    for (const auto& e : g.edges)
        if (e.color == c && from.count(e.from)) out.insert(e.to);
    return out;
}

inline Positions naive_delta(const ColoredDigraph& g, const Word& w) {
    Positions s = all_positions(g);
    for (ColorId c : w) s = naive_step(g, s, c);
    return s;
}

// Depth-first walk over all words up to max_length, skipping words whose δ is
// empty (every extension stays empty). visit(word, δ) sees each nonempty one.
template <class F>
void walk_words(const ColoredDigraph& g, std::size_t max_length, F&& visit) {
    Word word;
    auto rec = [&](auto&& self, const Positions& s) -> void {
        visit(word, s);
        if (word.size() == max_length) return;
        for (ColorId c = 0; c < g.color_count(); ++c) {
            Positions next = naive_step(g, s, c);
            if (next.empty()) continue;
            word.push_back(c);
            self(self, next);
            word.pop_back();
        }
    };
    rec(rec, all_positions(g));
}

// Longest word of length <= max_length leaving >= 2 positions, or -1.
inline long naive_longest_bad(const ColoredDigraph& g, std::size_t max_length) {
    long best = -1;
    walk_words(g, max_length, [&](const Word& w, const Positions& s) {
        if (s.size() >= 2) best = std::max(best, static_cast<long>(w.size()));
    });
    return best;
}

// Longest word of length <= max_length all of whose nonempty prefixes leave
// >= 2 positions, or -1 when n < 2.
inline long naive_longest_ambiguous(const ColoredDigraph& g, std::size_t max_length) {
    if (g.node_count() < 2) return -1;
    long best = 0;
    Word word;
    auto rec = [&](auto&& self, const Positions& s) -> void {
        best = std::max(best, static_cast<long>(word.size()));
        if (word.size() == max_length) return;
        for (ColorId c = 0; c < g.color_count(); ++c) {
            Positions next = naive_step(g, s, c);
            if (next.size() < 2) continue;
            word.push_back(c);
            self(self, next);
            word.pop_back();
        }
    };
    rec(rec, all_positions(g));
    return best;
}

// Observable per definition, checked on words of exactly `length` symbols.
inline bool naive_observable(const ColoredDigraph& g, std::size_t length) {
    bool ok = true;
    walk_words(g, length, [&](const Word& w, const Positions& s) {
        if (w.size() == length && s.size() >= 2) ok = false;
    });
    return ok;
}

}  // namespace support
