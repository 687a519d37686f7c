#pragma once

// Brute-force reference for the coloring solvers: every k^targets assignment.

#include <optional>
#include <vector>

#include "observa/analysis.hpp"
#include "observa/design.hpp"

namespace support {

inline observa::ColoredDigraph colored_by(const observa::Topology& t, observa::DesignTarget target,
                                          const std::vector<observa::ColorId>& colors, std::size_t k) {
    observa::ColoredDigraph g;
    g.node_labels = t.node_labels;
    for (std::size_t c = 0; c < k; ++c) g.color_labels.push_back("k" + std::to_string(c));
    for (std::size_t i = 0; i < t.arcs.size(); ++i) {
        const auto& a = t.arcs[i];
        g.edges.push_back({a.from, a.to, target == observa::DesignTarget::nodes ? colors[a.to] : colors[i]});
    }
    return g;
}

inline bool passes(const observa::ColoredDigraph& g, observa::DesignGoal goal) {
    return goal == observa::DesignGoal::observable ? observa::is_observable(g).holds
                                                   : observa::is_partly_observable(g).holds;
}

// Visits assignments in lexicographic order along `order` (slot order[0]
// varies slowest); stops when visit returns true.
template <class F>
bool each_assignment(std::size_t slots, std::size_t k, const std::vector<std::size_t>& order, F&& visit) {
    std::vector<observa::ColorId> colors(slots, 0);
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == slots) return visit(colors);
        for (std::size_t c = 0; c < k; ++c) {
            colors[order[pos]] = static_cast<observa::ColorId>(c);
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool exhaustive_feasible(const observa::Topology& t, observa::DesignTarget target, observa::DesignGoal goal,
                                std::size_t k) {
    const std::size_t slots = target == observa::DesignTarget::nodes ? t.node_count() : t.arcs.size();
    std::vector<std::size_t> order(slots);
    for (std::size_t i = 0; i < slots; ++i) order[i] = i;
    return each_assignment(slots, k, order,
                           [&](const std::vector<observa::ColorId>& c) { return passes(colored_by(t, target, c, k), goal); });
}

// Canonical: along `order`, colors appear as 0, then 1, ... without gaps.
inline bool canonical(const std::vector<observa::ColorId>& colors, const std::vector<std::size_t>& order) {
    observa::ColorId next = 0;
    for (std::size_t slot : order) {
        if (colors[slot] > next) return false;
        if (colors[slot] == next) ++next;
    }
    return true;
}

}  // namespace support
