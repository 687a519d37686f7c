#include "observa/pair_graph.hpp"

#include <algorithm>
#include <utility>

namespace observa {

const char* to_string(PairGraphKind kind) {
    switch (kind) {
        case PairGraphKind::g2: return "G2";
        case PairGraphKind::g2_tilde: return "G2tilde";
        case PairGraphKind::augmented: return "H";
    }
    return "?";
}

PairGraph::PairGraph(const ColoredDigraph& base, PairGraphKind kind) : kind_(kind), n_(base.node_count()) {
    const TransitionTable table(base);
    const std::size_t m = base.color_count();
    const std::size_t vertices = n_ * n_;

    std::vector<std::size_t> offsets(vertices + 1, 0);
    std::vector<std::uint32_t> targets;
    color_offsets_.push_back(0);

    std::vector<std::pair<std::uint32_t, ColorId>> scratch;
    std::vector<NodeId> merged;
    for (NodeId v1 = 0; v1 < n_; ++v1) {
        for (NodeId v2 = 0; v2 < n_; ++v2) {
            const std::uint32_t source = index({v1, v2});
            scratch.clear();
            if (contains({v1, v2})) {
                for (ColorId c = 0; c < m; ++c) {
                    const auto s1 = table.successors(v1, c);
                    const auto s2 = table.successors(v2, c);
                    if (kind_ == PairGraphKind::g2_tilde) {
                        merged.clear();
                        std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(merged));
                        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
                        for (NodeId a : merged)
                            for (NodeId b : merged)
                                if (a != b) scratch.emplace_back(index({a, b}), c);
                    } else {
                        for (NodeId a : s1)
                            for (NodeId b : s2)
                                if (kind_ == PairGraphKind::augmented || a != b) scratch.emplace_back(index({a, b}), c);
                    }
                }
                std::sort(scratch.begin(), scratch.end());
                scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
            }
            for (std::size_t i = 0; i < scratch.size(); ++i) {
                if (i == 0 || scratch[i].first != scratch[i - 1].first) {
                    if (i != 0) color_offsets_.push_back(colors_.size());
                    targets.push_back(scratch[i].first);
                }
                colors_.push_back(scratch[i].second);
            }
            if (!scratch.empty()) color_offsets_.push_back(colors_.size());
            offsets[source + 1] = targets.size();
        }
    }
    adjacency_ = Csr(std::move(offsets), std::move(targets));
}

std::size_t PairGraph::node_count() const {
    return kind_ == PairGraphKind::augmented ? n_ * n_ : n_ * n_ - n_;
}

bool PairGraph::has_edge(PairNode from, PairNode to) const { return !edge_colors(from, to).empty(); }

std::span<const ColorId> PairGraph::edge_colors(PairNode from, PairNode to) const {
    if (from.first >= n_ || from.second >= n_ || to.first >= n_ || to.second >= n_) return {};
    const std::uint32_t source = index(from);
    const auto succ = adjacency_.successors(source);
    const auto it = std::lower_bound(succ.begin(), succ.end(), index(to));
    if (it == succ.end() || *it != index(to)) return {};
    const std::size_t entry = adjacency_.offset(source) + static_cast<std::size_t>(it - succ.begin());
    return {colors_.data() + color_offsets_[entry], colors_.data() + color_offsets_[entry + 1]};
}

ColoredDigraph PairGraph::to_colored(const ColoredDigraph& base) const {
    ColoredDigraph g;
    g.color_labels = base.color_labels;
    std::vector<NodeId> id_of(n_ * n_, 0);
    for (std::uint32_t v = 0; v < n_ * n_; ++v) {
        const PairNode p = pair(v);
        if (!contains(p)) continue;
        id_of[v] = g.add_node(base.node_labels[p.first] + "|" + base.node_labels[p.second]);
    }
    for (std::uint32_t v = 0; v < n_ * n_; ++v) {
        const auto succ = adjacency_.successors(v);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            const std::size_t entry = adjacency_.offset(v) + k;
            for (std::size_t c = color_offsets_[entry]; c < color_offsets_[entry + 1]; ++c)
                g.add_edge(id_of[v], id_of[succ[k]], colors_[c]);
        }
    }
    return g;
}

}  // namespace observa
