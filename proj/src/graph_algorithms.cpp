#include "observa/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace observa {

Csr Csr::from_edges(std::size_t size, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::size_t> offsets(size + 1, 0);
    for (const auto& [u, v] : edges) ++offsets[u + 1];
    for (std::size_t i = 0; i < size; ++i) offsets[i + 1] += offsets[i];
    std::vector<std::uint32_t> targets;
    targets.reserve(edges.size());
    for (const auto& e : edges) targets.push_back(e.second);
    return Csr(std::move(offsets), std::move(targets));
}

Csr Csr::reversed() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(edge_count());
    for (std::uint32_t u = 0; u < size(); ++u)
        for (std::uint32_t v : successors(u)) edges.emplace_back(v, u);
    return from_edges(size(), std::move(edges));
}

std::vector<std::vector<std::uint32_t>> strongly_connected_components(const Csr& graph) {
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = graph.size();
    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<std::uint32_t>> components;

    struct Frame {
        std::uint32_t vertex;
        std::size_t next_edge;
    };
    std::vector<Frame> call_stack;
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const std::uint32_t v = frame.vertex;
            const auto succ = graph.successors(v);
            if (frame.next_edge < succ.size()) {
                const std::uint32_t w = succ[frame.next_edge++];
                if (index[w] == unvisited) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }
            if (lowlink[v] == index[v]) {
                std::vector<std::uint32_t> component;
                std::uint32_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const std::uint32_t parent = call_stack.back().vertex;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return components;
}

std::vector<bool> on_cycle(const Csr& graph) {
    std::vector<bool> result(graph.size(), false);
    for (const auto& component : strongly_connected_components(graph)) {
        if (component.size() > 1) {
            for (std::uint32_t v : component) result[v] = true;
        } else {
            const std::uint32_t v = component.front();
            const auto succ = graph.successors(v);
            if (std::find(succ.begin(), succ.end(), v) != succ.end()) result[v] = true;
        }
    }
    return result;
}

std::vector<bool> reachable_from(const Csr& graph, const std::vector<bool>& seeds) {
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t v = 0; v < graph.size(); ++v) {
        if (seeds[v]) {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const std::uint32_t v = queue.back();
        queue.pop_back();
        for (std::uint32_t w : graph.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

std::optional<std::vector<std::uint32_t>> topological_order(const Csr& graph,
                                                            const std::vector<bool>& active) {
    const std::size_t n = graph.size();
    std::vector<std::uint32_t> indegree(n, 0);
    std::size_t active_count = 0;
    for (std::uint32_t u = 0; u < n; ++u) {
        if (!active[u]) continue;
        ++active_count;
        for (std::uint32_t v : graph.successors(u))
            if (active[v]) ++indegree[v];
    }
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    for (std::uint32_t u = 0; u < n; ++u)
        if (active[u] && indegree[u] == 0) ready.push(u);

    std::vector<std::uint32_t> order;
    order.reserve(active_count);
    while (!ready.empty()) {
        const std::uint32_t u = ready.top();
        ready.pop();
        order.push_back(u);
        for (std::uint32_t v : graph.successors(u)) {
            if (active[v] && --indegree[v] == 0) ready.push(v);
        }
    }
    if (order.size() != active_count) return std::nullopt;
    return order;
}

std::optional<std::vector<std::uint32_t>> topological_order(const Csr& graph) {
    return topological_order(graph, std::vector<bool>(graph.size(), true));
}

std::vector<std::uint32_t> find_short_cycle(const Csr& graph) {
    for (std::uint32_t v = 0; v < graph.size(); ++v) {
        for (std::uint32_t w : graph.successors(v))
            if (w == v) return {v};
    }
    const auto components = strongly_connected_components(graph);
    const std::vector<std::uint32_t>* chosen = nullptr;
    for (const auto& c : components) {
        if (c.size() > 1 && (chosen == nullptr || c.front() < chosen->front())) chosen = &c;
    }
    if (chosen == nullptr) return {};

    std::vector<bool> inside(graph.size(), false);
    for (std::uint32_t v : *chosen) inside[v] = true;

    // BFS from the start vertex back to itself within its component.
    const std::uint32_t start = chosen->front();
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> parent(graph.size(), none);
    std::deque<std::uint32_t> queue{start};
    std::uint32_t last = none;
    while (!queue.empty() && last == none) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t w : graph.successors(v)) {
            if (!inside[w]) continue;
            if (w == start) {
                last = v;
                break;
            }
            if (parent[w] == none) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t v = last; v != start; v = parent[v]) cycle.push_back(v);
    cycle.push_back(start);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

std::vector<std::size_t> longest_path_lengths(const Csr& graph, std::span<const std::uint32_t> order,
                                              const std::vector<bool>& active) {
    std::vector<std::size_t> length(graph.size(), 0);
    for (std::uint32_t u : order) {
        for (std::uint32_t v : graph.successors(u)) {
            if (active[v]) length[v] = std::max(length[v], length[u] + 1);
        }
    }
    return length;
}

}  // namespace observa
