#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace observa {

/// Compressed sparse row adjacency over vertices 0..size-1.
class Csr {
public:
    Csr() : offsets_{0} {}

    /// Builds from an unsorted edge list; parallel edges are merged.
    static Csr from_edges(std::size_t size, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    /// Builds from per-vertex successor lists already in final order.
    Csr(std::vector<std::size_t> offsets, std::vector<std::uint32_t> targets)
        : offsets_(std::move(offsets)), targets_(std::move(targets)) {}

    std::size_t size() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return targets_.size(); }

    std::span<const std::uint32_t> successors(std::uint32_t v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t offset(std::uint32_t v) const { return offsets_[v]; }

    Csr reversed() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> targets_;
};

/// Tarjan's algorithm, iterative. Components come out in reverse topological
/// order of the condensation; vertices inside a component are sorted.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(const Csr& graph);

/// Vertices lying on at least one directed cycle (self-loops count).
std::vector<bool> on_cycle(const Csr& graph);

/// Vertices reachable (zero or more steps) from any seed.
std::vector<bool> reachable_from(const Csr& graph, const std::vector<bool>& seeds);

/// Kahn's algorithm restricted to vertices with active[v]; nullopt if the
/// induced subgraph has a cycle. Ties are broken by smallest index.
std::optional<std::vector<std::uint32_t>> topological_order(const Csr& graph,
                                                            const std::vector<bool>& active);
std::optional<std::vector<std::uint32_t>> topological_order(const Csr& graph);

/// A shortest cycle through the lowest-index vertex of the first nontrivial
/// component (or any self-loop, which always wins). Returns the vertex
/// sequence v0, v1, ..., vk-1 with an edge vk-1 -> v0. Empty if acyclic.
std::vector<std::uint32_t> find_short_cycle(const Csr& graph);

/// Longest path (edge count) ending at each active vertex of an acyclic
/// induced subgraph, given its topological order.
std::vector<std::size_t> longest_path_lengths(const Csr& graph, std::span<const std::uint32_t> order,
                                              const std::vector<bool>& active);

}  // namespace observa
