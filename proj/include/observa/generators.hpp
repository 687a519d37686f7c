#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "observa/colored_digraph.hpp"

namespace observa {

/// Simple undirected graph used as a reduction source.
class UndirectedGraph {
public:
    explicit UndirectedGraph(std::size_t n = 0) : n_(n) {}
    UndirectedGraph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges);

    static UndirectedGraph complete(std::size_t n);
    static UndirectedGraph cycle(std::size_t n);
    /// Triangle 0-1-2 with a pendant vertex 3 attached to 2.
    static UndirectedGraph paw();

    /// Adds {u, v}; throws GraphError on self-loops, duplicates or unknown nodes.
    void add_edge(NodeId u, NodeId v);

    std::size_t node_count() const { return n_; }
    /// Edges as (smaller, larger), sorted lexicographically.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    bool adjacent(NodeId u, NodeId v) const;
    bool connected() const;

    /// Triangles as sorted node triples, lexicographic.
    std::vector<std::array<NodeId, 3>> triangles() const;

private:
    std::size_t n_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// Output of a reduction: an uncolored digraph plus per-node roles.
///
/// node_tag ties a node back to the source: the source vertex for real
/// nodes, the source edge index for nodes built per edge, the triangle index
/// for triangle nodes, the level for connector nodes, and -1 otherwise.
struct ReductionArtifact {
    Topology output;
    std::vector<std::string> node_roles;  // indexed by output node
    std::vector<std::int64_t> node_tag;
    std::map<std::string, std::size_t> metadata;
};

/// Family on nodes 1..n whose longest ambiguous word grows quadratically.
/// Colors A1, B1, A2, B2, ...; A_i has edges i+1->i+2, ..., n-1->n and i->i;
/// B_i has edges i->i+1 and n->i+2. Requires n >= 3.
ColoredDigraph worst_case_family(std::size_t n);

/// The word A1^(n-2) B1 A2^(n-3) B2 ... A(n-2) B(n-2) of length n(n-1)/2 - 1.
Word worst_case_word(const ColoredDigraph& family, std::size_t n);

/// Fixed instances: "loop1", "twocyc", "chain", "amb", "shift", "star(k)"
/// (also accepted as "stark" or "star k").
ColoredDigraph named_example(std::string_view name);
ColoredDigraph star_graph(std::size_t leaves);

/// Each triple (u, v, c) is included independently with the given
/// probability. Frozen algorithm: one std::mt19937_64 seeded with `seed`;
/// triples visited in (u, v, c) lexicographic order; for each, one draw x and
/// the triple is kept iff (x >> 11) * 2^-53 < probability.
ColoredDigraph random_colored_graph(std::size_t n, std::size_t m, double probability, std::uint64_t seed);

/// Node-coloring hardness construction from a graph with at least one edge.
ReductionArtifact reduce_3colorability(const UndirectedGraph& source);

/// Edge-coloring hardness construction from a graph with at least one triangle.
ReductionArtifact reduce_monochromatic_triangle(const UndirectedGraph& source);

/// Colors the 3-colorability reduction from a proper 3-coloring of its
/// source (values 0..2): real nodes keep their color, the nodes attached to
/// edges get colors 1 and 0, the tail nodes color 2. Node colors are carried
/// by incoming edges. Color labels are R, B, G for 0, 1, 2.
ColoredDigraph color_3colorability_reduction(const ReductionArtifact& artifact, const UndirectedGraph& source,
                                             const std::vector<ColorId>& node_coloring);

/// Colors the triangle reduction from a 2-coloring of the source edges
/// (values 0 = S, 1 = D, indexed like UndirectedGraph::edges()) in which no
/// triangle is monochromatic.
ColoredDigraph color_triangle_reduction(const ReductionArtifact& artifact, const UndirectedGraph& source,
                                        const std::vector<ColorId>& edge_coloring);

}  // namespace observa
