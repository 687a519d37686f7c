#include "observa/generators.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace observa {

// ---------------------------------------------------------------------------
// UndirectedGraph

UndirectedGraph::UndirectedGraph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges) : n_(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

UndirectedGraph UndirectedGraph::complete(std::size_t n) {
    UndirectedGraph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

UndirectedGraph UndirectedGraph::cycle(std::size_t n) {
    UndirectedGraph g(n);
    for (NodeId u = 0; u < n; ++u) g.add_edge(u, static_cast<NodeId>((u + 1) % n));
    return g;
}

UndirectedGraph UndirectedGraph::paw() { return UndirectedGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

void UndirectedGraph::add_edge(NodeId u, NodeId v) {
    if (u >= n_ || v >= n_) throw GraphError("undirected edge references an unknown node");
    if (u == v) throw GraphError("undirected graphs here have no self-loops");
    const std::pair<NodeId, NodeId> e{std::min(u, v), std::max(u, v)};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) throw GraphError("duplicate undirected edge");
    edges_.insert(it, e);
}

bool UndirectedGraph::adjacent(NodeId u, NodeId v) const {
    return std::binary_search(edges_.begin(), edges_.end(), std::pair{std::min(u, v), std::max(u, v)});
}

bool UndirectedGraph::connected() const {
    if (n_ == 0) return true;
    std::vector<bool> seen(n_, false);
    std::vector<NodeId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges_) {
            const NodeId other = a == u ? b : (b == u ? a : u);
            if (other != u && !seen[other]) {
                seen[other] = true;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

std::vector<std::array<NodeId, 3>> UndirectedGraph::triangles() const {
    std::vector<std::array<NodeId, 3>> out;
    for (NodeId a = 0; a < n_; ++a)
        for (NodeId b = a + 1; b < n_; ++b)
            for (NodeId c = b + 1; c < n_; ++c)
                if (adjacent(a, b) && adjacent(a, c) && adjacent(b, c)) out.push_back({a, b, c});
    return out;
}

// ---------------------------------------------------------------------------
// Families and named instances

ColoredDigraph worst_case_family(std::size_t n) {
    if (n < 3) throw GraphError("worst-case family needs n >= 3");
    ColoredDigraph g;
    for (std::size_t v = 1; v <= n; ++v) g.add_node(std::to_string(v));
    auto node = [](std::size_t one_based) { return static_cast<NodeId>(one_based - 1); };
    for (std::size_t i = 1; i <= n - 2; ++i) {
        const ColorId a = g.add_color("A" + std::to_string(i));
        const ColorId b = g.add_color("B" + std::to_string(i));
        for (std::size_t k = i + 1; k + 1 <= n; ++k) g.add_edge(node(k), node(k + 1), a);
        g.add_edge(node(i), node(i), a);
        g.add_edge(node(i), node(i + 1), b);
        g.add_edge(node(n), node(i + 2), b);
    }
    return g;
}

Word worst_case_word(const ColoredDigraph& family, std::size_t n) {
    Word w;
    for (std::size_t i = 1; i <= n - 2; ++i) {
        const auto a = family.find_color("A" + std::to_string(i));
        const auto b = family.find_color("B" + std::to_string(i));
        if (!a || !b) throw GraphError("graph is not a worst-case family instance");
        w.insert(w.end(), n - 1 - i, *a);
        w.push_back(*b);
    }
    return w;
}

ColoredDigraph star_graph(std::size_t leaves) {
    ColoredDigraph g;
    const NodeId center = g.add_node("c");
    const ColorId solid = g.add_color("S");
    const ColorId dashed = g.add_color("D");
    for (std::size_t i = 1; i <= leaves; ++i) {
        const NodeId leaf = g.add_node("l" + std::to_string(i));
        g.add_edge(center, leaf, solid);
        g.add_edge(leaf, center, dashed);
    }
    return g;
}

ColoredDigraph named_example(std::string_view name) {
    if (name == "loop1") {
        ColoredDigraph g = ColoredDigraph::with_nodes(1, {"a"});
        g.add_edge(0, 0, 0);
        return g;
    }
    if (name == "twocyc") {
        ColoredDigraph g = ColoredDigraph::with_nodes(2, {"a"});
        g.add_edge(0, 1, 0);
        g.add_edge(1, 0, 0);
        return g;
    }
    if (name == "chain") {
        ColoredDigraph g = ColoredDigraph::with_nodes(3, {"a", "b"});
        g.add_edge(0, 1, 0);
        g.add_edge(1, 2, 1);
        return g;
    }
    if (name == "amb") {
        ColoredDigraph g = ColoredDigraph::with_nodes(3, {"a"});
        g.add_edge(0, 1, 0);
        g.add_edge(0, 2, 0);
        return g;
    }
    if (name == "shift") {
        ColoredDigraph g;
        for (const char* v : {"a", "b", "c"}) g.add_node(v);
        g.add_color("G");
        g.add_color("R");
        g.add_edge(0, 1, 0);
        g.add_edge(1, 2, 0);
        g.add_edge(1, 1, 0);
        g.add_edge(2, 0, 1);
        return g;
    }
    if (name.starts_with("star")) {
        std::string digits;
        for (char c : name.substr(4))
            if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
            else if (c != '(' && c != ')' && c != ' ') throw GraphError("unknown example '" + std::string(name) + "'");
        if (digits.empty()) throw GraphError("star needs a leaf count, e.g. star(2)");
        return star_graph(std::stoul(digits));
    }
    throw GraphError("unknown example '" + std::string(name) + "'");
}

ColoredDigraph random_colored_graph(std::size_t n, std::size_t m, double probability, std::uint64_t seed) {
    if (!(probability >= 0.0 && probability <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
    if (m == 0) throw GraphError("random graphs need at least one color");
    std::vector<std::string> colors;
    for (std::size_t c = 0; c < m; ++c)
        colors.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + c)) : "c" + std::to_string(c));
    ColoredDigraph g = ColoredDigraph::with_nodes(n, std::move(colors));
    std::mt19937_64 rng(seed);
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
            for (ColorId c = 0; c < m; ++c)
                if (static_cast<double>(rng() >> 11) * scale < probability) g.add_edge(u, v, c);
    return g;
}

// ---------------------------------------------------------------------------
// Reductions

namespace {

class ArtifactBuilder {
public:
    NodeId node(std::string label, std::string role, std::int64_t tag = -1) {
        a_.output.node_labels.push_back(std::move(label));
        a_.node_roles.push_back(std::move(role));
        a_.node_tag.push_back(tag);
        return static_cast<NodeId>(a_.output.node_labels.size() - 1);
    }
    void arc(NodeId from, NodeId to) { arcs_.insert({from, to}); }
    ReductionArtifact& artifact() { return a_; }

    ReductionArtifact finish() {
        a_.output.arcs.assign(arcs_.begin(), arcs_.end());
        return std::move(a_);
    }

private:
    ReductionArtifact a_;
    std::set<Arc> arcs_;
};

std::size_t ceil_log2(std::size_t x) {
    std::size_t depth = 0;
    while ((std::size_t{1} << depth) < x) ++depth;
    return depth;
}

// Left-complete binary tree over leaves [first, first + count) with `depth`
// levels available; unary nodes are contracted. Returns the root. The left
// child is always created before the right one, so it has the smaller id.
NodeId build_tree(ArtifactBuilder& b, std::size_t copy, std::size_t depth, std::size_t first, std::size_t count,
                  const std::vector<NodeId>& leaves, std::size_t& internal_counter) {
    if (count == 1) return leaves[first];
    const std::size_t half = std::size_t{1} << (depth - 1);
    if (count <= half) return build_tree(b, copy, depth - 1, first, count, leaves, internal_counter);
    const NodeId self =
        b.node("k" + std::to_string(copy) + "n" + std::to_string(internal_counter++), "tree_internal");
    const NodeId left = build_tree(b, copy, depth - 1, first, half, leaves, internal_counter);
    const NodeId right = build_tree(b, copy, depth - 1, first + half, count - half, leaves, internal_counter);
    b.arc(self, left);
    b.arc(self, right);
    return self;
}

}  // namespace

ReductionArtifact reduce_3colorability(const UndirectedGraph& source) {
    const auto& edges = source.edges();
    if (edges.empty()) throw GraphError("3-colorability reduction needs at least one edge");
    const std::size_t n = source.node_count();
    const std::size_t s = edges.size();

    ArtifactBuilder b;
    std::vector<NodeId> real(n), prime(s), double_prime(s);
    for (NodeId v = 0; v < n; ++v) real[v] = b.node("v" + std::to_string(v), "real", v);
    for (std::size_t j = 0; j < s; ++j)
        prime[j] = b.node("p" + std::to_string(j), "v_prime_e", static_cast<std::int64_t>(j));
    for (std::size_t j = 0; j < s; ++j)
        double_prime[j] = b.node("q" + std::to_string(j), "v_double_prime_e", static_cast<std::int64_t>(j));
    std::vector<std::pair<NodeId, NodeId>> grey(n);
    for (NodeId v = 0; v < n; ++v) {
        grey[v].first = b.node("g" + std::to_string(v) + "a", "grey");
        grey[v].second = b.node("g" + std::to_string(v) + "b", "grey");
    }

    for (std::size_t j = 0; j < s; ++j) {
        b.arc(prime[j], real[edges[j].first]);
        b.arc(prime[j], real[edges[j].second]);
        b.arc(double_prime[j], prime[j]);
        if (j + 1 < s) b.arc(double_prime[j], double_prime[j + 1]);
    }
    for (NodeId v = 0; v < n; ++v) {
        b.arc(real[v], grey[v].first);
        b.arc(grey[v].first, grey[v].second);
        b.arc(grey[v].second, double_prime[0]);
    }
    b.artifact().metadata = {{"n", n}, {"s", s}};
    return b.finish();
}

ReductionArtifact reduce_monochromatic_triangle(const UndirectedGraph& source) {
    const auto& edges = source.edges();
    const auto triangles = source.triangles();
    if (triangles.empty()) throw GraphError("triangle reduction needs at least one triangle");
    const std::size_t s = edges.size();
    const std::size_t S = triangles.size();
    const std::size_t depth = ceil_log2(S);
    const std::size_t copies = 2 * S + 1;
    const std::size_t levels = depth + 3;

    auto edge_index = [&](NodeId u, NodeId v) {
        const auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v});
        return static_cast<std::size_t>(it - edges.begin());
    };

    ArtifactBuilder b;
    std::vector<NodeId> source_of(s), sink_of(s);
    for (std::size_t i = 0; i < s; ++i) {
        const auto tag = static_cast<std::int64_t>(i);
        source_of[i] = b.node("E" + std::to_string(i) + "s", "real_edge_source", tag);
        sink_of[i] = b.node("E" + std::to_string(i) + "t", "real_edge_sink", tag);
        b.arc(source_of[i], sink_of[i]);
    }

    std::vector<NodeId> roots;
    for (std::size_t k = 0; k < copies; ++k) {
        std::vector<NodeId> leaves;
        for (std::size_t t = 0; t < S; ++t) {
            const NodeId leaf =
                b.node("k" + std::to_string(k) + "T" + std::to_string(t), "triangle", static_cast<std::int64_t>(t));
            const auto& [x, y, z] = triangles[t];
            b.arc(leaf, source_of[edge_index(x, y)]);
            b.arc(leaf, source_of[edge_index(x, z)]);
            b.arc(leaf, source_of[edge_index(y, z)]);
            leaves.push_back(leaf);
        }
        std::size_t internal = 0;
        roots.push_back(build_tree(b, k, depth, 0, S, leaves, internal));
    }

    std::vector<std::array<NodeId, 3>> level(levels);
    for (std::size_t l = 0; l < levels; ++l)
        for (std::size_t a = 0; a < 3; ++a)
            level[l][a] = b.node("L" + std::to_string(l + 1) + "." + std::to_string(a), "connector",
                                 static_cast<std::int64_t>(l + 1));
    for (std::size_t i = 0; i < s; ++i) b.arc(sink_of[i], level[0][i % 3]);
    for (std::size_t l = 0; l + 1 < levels; ++l)
        for (NodeId from : level[l])
            for (NodeId to : level[l + 1]) b.arc(from, to);
    for (NodeId from : level[levels - 1])
        for (NodeId root : roots) b.arc(from, root);

    b.artifact().metadata = {{"s", s}, {"S", S}, {"N", depth}, {"copies", copies}, {"levels", levels}};
    return b.finish();
}

ColoredDigraph color_3colorability_reduction(const ReductionArtifact& artifact, const UndirectedGraph& source,
                                             const std::vector<ColorId>& node_coloring) {
    if (node_coloring.size() != source.node_count()) throw GraphError("coloring must cover every source node");
    for (const auto& [u, v] : source.edges())
        if (node_coloring[u] == node_coloring[v] || node_coloring[u] > 2 || node_coloring[v] > 2)
            throw GraphError("not a proper 3-coloring of the source");
    constexpr ColorId red = 0, blue = 1, green = 2;
    const std::size_t count = artifact.output.node_count();
    std::vector<ColorId> node_color(count, green);
    for (NodeId v = 0; v < count; ++v) {
        const std::string& role = artifact.node_roles[v];
        if (role == "real") node_color[v] = node_coloring[static_cast<std::size_t>(artifact.node_tag[v])];
        else if (role == "v_prime_e") node_color[v] = blue;
        else if (role == "v_double_prime_e") node_color[v] = red;
    }
    ColoredDigraph g;
    g.node_labels = artifact.output.node_labels;
    g.color_labels = {"R", "B", "G"};
    for (const Arc& a : artifact.output.arcs) g.add_edge(a.from, a.to, node_color[a.to]);
    return g;
}

ColoredDigraph color_triangle_reduction(const ReductionArtifact& artifact, const UndirectedGraph& source,
                                        const std::vector<ColorId>& edge_coloring) {
    constexpr ColorId solid = 0, dashed = 1;
    const auto& edges = source.edges();
    const auto triangles = source.triangles();
    if (edge_coloring.size() != edges.size()) throw GraphError("coloring must cover every source edge");
    auto edge_index = [&](NodeId u, NodeId v) {
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), std::pair{u, v}) - edges.begin());
    };

    // Per triangle: the colors of the arcs into its three real edges. The two
    // arcs whose real edges share a color get S and D, the odd one gets S.
    std::vector<std::map<std::size_t, ColorId>> triangle_arc_color(triangles.size());
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        const auto& [x, y, z] = triangles[t];
        const std::array<std::size_t, 3> member{edge_index(x, y), edge_index(x, z), edge_index(y, z)};
        const std::array<ColorId, 3> c{edge_coloring[member[0]], edge_coloring[member[1]], edge_coloring[member[2]]};
        if (c[0] == c[1] && c[1] == c[2]) throw GraphError("edge coloring has a monochromatic triangle");
        const std::size_t odd = c[0] == c[1] ? 2 : (c[0] == c[2] ? 1 : 0);
        bool first_of_pair = true;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == odd) {
                triangle_arc_color[t][member[i]] = solid;
            } else {
                triangle_arc_color[t][member[i]] = first_of_pair ? solid : dashed;
                first_of_pair = false;
            }
        }
    }

    const auto& roles = artifact.node_roles;
    ColoredDigraph g;
    g.node_labels = artifact.output.node_labels;
    g.color_labels = {"S", "D"};
    std::vector<std::vector<NodeId>> children(artifact.output.node_count());
    for (const Arc& a : artifact.output.arcs)
        if (roles[a.from] == "tree_internal") children[a.from].push_back(a.to);

    for (const Arc& a : artifact.output.arcs) {
        const std::string& from = roles[a.from];
        const std::string& to = roles[a.to];
        ColorId color = solid;
        if (from == "real_edge_source") {
            color = edge_coloring[static_cast<std::size_t>(artifact.node_tag[a.from])];
        } else if (from == "tree_internal") {
            const auto& kids = children[a.from];
            color = a.to == *std::min_element(kids.begin(), kids.end()) ? solid : dashed;
        } else if (from == "triangle") {
            const auto t = static_cast<std::size_t>(artifact.node_tag[a.from]);
            color = triangle_arc_color[t].at(static_cast<std::size_t>(artifact.node_tag[a.to]));
        } else if (from == "real_edge_sink") {
            color = solid;
        } else if (from == "connector") {
            color = to == "connector" ? dashed : solid;
        }
        g.add_edge(a.from, a.to, color);
    }
    return g;
}

}  // namespace observa
