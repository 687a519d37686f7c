#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "observa/colored_digraph.hpp"
#include "observa/pair_graph.hpp"

namespace observa {

/// Cycle in a pair graph: pairs[i] -> pairs[i+1] (wrapping) via colors[i].
/// In G2 this is two separated cycles allowed by the same word.
struct PairCycleWitness {
    PairGraphKind kind = PairGraphKind::g2;
    std::vector<PairNode> pairs;
    std::vector<ColorId> colors;
};

/// Asymptotically reachable node leaving by two edges of the same color.
struct BranchingWitness {
    NodeId node = 0;
    ColorId color = 0;
    NodeId first_target = 0;
    NodeId second_target = 0;
};

using Witness = std::variant<PairCycleWitness, BranchingWitness>;

struct Verdict {
    bool holds = false;
    std::optional<Witness> witness;  // present iff !holds
};

struct ObservabilityReport {
    bool observable = false;
    bool partly_observable = false;
    bool partly_aposteriori = false;
    std::optional<Witness> witness;          // why the graph is not observable
    std::optional<Witness> partial_witness;  // why it is not partly observable
    std::optional<std::size_t> min_time;
    std::optional<std::size_t> min_partial_time;
};

// Every function below requires a validated graph without unobservable
// edges (run epsilon_closure first) and throws GraphError otherwise.

PairGraph build_pair_graph(const ColoredDigraph& graph, PairGraphKind kind);

/// Observable iff G2 is acyclic and no asymptotically reachable node has two
/// outgoing edges of one color.
Verdict is_observable(const ColoredDigraph& graph);

/// Partly observable iff G2tilde is acyclic.
Verdict is_partly_observable(const ColoredDigraph& graph);

/// G2 acyclicity: no word allows two separated cycles.
bool is_partly_aposteriori_observable(const ColoredDigraph& graph);

/// Smallest T such that every word of length >= T leaves at most one
/// possible position. Absent when the graph is not observable; 0 when n <= 1.
std::optional<std::size_t> min_observation_time(const ColoredDigraph& graph);

/// Smallest T such that every word of length >= T localizes the agent at
/// some prefix of length 1..T. Absent when not partly observable.
std::optional<std::size_t> min_partial_observation_time(const ColoredDigraph& graph);

ObservabilityReport analyze(const ColoredDigraph& graph);

std::string describe(const Witness& witness, const ColoredDigraph& graph);

}  // namespace observa
