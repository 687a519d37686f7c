#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "observa/colored_digraph.hpp"

namespace observa {

/// Explicit limits for the brute-force checkers. Exceeding either raises
/// BudgetExceeded; the checkers never truncate silently.
struct OracleBudget {
    std::size_t max_word_length = 4096;
    std::uint64_t max_word_count = 50'000'000;  // expansions of (δ-set, color)
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WordWitness {
    std::size_t length = 0;
    Word word;
};

/// True iff no word of length n^2 - n leaves two or more possible positions.
bool oracle_is_observable(const ColoredDigraph& graph, const OracleBudget& budget = {});

/// True iff no word of length n^2 keeps two or more possible positions after
/// each of its prefixes.
bool oracle_is_partly_observable(const ColoredDigraph& graph, const OracleBudget& budget = {});

/// Longest k <= bound such that some word of length k leaves two or more
/// possible positions, with the first such word in color order. nullopt when
/// no such word exists (only possible for n <= 1).
std::optional<WordWitness> oracle_longest_bad_word(const ColoredDigraph& graph, std::size_t bound,
                                                   const OracleBudget& budget = {});

/// Longest k <= bound such that some word of length k leaves two or more
/// possible positions after every prefix of length 1..k.
std::optional<WordWitness> oracle_longest_ambiguous_word(const ColoredDigraph& graph, std::size_t bound,
                                                         const OracleBudget& budget = {});

// Plain enumeration of every word, without state sharing or pruning. Used to
// cross-check the pruned searches on tiny graphs.
bool oracle_is_observable_unpruned(const ColoredDigraph& graph, const OracleBudget& budget = {});
bool oracle_is_partly_observable_unpruned(const ColoredDigraph& graph, const OracleBudget& budget = {});

}  // namespace observa
