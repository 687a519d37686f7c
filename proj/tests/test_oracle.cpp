#include <doctest.h>

#include <random>

#include "observa/analysis.hpp"
#include "observa/generators.hpp"
#include "observa/oracle.hpp"
#include "observa/tracker.hpp"
#include "support.hpp"

using namespace observa;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("fixed instances") {
    CHECK_FALSE(oracle_is_observable(named_example("twocyc")));
    CHECK(oracle_is_observable(named_example("chain")));
    CHECK(oracle_is_observable(worst_case_family(4)));
    CHECK(oracle_is_partly_observable(named_example("star(2)")));
    CHECK_FALSE(oracle_is_partly_observable(named_example("shift")));
    CHECK(oracle_is_partly_observable(named_example("loop1")));
    CHECK(oracle_is_observable(ColoredDigraph{}));
}

TEST_CASE("longest words") {
    const auto amb = oracle_longest_bad_word(named_example("amb"), 6);
    REQUIRE(amb);
    CHECK(amb->length == 1);
    CHECK(amb->word == Word{0});

    CHECK_FALSE(oracle_longest_bad_word(named_example("loop1"), 4).has_value());

    const ColoredDigraph wc = worst_case_family(4);
    const auto w = oracle_longest_bad_word(wc, 8);
    REQUIRE(w);
    CHECK(w->length == 5);
    CHECK(track(wc, w->word).back().possible.count() >= 2);
    CHECK(track(wc, worst_case_word(wc, 4)).back().possible.count() >= 2);
    CHECK(format_word(wc, worst_case_word(wc, 4)) == "A1,A1,B1,A2,B2");

    const auto star = oracle_longest_ambiguous_word(named_example("star(2)"), 10);
    REQUIRE(star);
    CHECK(star->length == 1);
    CHECK(star->word == Word{0});
}

TEST_CASE("a localized agent can become ambiguous again") {
    // "b" localizes at 0, and 0 then branches under "a".
    ColoredDigraph g = ColoredDigraph::with_nodes(3, {"a", "b"});
    g.add_edge(0, 0, 1);
    g.add_edge(1, 0, 1);
    g.add_edge(0, 1, 0);
    g.add_edge(0, 2, 0);
    CHECK(track(g, {1}).back().possible.count() == 1);
    CHECK(track(g, {1, 0}).back().possible.count() == 2);
    CHECK_FALSE(oracle_is_observable(g));
    CHECK_FALSE(is_observable(g).holds);
    CHECK(oracle_is_observable_unpruned(g) == oracle_is_observable(g));
}

TEST_CASE("pruned and unpruned searches agree") {
    support::for_each_exhaustive(2, 2, [](const ColoredDigraph& g) {
        CHECK(oracle_is_observable(g) == oracle_is_observable_unpruned(g));
        CHECK(oracle_is_partly_observable(g) == oracle_is_partly_observable_unpruned(g));
    });
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        const ColoredDigraph g = support::from_mask(3, 2, rng() & ((1u << 18) - 1));
        CAPTURE(support::graph_summary(g));
        CHECK(oracle_is_observable(g) == oracle_is_observable_unpruned(g));
        CHECK(oracle_is_partly_observable(g) == oracle_is_partly_observable_unpruned(g));
    }
}

TEST_CASE("layered search matches the naive word walk") {
    for (const ColoredDigraph& g : support::random_corpus(300, 29)) {
        const std::size_t n = g.node_count();
        if (n > 4) continue;
        CAPTURE(support::graph_summary(g));
        CHECK(oracle_is_observable(g) == support::naive_observable(g, n * n - n));
        const long bad = support::naive_longest_bad(g, n * n);
        const auto w = oracle_longest_bad_word(g, n * n);
        CHECK((w ? static_cast<long>(w->length) : -1) == bad);
        const long amb = support::naive_longest_ambiguous(g, n * n);
        const auto a = oracle_longest_ambiguous_word(g, n * n);
        CHECK((a ? static_cast<long>(a->length) : -1) == amb);
    }
}

TEST_CASE("budgets are explicit") {
    OracleBudget tiny;
    tiny.max_word_length = 3;
    CHECK_THROWS_AS(oracle_is_observable(worst_case_family(4), tiny), BudgetExceeded);
    OracleBudget few;
    few.max_word_count = 5;
    CHECK_THROWS_AS(oracle_is_observable_unpruned(worst_case_family(4), few), BudgetExceeded);
    CHECK_THROWS_AS(oracle_longest_bad_word(worst_case_family(4), 100, few), BudgetExceeded);
}

TEST_SUITE_END();
