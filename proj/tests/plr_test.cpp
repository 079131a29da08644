#include <doctest.h>

#include <thread>

#include "hrgpg/errors.hpp"
#include "hrgpg/grammar_io.hpp"
#include "hrgpg/plr.hpp"
#include "support/support.hpp"

using namespace hrgpg;

namespace {

ParseTable cycle_table() { return build_table(translate_grammar(testing::load_grammar_fixture("cycle.hrg"))); }

}  // namespace

TEST_SUITE("plr table") {
  TEST_CASE("cycle table shape") {
    const ParseTable t = cycle_table();
    REQUIRE(t.states.size() == 7);
    CHECK(t.conflict_free());
    const State& s0 = t.states[0];
    CHECK(s0.shifts.size() == 2);
    for (const auto& sh : s0.shifts) CHECK(sh.fetch.empty());
    const State& after_c = t.states[s0.gotos.at("C")];
    CHECK(after_c.reduces.size() == 1);
    REQUIRE(after_c.shifts.size() == 2);
    CHECK(after_c.shifts[0].fetch == std::vector<Connector>{{2, 0, 1}});
    CHECK(t.states[s0.gotos.at("S")].accept);
  }

  TEST_CASE("closure propagates fetch context to the leftmost element") {
    const PositionalGrammar pg = translate_grammar(parse_grammar(
        "grammar g\nstart S\nnonterminal S/1\nnonterminal C/2\nterminal a/2 b/2\n"
        "prod P1: S -> b(x, m) C(m, x) ext(x)\n"
        "prod P2: C -> a(x, y) ext(x, y)\n"));
    // P1 is b ⟨2,0,1⟩∧⟨1,0,2⟩ C; the C item inherits both on a.
    const ItemSet items = closure(pg, {Item{0, 1, pg.productions[0].body.elements[1].conjunction}});
    bool found = false;
    for (const auto& it : items) {
      if (it.production == 1 && it.dot == 0) {
        found = true;
        CHECK(it.context == std::vector<Connector>{{1, 0, 2}, {2, 0, 1}});
      }
    }
    CHECK(found);
  }

  TEST_CASE("duplicate production gives reduce/reduce") {
    const ParseTable t = build_table(translate_grammar(testing::load_grammar_fixture("cycle-dup.hrg")));
    REQUIRE(t.conflicts.size() == 1);
    CHECK(t.conflicts.front().kind == ConflictKind::ReduceReduce);
    CHECK(format_table(t).find("reduce/reduce") != std::string::npos);
  }

  TEST_CASE("non-well-formed grammars are refused") {
    CHECK_THROWS_AS(build_table(translate_grammar(testing::load_grammar_fixture("cycle-scrambled.hrg"))),
                    DomainError);
  }

  TEST_CASE("a reduce that shares the shifted node is a conflict") {
    // C -> a and C -> a a: after one a, both reducing and fetching the next a
    // through the external node are possible.
    const PositionalGrammar pg = translate_grammar(parse_grammar(
        "grammar g\nstart S\nnonterminal S/1\nnonterminal C/2\nterminal a/2\n"
        "prod P1: S -> C(x, x) ext(x)\n"
        "prod P2: C -> a(x, m) a(m, y) ext(x, y)\n"
        "prod P3: C -> a(x, y) ext(x, y)\n"));
    const ParseTable t = build_table(pg);
    bool shift_reduce = false;
    for (const auto& c : t.conflicts) shift_reduce |= c.kind == ConflictKind::ShiftReduce;
    CHECK(shift_reduce);
  }

  TEST_CASE("fetch through an internal node resolves shift/reduce") {
    const ParseTable t = cycle_table();
    // State after C has reduce P1 and shifts anchored at C2, external to P1,
    // and is resolved only because P1 rewrites to the start symbol.
    CHECK(t.conflict_free());
  }

  TEST_CASE("item and table rendering") {
    const ParseTable t = cycle_table();
    const std::string dump = format_table(t);
    CHECK(dump.find("C ⇒ C • ⟨2,0,1⟩ a") != std::string::npos);
    CHECK(dump.find("S' ⇒ • S") != std::string::npos);
    CHECK(dump.find("conflicts: none") != std::string::npos);
    CHECK(format_table(t, {false, false}).find("C => C . <2,0,1> a") != std::string::npos);
  }
}

TEST_SUITE("plr parse") {
  TEST_CASE("H from its first edge") {
    const ParseTable t = cycle_table();
    const ParseResult r = parse(t, testing::load_graph_fixture("fig1-H.hg"));
    REQUIRE(r.accepted());
    CHECK(r.start_edge == "e1");
    CHECK(r.stats.shifts == 3);
    CHECK(r.stats.reduces == 4);
    REQUIRE(r.tree);
    CHECK(leaf_sequence(*r.tree) == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(production_sequence(*r.tree) == std::vector<std::string>{"P1", "P3", "P2", "P4"});
  }

  TEST_CASE("start edge is honoured") {
    const ParseTable t = cycle_table();
    const ParseResult r = parse(t, testing::load_graph_fixture("fig1-H.hg"), std::string("e3"));
    REQUIRE(r.accepted());
    CHECK(r.start_edge == "e3");
    CHECK(leaf_sequence(*r.tree).front() == "e3");
    CHECK_FALSE(parse(t, testing::load_graph_fixture("fig1-H.hg"), std::string("zz")).accepted());
  }

  TEST_CASE("open chain, wrong labels, extra edges, two cycles") {
    const ParseTable t = cycle_table();
    CHECK_FALSE(parse(t, testing::load_graph_fixture("open-chain.hg")).accepted());
    CHECK_FALSE(parse(t, Hypergraph({{"e1", "c", {"u", "u"}}})).accepted());
    CHECK_FALSE(parse(t, Hypergraph({{"e1", "a", {"u", "u"}}, {"e2", "a", {"u", "v"}}})).accepted());
    const Hypergraph two({{"e1", "a", {"u", "u"}}, {"e2", "b", {"w", "w"}}});
    CHECK_FALSE(parse(t, two).accepted());
    CHECK_FALSE(parse(t, Hypergraph()).accepted());
  }

  TEST_CASE("a figure-eight is not a cycle") {
    const ParseTable t = cycle_table();
    const Hypergraph eight({{"e1", "a", {"u", "v"}}, {"e2", "a", {"v", "u"}}, {"e3", "b", {"u", "w"}},
                            {"e4", "b", {"w", "u"}}});
    bool accepted = false;
    try {
      accepted = parse(t, eight).accepted();
    } catch (const AmbiguityError&) {
    }
    CHECK_FALSE(accepted);
  }

  TEST_CASE("two fetchable edges raise an ambiguity") {
    const PositionalGrammar pg = translate_grammar(parse_grammar(
        "grammar star\nstart S\nnonterminal S/1\nnonterminal C/2\nterminal a/2 b/2\n"
        "prod P1: S -> b(x, m) C(m, y) ext(x)\n"
        "prod P2: C -> a(x, y) ext(x, y)\n"));
    const ParseTable t = build_table(pg);
    const Hypergraph h({{"e1", "b", {"r", "c"}}, {"e2", "a", {"c", "p"}}, {"e3", "a", {"c", "q"}}});
    CHECK_THROWS_AS(parse(t, h), AmbiguityError);
  }

  TEST_CASE("recognition report") {
    const ParseTable t = cycle_table();
    const RecognitionReport rep = recognition_ambiguity(t, testing::load_graph_fixture("fig1-H.hg"));
    CHECK(rep.runs.size() == 3);
    CHECK(rep.accepting == 3);
    CHECK(rep.fetch_ambiguities == 0);
    CHECK(rep.tree_classes == 1);
    CHECK(rep.unambiguous());
    CHECK(admissible_starts(t, testing::load_graph_fixture("fig1-H.hg")).size() == 3);
  }

  TEST_CASE("long cycles: one shift per edge, one reduce per edge plus the start") {
    const ParseTable t = cycle_table();
    std::string word;
    for (int i = 0; i < 2000; ++i) word += (i % 3 == 0) ? 'b' : 'a';
    const ParseResult r = parse(t, testing::cycle_graph(word));
    REQUIRE(r.accepted());
    CHECK(r.stats.shifts == 2000);
    CHECK(r.stats.reduces == 2001);
    CHECK(leaf_sequence(*r.tree).size() == 2000);
  }

  TEST_CASE("a table is shared by concurrent parses") {
    const ParseTable t = cycle_table();
    const Hypergraph h = testing::cycle_graph("abbab");
    std::vector<bool> ok(4);
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < ok.size(); ++i) {
      workers.emplace_back([&, i] { ok[i] = parse(t, h, "e" + std::to_string(i + 1)).accepted(); });
    }
    for (auto& w : workers) w.join();
    for (bool b : ok) CHECK(b);
  }
}
