#include <doctest.h>

#include "hrgpg/errors.hpp"
#include "hrgpg/graph_io.hpp"
#include "hrgpg/hypergraph.hpp"
#include "hrgpg/isomorphism.hpp"
#include "support/support.hpp"

using namespace hrgpg;

TEST_SUITE("hypergraph") {
  TEST_CASE("fixture H is a valid three-edge cycle") {
    const Hypergraph h = testing::load_graph_fixture("fig1-H.hg");
    CHECK(h.edge_count() == 3);
    CHECK(h.node_count() == 3);
    CHECK(validate(h).empty());
    CHECK(type_of(h) == 0);
    CHECK(h.degree("nT") == 2);
    CHECK(is_connected(h));
  }

  TEST_CASE("a self-loop edge counts its node twice") {
    const Hypergraph h = testing::load_graph_fixture("a-loop.hg");
    CHECK(h.degree("n1") == 2);
    CHECK(validate(h).empty());
  }

  TEST_CASE("arity mismatch against declared labels") {
    Hypergraph h({{"e1", "a", {"u", "v", "w"}}});
    const auto report = validate(h, {{"a", 2}});
    REQUIRE(report.size() == 1);
    CHECK(report.front().kind == ViolationKind::ArityMismatch);
    CHECK(report.front().subject == "e1");
  }

  TEST_CASE("arity mismatch inferred from the graph itself") {
    const Hypergraph h = testing::load_graph_fixture("broken.hg");
    CHECK(has_violation(validate(h), ViolationKind::ArityMismatch));
  }

  TEST_CASE("isolated node, unknown label, duplicate externals") {
    Hypergraph h({{"e1", "a", {"u", "v"}}});
    h.add_node("lonely");
    CHECK(has_violation(validate(h, {{"a", 2}}), ViolationKind::IsolatedNode));
    CHECK(has_violation(validate(h, {{"b", 2}}), ViolationKind::UnknownLabel));

    Hypergraph ext({{"e1", "a", {"u", "v"}}}, {"u", "u"});
    CHECK(has_violation(validate(ext, {{"a", 2}}), ViolationKind::DuplicateExternal));
  }

  TEST_CASE("zero-arity edges and duplicate ids are rejected") {
    Hypergraph h;
    h.add_edge({"e1", "z", {}});
    h.add_edge({"e1", "a", {"u", "v"}});
    const auto report = validate(h);
    CHECK(has_violation(report, ViolationKind::ZeroArityEdge));
    CHECK(has_violation(report, ViolationKind::DuplicateEdgeId));
  }

  TEST_CASE("type counts externals") {
    Hypergraph h({{"e1", "d", {"x", "m", "x"}}, {"e2", "C", {"m", "y", "w"}}}, {"x", "y"});
    CHECK(type_of(h) == 2);
    CHECK(h.node_count() == 4);
  }

  TEST_CASE("connectivity") {
    CHECK_FALSE(is_connected(Hypergraph({{"e1", "a", {"u", "v"}}, {"e2", "a", {"x", "y"}}})));
    CHECK(is_connected(Hypergraph({{"e1", "a", {"u", "v"}}, {"e2", "a", {"v", "y"}}})));
  }
}

TEST_SUITE("isomorphism") {
  TEST_CASE("rotations of a cycle are isomorphic, reflections are not") {
    const Hypergraph aab = testing::cycle_graph("aab");
    CHECK(isomorphic(aab, testing::cycle_graph("aba")));
    CHECK(isomorphic(aab, testing::cycle_graph("baa")));
    CHECK_FALSE(isomorphic(aab, testing::cycle_graph("abb")));
    CHECK_FALSE(isomorphic(aab, testing::cycle_graph("aaa")));
  }

  TEST_CASE("attachment order matters") {
    Hypergraph forward({{"e1", "a", {"u", "v"}}});
    Hypergraph loop({{"e1", "a", {"u", "u"}}});
    CHECK(isomorphic(forward, Hypergraph({{"x", "a", {"p", "q"}}})));
    CHECK_FALSE(isomorphic(forward, loop));
  }

  TEST_CASE("externals are matched position-wise") {
    Hypergraph a({{"e1", "a", {"u", "v"}}}, {"u", "v"});
    Hypergraph b({{"e1", "a", {"u", "v"}}}, {"v", "u"});
    CHECK_FALSE(isomorphic(a, b));
    CHECK(isomorphic(a, a));
  }

  TEST_CASE("the mapping is a witness") {
    const Hypergraph a = testing::cycle_graph("aab");
    const Hypergraph b = testing::cycle_graph("aba");
    const auto iso = isomorphic(a, b);
    REQUIRE(iso);
    for (std::size_t i = 0; i < a.edge_count(); ++i) {
      const Edge& src = a.edges()[i];
      const Edge& dst = b.edges()[iso->edges[i]];
      CHECK(src.label == dst.label);
      for (std::size_t k = 0; k < src.attachments.size(); ++k) {
        CHECK(iso->nodes.at(src.attachments[k]) == dst.attachments[k]);
      }
    }
  }

  TEST_CASE("invariant key separates obvious non-isomorphs") {
    CHECK(invariant_key(testing::cycle_graph("aab")) == invariant_key(testing::cycle_graph("baa")));
    CHECK(invariant_key(testing::cycle_graph("aab")) != invariant_key(testing::cycle_graph("abb")));
  }

  TEST_CASE("budget refusal above the edge bound") {
    const Hypergraph big = testing::cycle_graph(std::string(10, 'a'));
    CHECK_THROWS_AS(isomorphic(big, big, IsoOptions{5}), BudgetError);
  }
}

TEST_SUITE("graph io") {
  TEST_CASE("write then parse is lossless") {
    NamedGraph g{"h", Hypergraph({{"e1", "a", {"u", "v"}}, {"e2", "t", {"v", "w", "u"}}}, {"u"})};
    const NamedGraph back = parse_graph(write_graph(g));
    CHECK(back.name == "h");
    CHECK(back.graph == g.graph);
  }

  TEST_CASE("syntax errors carry the line") {
    try {
      parse_graph("graph g\nedge e1 a (u, v\n");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("edge e1 a (u, v)\n"), SyntaxError);
    CHECK_THROWS_AS(parse_graph("graph g\nfrobnicate\n"), SyntaxError);
  }

  TEST_CASE("missing file") {
    CHECK_THROWS_WITH_AS(read_graph_file("/nonexistent/x.hg"), doctest::Contains("file not found"), IoError);
  }
}
