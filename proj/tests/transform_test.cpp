#include <doctest.h>

#include <set>

#include "hrgpg/errors.hpp"
#include "hrgpg/plr.hpp"
#include "hrgpg/transform.hpp"
#include "support/support.hpp"

using namespace hrgpg;

TEST_SUITE("well-formedness") {
  TEST_CASE("cycle productions are well-formed") {
    const PositionalGrammar pg = translate_grammar(testing::load_grammar_fixture("cycle.hrg"));
    for (const auto& p : pg.productions) CHECK(is_well_formed(p, pg.entering_of(p.lhs)).ok);
  }

  TEST_CASE("terminal-first C production is not") {
    const Hrg g = testing::load_grammar_fixture("cycle-scrambled.hrg");
    const auto wf = is_well_formed(translate_production(*g.find("P2")), g.entering_of("C"));
    CHECK_FALSE(wf.ok);
    CHECK(wf.failing == std::vector<int>{1});
    REQUIRE(wf.diagnostics.size() == 1);
    CHECK(wf.diagnostics.front() == "P2: entering interface 1 not tied to leftmost symbol a");
    // Entering through interface 2 instead would be fine.
    CHECK(is_well_formed(translate_production(*g.find("P2")), std::vector<int>{2}).ok);
  }

  TEST_CASE("entering interface outside the lhs type") {
    const Hrg g = testing::load_grammar_fixture("cycle.hrg");
    CHECK_THROWS_AS(is_well_formed(translate_production(*g.find("P2")), std::vector<int>{3}), DomainError);
  }

  TEST_CASE("a tie through a self connector counts") {
    const Hrg g = testing::load_grammar_fixture("fig1.hrg");
    const auto p = translate_production(g.productions.front());
    CHECK(is_well_formed(p, std::vector<int>{1}).ok);
    CHECK_FALSE(is_well_formed(p, std::vector<int>{2}).ok);
  }
}

TEST_SUITE("permutations") {
  TEST_CASE("n! orderings, lexicographic") {
    CHECK(all_orderings(0).size() == 1);
    CHECK(all_orderings(1).size() == 1);
    CHECK(all_orderings(3).size() == 6);
    CHECK(all_orderings(5).size() == 120);
    const auto three = all_orderings(3);
    CHECK(std::is_sorted(three.begin(), three.end()));
    CHECK(std::set<Ordering>(three.begin(), three.end()).size() == 6);
    CHECK_THROWS_AS(all_orderings(9), BudgetError);
  }

  TEST_CASE("simple permutation reorders edges only") {
    const Hrg g = testing::load_grammar_fixture("fig1.hrg");
    const Production& p = g.productions.front();
    const std::vector<std::size_t> identity{0, 1, 2};
    CHECK(simple_permute(p, identity).rhs == p.rhs);
    const std::vector<std::size_t> reversed{2, 1, 0};
    const Production r = simple_permute(p, reversed);
    CHECK(r.rhs.edges().front().label == "B");
    CHECK(r.rhs.externals() == p.rhs.externals());
    const std::vector<std::size_t> bad{0, 0, 1};
    CHECK_THROWS_AS(simple_permute(p, bad), DomainError);
    const std::vector<std::size_t> short_one{0, 1};
    CHECK_THROWS_AS(simple_permute(p, short_one), DomainError);
  }

  TEST_CASE("plan kinds and cost") {
    PermutationPlan plan;
    plan.entries = {{"P1", {{0}}}, {"P2", {{1, 0}}}, {"P3", {{0, 1}, {1, 0}}}};
    CHECK(plan.entries[0].kind() == PermutationKind::Identity);
    CHECK(plan.entries[1].kind() == PermutationKind::Simple);
    CHECK(plan.entries[2].kind() == PermutationKind::Duplicated);
    CHECK(plan.cost() == 1);
    CHECK(format_ordering({1, 0}) == "(2,1)");
  }

  TEST_CASE("duplicated copies keep their origin") {
    const Hrg g = testing::load_grammar_fixture("cycle.hrg");
    PermutationPlan plan;
    plan.entries = {{"P2", {{0, 1}, {1, 0}}}};
    const Hrg out = apply_plan(g, plan);
    REQUIRE(out.productions.size() == 6);
    CHECK(out.productions[1].name == "P2");
    CHECK(out.productions[2].name == "P2#2");
    CHECK(out.productions[2].origin == "P2");
    CHECK(out.productions[2].rhs.edges().front().label == "a");
  }
}

TEST_SUITE("normalize") {
  TEST_CASE("cycle grammar gets the identity plan") {
    const NormalizeResult r = normalize(testing::load_grammar_fixture("cycle.hrg"), {});
    REQUIRE(r.ok);
    CHECK(r.plan.cost() == 0);
    for (const auto& e : r.plan.entries) CHECK(e.kind() == PermutationKind::Identity);
    CHECK(r.assignments_tried == 1);
  }

  TEST_CASE("scrambled grammar gets simple permutations") {
    const NormalizeResult r = normalize(testing::load_grammar_fixture("cycle-scrambled.hrg"), {});
    REQUIRE(r.ok);
    CHECK(r.plan.cost() == 0);
    CHECK(r.plan.entries[1].orderings.front() == Ordering{1, 0});
    CHECK(r.plan.entries[2].orderings.front() == Ordering{1, 0});
    CHECK(build_table(r.positional).conflict_free());
    CHECK(format_production(r.positional.productions[1]) == "C ⇒ C ⟨2,0,1⟩ a (C1=C1, C2=a2)");
  }

  TEST_CASE("wf-only mode skips the table") {
    NormalizeOptions options;
    options.wf_only = true;
    const NormalizeResult r = normalize(testing::load_grammar_fixture("cycle-dup.hrg"), options);
    CHECK(r.ok);
    CHECK_FALSE(normalize(testing::load_grammar_fixture("cycle-dup.hrg"), {}).ok);
  }

  TEST_CASE("unfixable grammar fails with a diagnostic") {
    NormalizeOptions options;
    options.max_duplicates = 0;
    const NormalizeResult r = normalize(testing::load_grammar_fixture("unfixable.hrg"), options);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics.front().find("P2") != std::string::npos);
  }

  TEST_CASE("reduce/reduce conflicts survive any duplication") {
    NormalizeOptions options;
    options.max_duplicates = 1;
    const NormalizeResult r = normalize(testing::load_grammar_fixture("cycle-dup.hrg"), options);
    CHECK_FALSE(r.ok);
    bool mentions = false;
    for (const auto& d : r.diagnostics) mentions |= d.find("reduce/reduce") != std::string::npos;
    CHECK(mentions);
    // Every production has a single admissible ordering, so nothing to duplicate.
    CHECK(r.assignments_tried == 1);
  }

  TEST_CASE("search walks single orderings before duplicated ones") {
    const NormalizeResult r = normalize(testing::load_grammar_fixture("forked.hrg"), {});
    CHECK_FALSE(r.ok);
    // (1,2), (2,1), then both as copies.
    CHECK(r.assignments_tried == 3);
    REQUIRE(r.diagnostics.size() >= 2);
    CHECK(r.diagnostics[0] == "no conflict-free plan with at most 2 duplicated copies");
    CHECK(r.diagnostics[1].find("shift/reduce") != std::string::npos);
  }

  TEST_CASE("search budget") {
    NormalizeOptions options;
    options.search_budget = 2;
    const NormalizeResult r = normalize(testing::load_grammar_fixture("forked.hrg"), options);
    CHECK_FALSE(r.ok);
    CHECK(r.diagnostics.front() == "search budget of 2 assignments exhausted");
  }

  TEST_CASE("invalid grammars are reported, not thrown") {
    const NormalizeResult r = normalize(testing::load_grammar_fixture("disconnected.hrg"), {});
    CHECK_FALSE(r.ok);
    CHECK(r.diagnostics.front().find("rhs not connected") != std::string::npos);
  }
}
