#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support/support.hpp"

using namespace hrgpg;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(std::string_view name) { return testing::fixture(name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    CHECK(run({"validate", fx("cycle.hrg")}).code == 0);
    CHECK(run({"validate", fx("fig1-H.hg"), "--grammar", fx("cycle.hrg")}).code == 0);
    const Run broken = run({"validate", fx("broken.hg")});
    CHECK(broken.code == 1);
    CHECK(broken.out.find("violation") != std::string::npos);
    const Run missing = run({"validate", fx("no-such-file.hrg")});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("file not found") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"parse", fx("cycle.hrg")}).code == 2);
  }

  TEST_CASE("translate") {
    const Run g = run({"translate", fx("cycle.hrg")});
    CHECK(g.code == 0);
    CHECK(g.out.find("C ⇒ C ⟨2,0,1⟩ a (C1=C1, C2=a2)") != std::string::npos);
    const Run h = run({"--ascii", "translate", fx("fig1-H.hg")});
    CHECK(h.out.find("a <2,0,1> a <1,1,2>&<2,0,1> b") != std::string::npos);
    const Run ordered = run({"translate", fx("fig1-H.hg"), "--order", "e2,e3,e1"});
    CHECK(ordered.code == 0);
    CHECK(ordered.out.find("a ⟨2,0,1⟩ b") == 0);
    CHECK(run({"translate", fx("disconnected.hrg")}).code == 1);
  }

  TEST_CASE("wf-check, normalize, tables") {
    CHECK(run({"wf-check", fx("cycle.hrg")}).code == 0);
    const Run wf = run({"wf-check", fx("cycle-scrambled.hrg")});
    CHECK(wf.code == 1);
    CHECK(wf.out.find("P2") != std::string::npos);
    const Run n = run({"normalize", fx("cycle-scrambled.hrg")});
    CHECK(n.code == 0);
    CHECK(n.out.find("P2: simple (2,1)") != std::string::npos);
    CHECK(run({"normalize", fx("unfixable.hrg"), "--max-duplicates", "0"}).code == 1);
    const Run t = run({"tables", fx("cycle.hrg")});
    CHECK(t.code == 0);
    CHECK(t.out.find("states 7") != std::string::npos);
    CHECK(run({"tables", fx("cycle-dup.hrg")}).code == 1);
  }

  TEST_CASE("parse") {
    const Run ok = run({"parse", fx("cycle.hrg"), fx("fig1-H.hg")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("accept") != std::string::npos);
    CHECK(run({"parse", fx("cycle.hrg"), fx("open-chain.hg")}).code == 1);
    CHECK(run({"parse", fx("cycle.hrg"), fx("fig1-H.hg"), "--start-edge", "e2"}).code == 0);
    CHECK(run({"parse", fx("cycle.hrg"), fx("fig1-H.hg"), "--all-starts"}).code == 0);
  }

  TEST_CASE("json report") {
    const Run r = run({"--json", "parse", fx("cycle.hrg"), fx("fig1-H.hg")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "parse");
    CHECK(j.at("outcome") == "ok");
    CHECK(j.at("inputs").size() == 2);
    CHECK(j.contains("elapsed_ms"));
    CHECK(j.at("payload").at("result").at("outcome") == "accept");
  }

  TEST_CASE("enumerate and oracle") {
    const Run e = run({"enumerate", fx("cycle.hrg"), "-k", "3"});
    CHECK(e.code == 0);
    CHECK(e.out.find("9") != std::string::npos);
    const Run o = run({"oracle", fx("cycle.hrg"), "-k", "4", "--mutations", "20"});
    CHECK(o.code == 0);
  }
}
