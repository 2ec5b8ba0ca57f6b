#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "skewschur/cli.hpp"

using namespace skewschur;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand subcommand") {
  RunResult r = run_cli({"expand", "3,3,2,2,1,1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1*[3,3,2,1,1] + 1*[3,2,2,2,1] + 1*[3,2,2,1,1,1]\n");

  SECTION("staircase shorthand matches the explicit shape") {
    RunResult s = run_cli({"expand", "^2,2,2/2"});
    CHECK(s.code == 0);
    CHECK(s.out == r.out);
  }

  SECTION("rotated staircase of a single row is a straight shape") {
    RunResult s = run_cli({"expand", "^^1,3"});
    CHECK(s.code == 0);
    CHECK(s.out == "1*[2,2,2,1]\n");
  }

  SECTION("empty shape needs the positional escape") {
    RunResult s = run_cli({"expand", "--", "-/-"});
    CHECK(s.code == 0);
    CHECK(s.out == "1*[]\n");
  }

  SECTION("foundation options feed the attachment") {
    RunResult s =
        run_cli({"expand", "2,2,2,2,1/1,1", "--foundation", "2,2", "--k", "1"});
    CHECK(s.code == 0);
    SkewDiagram d = build_foundation(Partition{2, 2}, Partition(),
                                     parse_skew("2,2,2,2,1/1,1"), 1);
    CHECK(s.out == to_text(skew_schur(d)) + "\n");
  }

  SECTION("--inner requires --foundation") {
    RunResult s = run_cli({"expand", "2,2", "--inner", "1"});
    CHECK(s.code == 2);
    CHECK(s.out.empty());
    CHECK_FALSE(s.err.empty());
  }

  SECTION("json output matches the library encoding") {
    RunResult s = run_cli({"expand", "2,2,2,2/1,1", "--json"});
    CHECK(s.code == 0);
    nlohmann::json j = nlohmann::json::parse(s.out);
    CHECK(j == to_json(skew_schur(parse_skew("2,2,2,2/1,1"))));
  }
}

TEST_CASE("lr and product subcommands") {
  RunResult r = run_cli({"lr", "3,2,1", "2,1", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  RunResult j = run_cli({"lr", "3,2,1", "2,1", "2,1", "--json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out) == nlohmann::json{{"coefficient", 2}});

  RunResult zero = run_cli({"lr", "2,1", "1", "1"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "0\n");

  RunResult p = run_cli({"product", "2,1", "1,1"});
  CHECK(p.code == 0);
  CHECK(p.out == to_text(schur_product(Partition{2, 1}, Partition{1, 1})) + "\n");

  RunResult pj = run_cli({"product", "2,1", "1,1", "--json"});
  CHECK(pj.code == 0);
  CHECK(nlohmann::json::parse(pj.out) ==
        to_json(schur_product(Partition{2, 1}, Partition{1, 1})));
}

TEST_CASE("classify subcommand") {
  RunResult sum = run_cli({"classify", "2,2,2,2,1/1,1"});
  CHECK(sum.code == 0);
  CHECK(sum.out ==
        "sum of fat staircases\n"
        "alpha=1,3 coeff=1\n"
        "alpha=3,2 coeff=1\n");

  RunResult no = run_cli({"classify", "2,2"});
  CHECK(no.code == 0);
  CHECK(no.out ==
        "not a sum of fat staircases\n"
        "witness=1,1;2,2\n"
        "content=2,2\n");

  RunResult j = run_cli({"classify", "2,2", "--json"});
  CHECK(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["verdict"] == "not_sum");
  CHECK(doc["witness"] == "1,1;2,2");
  CHECK(doc["decomposition"].is_null());

  RunResult js = run_cli({"classify", "2,2,2,2,1/1,1", "--json"});
  nlohmann::json sdoc = nlohmann::json::parse(js.out);
  CHECK(sdoc["verdict"] == "sum");
  CHECK(sdoc["witness"].is_null());
  CHECK(sdoc["decomposition"].size() == 2);
}

TEST_CASE("build-s subcommand") {
  RunResult r =
      run_cli({"build-s", "2,2,2,2,1/1,1", "--foundation", "2,2", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "3,3,3,3,2,2,2/2,2,1,1,1\n");

  SECTION("infeasible offset is a domain error") {
    RunResult s =
        run_cli({"build-s", "2,2,2,2,1/1,1", "--foundation", "2,2", "--k", "0"});
    CHECK(s.code == 1);
    CHECK_FALSE(s.err.empty());
  }
}

TEST_CASE("cut verification subcommands") {
  RunResult row = run_cli({"verify-rowcut", "2,2", "1"});
  CHECK(row.code == 0);
  CHECK(row.out == "rowcut alpha=2,2 m=1 predicate=sum classifier=sum agree=yes\n");

  RunResult rowno = run_cli({"verify-rowcut", "1,2", "1"});
  CHECK(rowno.code == 0);
  CHECK(rowno.out ==
        "rowcut alpha=1,2 m=1 predicate=not_sum classifier=not_sum agree=yes\n");

  RunResult col = run_cli({"verify-colcut", "2,2", "2"});
  CHECK(col.code == 0);
  CHECK(col.out ==
        "colcut alpha=2,2 m=2 predicate=not_sum classifier=not_sum agree=yes\n");

  RunResult colj = run_cli({"verify-colcut", "2,2", "3", "--json"});
  CHECK(colj.code == 0);
  nlohmann::json doc = nlohmann::json::parse(colj.out);
  CHECK(doc["predicate"] == "sum");
  CHECK(doc["classifier"] == "sum");
  CHECK(doc["agree"] == true);

  SECTION("out of range m is a domain error") {
    RunResult s = run_cli({"verify-rowcut", "2,2", "5"});
    CHECK(s.code == 1);
  }
}

TEST_CASE("verify-positivity subcommand") {
  RunResult fat = run_cli({"verify-positivity", "--check", "sumoffat", "--shape",
                           "2,2,2,2,1/1,1", "--foundation", "2,2", "--k", "1"});
  CHECK(fat.code == 0);
  CHECK(fat.out.find("difference: 1*[3,3,2,2,1] + 1*[3,3,2,1,1,1] + 1*[3,2,2,2,1,1]\n") !=
        std::string::npos);
  CHECK(fat.out.find("positive: yes\n") != std::string::npos);

  RunResult rect = run_cli({"verify-positivity", "--check", "rect", "--shape",
                            "2,2,2,2,1/1,1", "--foundation", "2,2", "--k", "1", "--json"});
  CHECK(rect.code == 0);
  nlohmann::json rdoc = nlohmann::json::parse(rect.out);
  CHECK(rdoc["verdict"] == "positive");
  CHECK(rdoc["instance"] == "S(2,2/-, 2,2,2,2,1/1,1; k=1)");
  CHECK(rdoc["lhs"].is_array());

  RunResult tr = run_cli({"verify-positivity", "--check", "transpose", "--alpha",
                          "2,2", "--foundation", "2", "--k", "1"});
  CHECK(tr.code == 0);
  CHECK(tr.out.find("positive: yes\n") != std::string::npos);

  RunResult diff = run_cli({"verify-positivity", "--check", "sumofdiff", "--shape",
                            "2,2,2,2,1/1,1", "--foundation", "2"});
  CHECK(diff.code == 0);
  CHECK(diff.out.find("column_residual: 0\n") != std::string::npos);
  CHECK(diff.out.find("positive: yes\n") != std::string::npos);

  SECTION("per-check required options") {
    CHECK(run_cli({"verify-positivity", "--check", "sumoffat", "--shape", "2,2"}).code == 2);
    CHECK(run_cli({"verify-positivity", "--check", "transpose", "--foundation", "2"}).code == 2);
    CHECK(run_cli({"verify-positivity", "--check", "sumofdiff", "--shape", "1",
                   "--foundation", "1", "--k", "0"})
              .code == 2);
    CHECK(run_cli({"verify-positivity", "--check", "bogus", "--shape", "1",
                   "--foundation", "1"})
              .code == 2);
  }

  SECTION("precondition failures exit 1") {
    RunResult s = run_cli({"verify-positivity", "--check", "sumoffat", "--shape", "2,2",
                           "--foundation", "1", "--k", "0"});
    CHECK(s.code == 1);
    CHECK(s.err.find("not a sum") != std::string::npos);
  }
}

TEST_CASE("sweep subcommand") {
  RunResult row = run_cli({"sweep", "--theorem", "rowcut", "--max-size", "3"});
  CHECK(row.code == 0);
  CHECK(row.out.find("ok rowcut alpha=1,1 m=1\n") != std::string::npos);
  CHECK(row.out.find("checked 5 instances, 0 failures\n") != std::string::npos);
  CHECK(row.out.find("FAIL") == std::string::npos);

  RunResult dc = run_cli({"sweep", "--theorem", "distinct-columns", "--max-size", "4",
                          "--json"});
  CHECK(dc.code == 0);
  nlohmann::json doc = nlohmann::json::parse(dc.out);
  CHECK(doc["theorem"] == "distinct-columns");
  CHECK(doc["instances"] == 41);
  CHECK(doc["failures"] == 0);

  RunResult fat = run_cli({"sweep", "--theorem", "sumoffat", "--max-size", "4",
                           "--max-foundation", "2", "--json"});
  CHECK(fat.code == 0);
  CHECK(nlohmann::json::parse(fat.out)["failures"] == 0);

  RunResult tr = run_cli({"sweep", "--theorem", "transpose", "--max-size", "3",
                          "--max-row", "2", "--json"});
  CHECK(tr.code == 0);
  CHECK(nlohmann::json::parse(tr.out)["failures"] == 0);

  RunResult sd = run_cli({"sweep", "--theorem", "sumofdiff", "--max-size", "4",
                          "--max-row", "2", "--json"});
  CHECK(sd.code == 0);
  CHECK(nlohmann::json::parse(sd.out)["failures"] == 0);

  SECTION("usage errors") {
    CHECK(run_cli({"sweep", "--theorem", "rowcut"}).code == 2);
    CHECK(run_cli({"sweep", "--theorem", "nosuch", "--max-size", "3"}).code == 2);
    CHECK(run_cli({"sweep", "--theorem", "rowcut", "--max-size", "0"}).code == 2);
  }
}

TEST_CASE("exit codes for malformed input and help") {
  CHECK(run_cli({"expand", "a,b"}).code == 2);
  CHECK(run_cli({"expand", "2/3"}).code == 1);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"nosuch"}).code == 2);

  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("expand") != std::string::npos);
  CHECK(help.out.find("sweep") != std::string::npos);

  RunResult sub = run_cli({"classify", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("certificate") != std::string::npos);
}
