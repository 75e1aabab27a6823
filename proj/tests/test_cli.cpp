#include "test_support.hpp"

#include "roughcat/approx.hpp"
#include "roughcat/cli.hpp"
#include "roughcat/context.hpp"
#include "roughcat/schema.hpp"
#include "roughcat/table.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace roughcat;
using nlohmann::json;
using testing::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "roughcat");
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) a = fixture(a.substr(1));
  }
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> tuples(const json& entries) {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(format_key(e["tuple"].get<std::vector<std::string>>()));
  return out;
}

}  // namespace

TEST_SUITE("validate") {
  TEST_CASE("a clean schema and table") {
    const auto r = run({"validate", "--schema", "@ex_simple.json", "--table", "@ex_simple.csv"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("context: 12 objects, 8 attribute tuples") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }

  TEST_CASE("the schema alone") {
    CHECK(run({"validate", "--schema", "@ex_enriched.json"}).code == exit_ok);
  }

  TEST_CASE("a non-transitive similarity") {
    const auto r = run({"validate", "--schema", "@broken_similarity.json"});
    CHECK(r.code == exit_failed);
    CHECK(r.out.find("transitivity (blue, red, yellow)") != std::string::npos);
  }
}

TEST_SUITE("approximate") {
  TEST_CASE("both approximations as JSON") {
    const auto r = run({"approximate", "--table", "@ex_simple.csv", "--schema", "@ex_simple.json"});
    REQUIRE(r.code == exit_ok);
    const auto doc = r.doc();
    REQUIRE(doc["results"].size() == 2);
    CHECK(doc["results"][0]["kind"] == "upper");
    CHECK(tuples(doc["results"][0]["entries"]) ==
          std::set<std::string>{"(red,low)", "(yellow,low)", "(red,high)", "(yellow,high)", "(white,high)"});
    CHECK(tuples(doc["results"][1]["entries"]) == std::set<std::string>{"(red,low)", "(red,high)", "(yellow,high)"});
  }

  TEST_CASE("lifted lower approximation") {
    const auto r =
        run({"approximate", "--table", "@ex_simple.csv", "--schema", "@ex_simple.json", "--kind", "lower", "--lift"});
    REQUIRE(r.code == exit_ok);
    CHECK(tuples(r.doc()["entries"]) == std::set<std::string>{"0", "1", "6", "9"});
  }

  TEST_CASE("graded output matches the library") {
    const auto r = run({"approximate", "--table", "@ex_enriched.csv", "--schema", "@ex_enriched.json", "--kind",
                        "upper"});
    REQUIRE(r.code == exit_ok);
    const auto ctx = build_context(read_table(fixture("ex_enriched.csv")), read_schema(fixture("ex_enriched.json")));
    const auto up = upper(ctx.map, ctx.decision);
    const auto entries = r.doc()["entries"];
    REQUIRE(entries.size() == ctx.space->size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      CHECK(entries[i]["grade"] == ctx.algebra->format(up[i]));
    }
  }

  TEST_CASE("text table output") {
    const auto r =
        run({"approximate", "--table", "@ex_simple.csv", "--schema", "@ex_simple.json", "--format", "table"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("# upper") != std::string::npos);
    CHECK(r.out.find("# lower") != std::string::npos);
    CHECK(r.out.find("(white,high)") != std::string::npos);
  }

  TEST_CASE("bad arguments and inputs") {
    CHECK(run({"approximate", "--table", "@no_such.csv", "--schema", "@ex_simple.json"}).code == exit_io);
    CHECK(run({"approximate", "--table", "@ex_simple.csv", "--schema", "@no_such.json"}).code == exit_io);
    CHECK(run({"approximate", "--table", "@ex_simple.csv", "--schema", "@ex_simple.json", "--kind", "sideways"}).code ==
          exit_failed);
    CHECK(run({"approximate", "--table", "@ex_simple.csv", "--schema", "@ex_simple.json", "--format", "xml"}).code ==
          exit_failed);
    CHECK(run({"approximate", "--table", "@ex_enriched.csv", "--schema", "@ex_simple.json"}).code == exit_failed);
    CHECK(run({"approximate", "--schema", "@ex_simple.json"}).code == exit_failed);
    CHECK(run({"frobnicate"}).code == exit_failed);
    const auto missing = run({"approximate", "--table", "@no_such.csv", "--schema", "@ex_simple.json"});
    CHECK_FALSE(missing.err.empty());
  }

  TEST_CASE("help") {
    const auto r = run({"--help"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("approximate") != std::string::npos);
  }
}

TEST_SUITE("reduce") {
  TEST_CASE("colour and level suffice") {
    const auto r = run({"reduce", "--table", "@reduction3.csv", "--schema", "@reduction3.json", "--subset", "1,2"});
    REQUIRE(r.code == exit_ok);
    const auto doc = r.doc();
    CHECK(doc["reducible"] == true);
    CHECK(doc["projection"] == json::array({"attribute 1", "attribute 2"}));
    CHECK_FALSE(doc.contains("witness"));
  }

  TEST_CASE("level alone does not") {
    const auto r = run({"reduce", "--table", "@reduction3.csv", "--schema", "@reduction3.json", "--subset", "2"});
    REQUIRE(r.code == exit_ok);
    const auto doc = r.doc();
    CHECK(doc["reducible"] == false);
    CHECK(doc["witness"].contains("first"));
    CHECK(doc["witness"].contains("second"));
    CHECK(doc["witness"]["reason"].is_string());
  }

  TEST_CASE("minimal reducts") {
    const auto r = run({"reduce", "--table", "@reduction3.csv", "--schema", "@reduction3.json", "--minimal"});
    REQUIRE(r.code == exit_ok);
    CHECK(r.doc()["minimal_reducts"] ==
          json::array({json::array({"attribute 1", "attribute 2"}), json::array({"attribute 1", "attribute 3"})}));
  }

  TEST_CASE("subset errors") {
    for (const auto* subset : {"0", "4", "x", ""}) {
      CAPTURE(subset);
      CHECK(run({"reduce", "--table", "@reduction3.csv", "--schema", "@reduction3.json", "--subset", subset}).code ==
            exit_failed);
    }
    CHECK(run({"reduce", "--table", "@reduction3.csv", "--schema", "@reduction3.json"}).code == exit_failed);
  }
}

TEST_SUITE("update") {
  TEST_CASE("added rows") {
    const auto r = run({"update", "--old", "@ex_simple.csv", "--new", "@update_add.csv", "--schema", "@ex_simple.json"});
    REQUIRE(r.code == exit_ok);
    const auto doc = r.doc();
    REQUIRE(doc["upper_delta"].size() == 1);
    CHECK(doc["upper_delta"][0]["tuple"] == json::array({"blue", "high"}));
    CHECK(doc["upper_delta"][0]["change"] == "+");
    REQUIRE(doc["lower_delta"].size() == 1);
    CHECK(doc["lower_delta"][0]["tuple"] == json::array({"yellow", "high"}));
    CHECK(doc["lower_delta"][0]["change"] == "-");
    CHECK(doc["monotone"] == true);
  }

  TEST_CASE("merged duplicates") {
    const auto r = run({"update", "--old", "@update_add.csv", "--new", "@update_merge.csv", "--schema",
                        "@ex_simple.json", "--map", "1=0,8=7"});
    REQUIRE(r.code == exit_ok);
    CHECK(r.doc()["upper_delta"].empty());
    CHECK(r.doc()["lower_delta"].empty());
  }

  TEST_CASE("incomplete or inconsistent maps") {
    CHECK(run({"update", "--old", "@update_add.csv", "--new", "@update_merge.csv", "--schema", "@ex_simple.json",
               "--map", "1=0"})
              .code == exit_failed);
    CHECK(run({"update", "--old", "@update_add.csv", "--new", "@update_merge.csv", "--schema", "@ex_simple.json",
               "--map", "1=0,8=2"})
              .code == exit_failed);
    CHECK(run({"update", "--old", "@update_add.csv", "--new", "@update_merge.csv", "--schema", "@ex_simple.json",
               "--map", "1-0"})
              .code == exit_failed);
  }
}

TEST_SUITE("guess") {
  TEST_CASE("middle levels") {
    const auto r = run({"guess", "--table", "@ex_simple.csv", "--schema", "@ex_preorder.json"});
    REQUIRE(r.code == exit_ok);
    const auto doc = r.doc();
    std::map<std::string, std::string> classes;
    for (const auto& rule : doc["rules"])
      classes[format_key(rule["tuple"].get<std::vector<std::string>>())] = rule["class"].get<std::string>();
    const std::map<std::string, std::string> expect = {{"(red,middle)", "confirmed"},
                                                       {"(blue,middle)", "excluded"},
                                                       {"(yellow,middle)", "confirmed"},
                                                       {"(white,middle)", "excluded"}};
    CHECK(classes == expect);
  }

  TEST_CASE("graded threshold on three attributes") {
    const auto r = run({"guess", "--table", "@ex_enriched.csv", "--schema", "@ex_enriched3.json", "--threshold", "1/2"});
    REQUIRE(r.code == exit_ok);
    const auto doc = r.doc();
    CHECK(doc["threshold"] == "1/2");
    const auto& rules = doc["rules"];
    CHECK(rules.size() == 14);
    const auto l = unit_product();
    const auto half = l->parse("1/2");
    for (const auto& rule : rules) {
      const bool u = l->leq(half, l->parse(rule["upper"].get<std::string>()));
      const bool lo = l->leq(half, l->parse(rule["lower"].get<std::string>()));
      const std::string expect = u ? (lo ? "confirmed" : "possible") : (lo ? "unsupported" : "excluded");
      CHECK(rule["class"] == expect);
    }
  }

  TEST_CASE("nothing unseen") {
    const auto r = run({"guess", "--table", "@ex_simple.csv", "--schema", "@ex_simple.json"});
    REQUIRE(r.code == exit_ok);
    CHECK(r.doc()["rules"].empty());
  }

  TEST_CASE("threshold outside the lattice") {
    CHECK(run({"guess", "--table", "@ex_enriched.csv", "--schema", "@ex_enriched3.json", "--threshold", "2"}).code ==
          exit_failed);
  }
}

TEST_SUITE("compose") {
  TEST_CASE("two steps agree with one") {
    const auto r = run({"compose", "--table", "@ex_enriched.csv", "--schema", "@ex_enriched3.json", "--schema2",
                        "@ex_enriched.json"});
    REQUIRE(r.code == exit_ok);
    const auto doc = r.doc();
    CHECK(doc["upper_compositional"] == true);
    CHECK(doc["lower_compositional"] == true);
    CHECK(doc["upper"]["entries"].size() == 8);
  }

  TEST_CASE("a second schema naming unknown attributes") {
    CHECK(run({"compose", "--table", "@ex_simple.csv", "--schema", "@ex_simple.json", "--schema2",
               "@reduction3.json"})
              .code == exit_failed);
  }
}
