#include "examples.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include "roughcat/context.hpp"
#include "roughcat/schema.hpp"
#include "roughcat/serialize.hpp"
#include "roughcat/table.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace roughcat;
using examples::q;
using testing::error_kind;
using testing::fixture;

namespace {

const char* two_attribute_schema = R"({
  "lattice": "bool2",
  "attributes": [
    {"name": "colour", "values": ["red", "blue"]},
    {"name": "size", "values": ["s", "l"]}
  ],
  "decision": {"binary": {"target": "yes"}}
})";

DecisionContext load(const std::string& csv, const std::string& schema) {
  return build_context(read_table(fixture(csv)), read_schema(fixture(schema)));
}

}  // namespace

TEST_SUITE("tables") {
  TEST_CASE("the two-attribute fixture") {
    const auto t = read_table(fixture("ex_simple.csv"));
    CHECK(t.id_column == "object");
    CHECK(t.attribute_names == std::vector<std::string>{"attribute 1", "attribute 2"});
    CHECK(t.decision_name == "answer");
    REQUIRE(t.rows.size() == 12);
    CHECK(t.rows[4].attributes == std::vector<std::string>{"yellow", "low"});
    CHECK(t.rows[4].decision.text == "yes");
    CHECK_FALSE(t.rows[4].decision.value.has_value());
    CHECK(t.attribute_index("attribute 2") == 1);
    CHECK_FALSE(t.attribute_index("answer").has_value());
  }

  TEST_CASE("fractions in the decision column are exact") {
    const auto t = read_table(fixture("ex_enriched.csv"));
    REQUIRE(t.rows.size() == 12);
    CHECK(*t.rows[0].decision.value == Rational(9, 10));
    CHECK(*t.rows[3].decision.value == Rational(7, 20));
  }

  TEST_CASE("decimal and fraction spellings agree") {
    const auto t = parse_table("id,a,d\n0,x,0.35\n1,x,35/100\n2,x,7/20\n");
    for (const auto& row : t.rows) CHECK(*row.decision.value == Rational(7, 20));
  }

  TEST_CASE("quoting and trimming") {
    const auto t = parse_table("id, a ,d\n\"0\",\"x, y\",\"say \"\"hi\"\"\"\n 1 , z ,no\n");
    CHECK(t.attribute_names == std::vector<std::string>{"a"});
    CHECK(t.rows[0].attributes[0] == "x, y");
    CHECK(t.rows[0].decision.text == "say \"hi\"");
    CHECK(t.rows[1].id == "1");
    CHECK(t.rows[1].attributes[0] == "z");
  }

  TEST_CASE("write and parse round trip") {
    auto t = read_table(fixture("ex_enriched.csv"));
    t.rows[2].attributes[0] = "blue, dark";
    t.rows[3].decision.text = "note \"x\"";
    t.rows[3].decision.value.reset();
    const auto back = parse_table(write_table(t));
    CHECK(back.attribute_names == t.attribute_names);
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      CHECK(back.rows[i].id == t.rows[i].id);
      CHECK(back.rows[i].attributes == t.rows[i].attributes);
      CHECK(back.rows[i].decision.text == t.rows[i].decision.text);
    }
  }

  TEST_CASE("header only") {
    const auto t = parse_table("id,colour,size,answer\n");
    CHECK(t.rows.empty());
    const auto ctx = build_context(t, parse_schema(two_attribute_schema));
    CHECK(ctx.objects->size() == 0);
    const auto up = upper(ctx.map, ctx.decision);
    const auto lo = lower(ctx.map, ctx.decision);
    for (std::size_t i = 0; i < ctx.space->size(); ++i) {
      CHECK_FALSE(up[i].as_bool());
      CHECK(lo[i].as_bool());
    }
  }

  TEST_CASE("malformed tables") {
    CHECK(error_kind([] { parse_table("id,a,d\n0,x\n"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { parse_table("id,a,d\n0,x,yes\n0,y,no\n"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { parse_table("id,a,d\n0,x,0.3.5\n"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { parse_table("id,a,d\n0,\"x,yes\n"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { parse_table(""); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { parse_table("id\n"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { read_table(fixture("no_such_table.csv")); }) == ErrorKind::parse_error);
  }
}

TEST_SUITE("schemas") {
  TEST_CASE("fixture schemas parse") {
    const auto s = read_schema(fixture("ex_enriched.json"));
    CHECK(s.algebra->kind() == AlgebraKind::unit_product);
    REQUIRE(s.attributes.size() == 2);
    CHECK(s.attributes[0].similarity.has_value());
    CHECK(s.decision.mode == DecisionSpec::Mode::graded);
    CHECK(s.ignored_columns == std::vector<std::string>{"attribute 3"});
    const auto p = read_schema(fixture("ex_preorder.json"));
    CHECK(p.attributes[1].edges.size() == 2);
    CHECK(read_schema(fixture("reduction3.json")).space == SpaceMode::observed);
  }

  TEST_CASE("missing keys are named") {
    try {
      parse_schema(R"({"lattice": "bool2"})");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse_error);
      CHECK(std::string(e.what()).find("attributes") != std::string::npos);
    }
    CHECK(error_kind([] { parse_schema(R"({"attributes": []})"); }) == ErrorKind::parse_error);
  }

  TEST_CASE("other schema problems") {
    CHECK(error_kind([] { parse_schema("{"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] { parse_schema(R"({"lattice": "three", "attributes": []})"); }) == ErrorKind::parse_error);
    CHECK(error_kind([] {
            parse_schema(R"({"lattice": "bool2", "attributes": [{"name": "a", "values": []}]})");
          }) == ErrorKind::parse_error);
    CHECK(error_kind([] {
            parse_schema(R"({"lattice": "bool2", "attributes": [{"name": "a", "values": ["x"]},
                                                                {"name": "a", "values": ["y"]}]})");
          }) == ErrorKind::parse_error);
    CHECK(error_kind([] {
            parse_schema(R"({"lattice": "bool2", "attributes": [], "space": "sideways"})");
          }) == ErrorKind::parse_error);
    CHECK(error_kind([] {
            parse_schema(R"({"lattice": "bool2", "attributes": [], "decision": {"vote": {}}})");
          }) == ErrorKind::parse_error);
  }

  TEST_CASE("finite table lattices") {
    const auto s = parse_schema(R"({
      "lattice": {"finite_table": {
        "carrier": ["0", "1"],
        "meet": [["0", "0"], ["0", "1"]],
        "join": [["0", "1"], ["1", "1"]],
        "tensor": [["0", "0"], ["0", "1"]],
        "residual": [["1", "1"], ["0", "1"]],
        "unit": "1"}},
      "attributes": [{"name": "a", "values": ["x"]}]
    })");
    CHECK(s.algebra->carrier()->size() == 2);
  }

  TEST_CASE("metric attributes become powers of one half") {
    const auto s = parse_schema(R"({"lattice": "unit_product", "attributes": [
      {"name": "size", "values": ["s", "m", "l"], "metric": [[0, 1, 2], [1, 0, 1], [2, 1, 0]]}]})");
    const auto built = build_attribute(s.attributes[0], s.algebra);
    CHECK(built.errors.ok());
    CHECK(built.category->hom(0, 2) == q("1/4"));
  }

  TEST_CASE("broken similarity is reported with a witness") {
    const auto s = read_schema(fixture("broken_similarity.json"));
    const auto built = build_attribute(s.attributes[0], s.algebra);
    REQUIRE_FALSE(built.errors.ok());
    CHECK(built.errors.violations[0].rule == "attribute 1: transitivity");
    CHECK(built.errors.violations[0].witness == std::vector<std::string>{"blue", "red", "yellow"});
    CHECK(error_kind([&] { build_factors(s); }) == ErrorKind::verification_failed);
  }

  TEST_CASE("asymmetric similarities warn instead of failing") {
    const auto s = parse_schema(R"({"lattice": "unit_product", "attributes": [
      {"name": "a", "values": ["x", "y"], "similarity": [["1", "1/2"], ["1/4", "1"]], "asymmetric": true}]})");
    const auto built = build_attribute(s.attributes[0], s.algebra);
    CHECK(built.errors.ok());
    CHECK_FALSE(built.warnings.ok());
  }

  TEST_CASE("similarity shape and carrier are checked") {
    CHECK(error_kind([] {
            const auto s = parse_schema(R"({"lattice": "unit_product", "attributes": [
              {"name": "a", "values": ["x", "y"], "similarity": [["1", "1/2"]]}]})");
            build_attribute(s.attributes[0], s.algebra);
          }) == ErrorKind::shape_mismatch);
    CHECK(error_kind([] {
            const auto s = parse_schema(R"({"lattice": "unit_product", "attributes": [
              {"name": "a", "values": ["x", "y"], "similarity": [["1", "2"], ["2", "1"]]}]})");
            build_attribute(s.attributes[0], s.algebra);
          }).has_value());
  }
}

TEST_SUITE("contexts") {
  TEST_CASE("attribute spaces of the fixtures") {
    CHECK(load("ex_simple.csv", "ex_simple.json").space->size() == 8);
    CHECK(load("ex_simple.csv", "ex_preorder.json").space->size() == 12);
    CHECK(load("reduction3.csv", "reduction3.json").space->size() == 10);
    const auto e = load("ex_enriched.csv", "ex_enriched.json");
    CHECK(e.space->size() == 8);
    CHECK(e.decision[0] == q("9/10"));
    CHECK(e.space->hom(e.space->index_of({"red", "low"}), e.space->index_of({"yellow", "low"})) == q("1/2"));
    CHECK(e.space->hom(e.space->index_of({"red", "low"}), e.space->index_of({"red", "high"})) == q("0"));
  }

  TEST_CASE("built contexts pass validation") {
    for (const auto& [csv, schema] : std::vector<std::pair<std::string, std::string>>{
             {"ex_simple.csv", "ex_simple.json"},
             {"ex_simple.csv", "ex_preorder.json"},
             {"ex_enriched.csv", "ex_enriched.json"},
             {"ex_enriched.csv", "ex_enriched3.json"},
             {"reduction3.csv", "reduction3.json"}}) {
      CAPTURE(schema);
      const auto ctx = load(csv, schema);
      CHECK(validate_category(*ctx.space).ok());
      CHECK(validate_functor(ctx.map).ok());
      CHECK(validate_predicate(ctx.decision).ok());
      CHECK(ctx.objects->size() == 12);
    }
  }

  TEST_CASE("the loaded context matches the hand-built one") {
    const auto ctx = load("ex_enriched.csv", "ex_enriched.json");
    const auto p = examples::enriched();
    CHECK(*ctx.space == *p.r.target());
    CHECK(ctx.map.map() == p.r.map());
    CHECK(ctx.decision.grades() == p.mu.grades());
    CHECK(ctx.object_id(3) == "3");
    CHECK(ctx.object_index("11") == 11);
  }

  TEST_CASE("a given space is reused") {
    const auto added = load("update_add.csv", "ex_simple.json");
    const auto before = build_context(read_table(fixture("ex_simple.csv")), read_schema(fixture("ex_simple.json")),
                                      added.space);
    CHECK(before.space == added.space);
  }

  TEST_CASE("table and schema must agree") {
    const auto schema = parse_schema(two_attribute_schema);
    CHECK(error_kind([&] { build_context(parse_table("id,colour,size,answer\n0,green,s,yes\n"), schema); }) ==
          ErrorKind::parse_error);
    CHECK(error_kind([&] { build_context(parse_table("id,colour,answer\n0,red,yes\n"), schema); }) ==
          ErrorKind::parse_error);
    CHECK(error_kind([&] { build_context(parse_table("id,colour,size,extra,answer\n0,red,s,1,yes\n"), schema); }) ==
          ErrorKind::parse_error);
    try {
      build_context(parse_table("id,colour,size,answer\n0,red,?,yes\n"), schema);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("sentinel") != std::string::npos);
    }
  }

  TEST_CASE("binary decisions") {
    const auto loose = parse_schema(R"({"lattice": "bool2", "attributes": [{"name": "c", "values": ["x"]}]})");
    CHECK(error_kind([&] { build_context(parse_table("id,c,d\n0,x,maybe\n"), loose); }) == ErrorKind::parse_error);
    const auto ctx = build_context(parse_table("id,c,d\n0,x,yes\n1,x,no\n"), loose);
    CHECK(ctx.decision[0].as_bool());
    CHECK_FALSE(ctx.decision[1].as_bool());
    const auto targeted = parse_schema(
        R"({"lattice": "bool2", "attributes": [{"name": "c", "values": ["x"]}], "decision": {"binary": {"target": "ok"}}})");
    const auto t = build_context(parse_table("id,c,d\n0,x,ok\n1,x,maybe\n"), targeted);
    CHECK(t.decision[0].as_bool());
    CHECK_FALSE(t.decision[1].as_bool());
  }

  TEST_CASE("graded decisions outside the carrier are refused") {
    const auto s = parse_schema(R"({"lattice": "unit_product", "attributes": [{"name": "c", "values": ["x"]}],
                                    "decision": "graded"})");
    CHECK(error_kind([&] { build_context(parse_table("id,c,d\n0,x,3/2\n"), s); }) == ErrorKind::parse_error);
    CHECK(build_context(parse_table("id,c,d\n0,x,0.25\n"), s).decision[0] == q("1/4"));
  }

  TEST_CASE("multi-valued decisions by threshold") {
    const auto s = parse_schema(R"({"lattice": "bool2", "attributes": [{"name": "c", "values": ["x", "y"]}],
                                    "decision": {"multi": {"threshold": "1/2"}}})");
    CHECK(error_kind([&] { build_context(parse_table("id,c,d\n0,x,3/4\n"), s); }).has_value());
    const auto g = parse_schema(R"({"lattice": "unit_godel", "attributes": [{"name": "c", "values": ["x", "y"]}],
                                    "decision": {"multi": {"threshold": "1/2"}}})");
    const auto ctx = build_context(parse_table("id,c,d\n0,x,3/4\n1,y,1/4\n"), g);
    CHECK(ctx.decision[0] == q("1"));
    CHECK(ctx.decision[1] == q("0"));
  }

  TEST_CASE("multi-valued decisions as flat values") {
    const auto s = parse_schema(R"({"lattice": "bool2", "attributes": [{"name": "c", "values": ["x", "y"]}],
                                    "decision": {"multi": {"flat": ["cat", "dog"]}}})");
    const auto ctx = build_context(parse_table("id,c,d\n0,x,cat\n1,x,dog\n2,y,dog\n"), s);
    const auto& v = *ctx.decision.values();
    const auto up = upper(ctx.map, ctx.decision);
    const auto lo = lower(ctx.map, ctx.decision);
    const auto x = ctx.space->index_of({"x"});
    const auto y = ctx.space->index_of({"y"});
    CHECK(v.format(up[x]) == "top");
    CHECK(v.format(lo[x]) == "bottom");
    CHECK(v.format(up[y]) == "dog");
    CHECK(v.format(lo[y]) == "dog");
    CHECK(error_kind([&] { build_context(parse_table("id,c,d\n0,x,bird\n"), s); }) == ErrorKind::parse_error);
  }

  TEST_CASE("sentinels declared in the schema") {
    const auto s = parse_schema(R"({"lattice": "bool2", "attributes": [
      {"name": "c", "values": ["x", "y"], "sentinels": {"missing": "?", "wildcard": "*"}}]})");
    const auto ctx = build_context(parse_table("id,c,d\n0,*,yes\n1,x,no\n2,?,no\n"), s);
    CHECK(ctx.space->size() == 4);
    const auto up = upper(ctx.map, ctx.decision);
    const auto lo = lower(ctx.map, ctx.decision);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(up[i].as_bool());
      CHECK_FALSE(lo[i].as_bool());
    }
  }
}

TEST_SUITE("serialization") {
  TEST_CASE("crisp results list members only") {
    const auto p = examples::simple();
    const auto doc = result_to_json(upper(p.r, p.mu));
    CHECK(doc["kind"] == "upper");
    REQUIRE(doc["entries"].size() == 5);
    std::set<std::string> tuples;
    for (const auto& e : doc["entries"]) tuples.insert(format_key(e["tuple"].get<std::vector<std::string>>()));
    CHECK(tuples == examples::simple_upper);
    CHECK(doc["entries"][0]["grade"] == "1");
  }

  TEST_CASE("graded results list every tuple with exact and decimal grades") {
    const auto p = examples::enriched();
    const auto doc = nlohmann::json::parse(serialize_result(upper(p.r, p.mu), Format::json));
    REQUIRE(doc["entries"].size() == 8);
    const auto& first = doc["entries"][0];
    CHECK(first["tuple"] == nlohmann::json::array({"red", "low"}));
    CHECK(first["grade"] == "9/10");
    CHECK(first["grade_decimal"].get<double>() == doctest::Approx(0.9));
    bool found = false;
    for (const auto& e : doc["entries"])
      found = found || (e["tuple"] == nlohmann::json::array({"yellow", "low"}) && e["grade"] == "9/20");
    CHECK(found);
  }

  TEST_CASE("an empty result") {
    const auto p = examples::simple();
    const auto none = LPredicate::constant(p.r.source(), bool2(), bool2()->bottom());
    const auto doc = nlohmann::json::parse(serialize_result(upper(p.r, none), Format::json));
    CHECK(doc["entries"].empty());
  }

  TEST_CASE("several results in one document") {
    const auto p = examples::simple();
    const auto doc = nlohmann::json::parse(serialize_results(
        {{"upper", upper(p.r, p.mu).grades}, {"lower", lower(p.r, p.mu).grades}}, Format::json));
    REQUIRE(doc["results"].size() == 2);
    CHECK(doc["results"][1]["kind"] == "lower");
    CHECK(doc["results"][1]["entries"].size() == 3);
  }

  TEST_CASE("text tables") {
    const auto p = examples::enriched();
    const auto text = serialize_result(lower(p.r, p.mu), Format::table);
    CHECK(text.rfind("# lower\n", 0) == 0);
    CHECK(text.find("(white,high)   9/20") != std::string::npos);
    CHECK(text.find("0.45") != std::string::npos);
    CHECK(render_table({"a", "bb"}, {{"ccc", "d"}}) == "a    bb\n---  --\nccc  d\n");
  }

  TEST_CASE("format names") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("table") == Format::table);
    CHECK(error_kind([] { parse_format("xml"); }) == ErrorKind::parse_error);
  }
}
