#include "analysis.hpp"
#include "errors.hpp"
#include "model_file.hpp"
#include "report.hpp"

#include <doctest.h>

using namespace ksseq;

namespace {

std::string hopf_text = R"({
  "format": "ksseq-model/1",
  "kind": "invariant",
  "name": "hopf",
  "n": 1,
  "s": 1,
  "lambdas": ["1"],
  "base": {"dims": [1, 0, 1], "L": [[["1"]], [], []]}
})";

std::string field_of(const std::string& text)
{
    try {
        parse_model(text);
    } catch (const ParseError& e) {
        return e.field();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("model parse and serialize round trip")
{
    auto m = parse_model(hopf_text);
    CHECK(m.name == "hopf");
    CHECK(m.s == 1);
    CHECK(m.base.dims() == std::vector<std::size_t>{1, 0, 1});
    CHECK(parse_model(serialize_model(m)) == m);
    for (const auto& name : preset_names()) {
        auto p = preset_model(name);
        CHECK(parse_model(serialize_model(p)) == p);
    }
}

TEST_CASE("model validation names the field")
{
    std::string bad = hopf_text;
    CHECK(field_of(R"({"format":"ksseq-model/1","n":1,"s":1,"lambdas":["1"]})") == "base");
    CHECK(field_of(R"({"format":"other"})") == "format");
    CHECK(field_of(R"({"format":"ksseq-model/1","n":1,"s":1,"lambdas":["1/0"],"base":{"dims":[1,0,1],"L":[[["1"]],[],[]]}})")
          == "lambdas[0]");
    CHECK(field_of(R"({"format":"ksseq-model/1","n":1,"s":2,"lambdas":["1"],"base":{"dims":[1,0,1],"L":[[["1"]],[],[]]}})")
          == "lambdas");
    CHECK(field_of(R"({"format":"ksseq-model/1","n":1,"s":1,"lambdas":["1"],"base":{"dims":[1,0,1],"L":[[["1","2"]],[],[]]}})")
          == "base.L[0][0]");
    CHECK(field_of(R"({"format":"ksseq-model/1","n":1,"s":0,"lambdas":[],"base":{"dims":[1,0,1],"L":[[["1"]],[],[]]}})")
          == "s");
    CHECK(field_of("{not json") == "");
    CHECK_THROWS_AS(parse_model(R"({"format":"ksseq-model/1","kind":"filtered-complex","chain_dims":[1,1,1],
        "d":[[["1"]],[["1"]],[]],"levels":[[0],[0],[0]]})"), MalformedComplex);
}

TEST_CASE("presets")
{
    CHECK(preset_names().size() >= 6);
    CHECK_THROWS_AS(preset_model("nope"), NotFound);
    const std::vector<std::pair<std::string, std::vector<long long>>> expected = {
        {"hopf-s3", {1, 0, 0, 1}},       {"s5", {1, 0, 0, 0, 0, 1}},    {"s2xs3", {1, 0, 1, 1, 0, 1}},
        {"torus-t3", {1, 3, 3, 1}},      {"torus-t4", {1, 4, 6, 4, 1}}, {"s3xs1", {1, 1, 0, 1, 1}},
    };
    for (const auto& [name, betti] : expected) {
        auto r = analyze(preset_model(name));
        CHECK_MESSAGE(r.betti == betti, name);
        CHECK_MESSAGE(r.passed(), name);
    }
}

TEST_CASE("generation is deterministic and respects types")
{
    GenerateOptions o;
    o.seed = 42;
    o.n = 2;
    o.s = 2;
    CHECK(serialize_model(generate_model(o)) == serialize_model(generate_model(o)));
    o.type = StructureType::C;
    for (const auto& l : generate_model(o).lambdas)
        CHECK(l == 0);
    o.type = StructureType::Mixed;
    auto mixed = generate_model(o);
    CHECK(InvariantComplex::build(mixed.base, mixed.s, mixed.lambdas).structure() == StructureType::Mixed);
    o.n = 7;
    CHECK_THROWS_AS(generate_model(o), DimensionMismatch);
    CHECK(parse_structure_type("mixed") == StructureType::Mixed);
    CHECK(parse_structure_type("s") == StructureType::S);
    CHECK_THROWS_AS(parse_structure_type("K"), ParseError);
}

TEST_CASE("report JSON round trip and text")
{
    for (const auto& name : preset_names()) {
        auto r = analyze(preset_model(name));
        CHECK(report_from_json(report_to_json(r)) == r);
        CHECK(report_to_json(analyze(preset_model(name))) == report_to_json(r));
    }
    auto text = report_to_text(analyze(preset_model("hopf-s3")));
    CHECK(text.find("E_3") != std::string::npos);
    CHECK(text.find("RESULT: pass") != std::string::npos);
    CHECK_THROWS_AS(report_from_json("{}"), ParseError);
    auto timed = analyze(preset_model("hopf-s3"), {true});
    CHECK(timed.timing_us > 0);
}

TEST_CASE("bare filtered complex analysis")
{
    auto m = parse_model(R"({"format":"ksseq-model/1","kind":"filtered-complex","name":"interval",
        "chain_dims":[2,1],"d":[[["1","-1"]],[]],"levels":[[0,1],[1]]})");
    auto r = analyze(m);
    CHECK(r.kind == "filtered-complex");
    CHECK(r.betti == std::vector<long long>{1, 0});
    CHECK(r.passed());
    CHECK(parse_model(serialize_model(m)) == m);
}

TEST_CASE("form parsing")
{
    CHECK(to_string(parse_form(2, "e1^e2 - 1/2 e3^e4")) == "e1^e2 - 1/2 e3^e4");
    CHECK(parse_form(1, "3/2").degree() == 0);
    CHECK(parse_form(2, "e2^e1") == parse_form(2, "-e1^e2"));
    CHECK_THROWS_AS(parse_form(1, "e3"), ParseError);
    CHECK_THROWS_AS(parse_form(2, "e1 + e1^e2"), ParseError);
    CHECK_THROWS_AS(parse_form(2, ""), ParseError);
}

TEST_CASE("star check and identities")
{
    auto r = star_check(1, 1);
    CHECK(r.passed());
    CHECK(r.cases == 8);
    CHECK(star_check(2, 2).passed());
    CHECK(star_check(0, 1).passed());
    for (unsigned n = 0; n <= 2; ++n)
        for (const auto& c : operator_identities(n))
            CHECK_MESSAGE(c.passed(), c.name);
}
