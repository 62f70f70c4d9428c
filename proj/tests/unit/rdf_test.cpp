#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fria/rdf/canonical.h"
#include "fria/rdf/datetime.h"
#include "fria/rdf/io.h"
#include "checks.h"
#include "random_graph.h"
#include "support.h"

namespace fria::rdf {
namespace {

const Iri kType("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
const Iri kFria("https://w3id.org/dpv/legal/eu/aiact#FRIA");

TEST(Iri, RejectsRelativeAndBlank) {
  EXPECT_THROW(Iri(""), RdfError);
  EXPECT_THROW(Iri("no-scheme"), RdfError);
  EXPECT_THROW(Iri("http://a b"), RdfError);
  EXPECT_NO_THROW(Iri("urn:x"));
}

TEST(Triple, LiteralSubjectIsRejected) {
  EXPECT_THROW(Triple(Literal("x"), kType, kFria), RdfError);
}

TEST(Literal, LanguageTagIsLowercased) {
  auto l = Literal::with_language("hi", "EN-gb");
  EXPECT_EQ(*l.language(), "en-gb");
  EXPECT_EQ(l.datatype(), rdfns::lang_string);
}

TEST(Turtle, EmptyDocument) { EXPECT_EQ(parse_turtle("").size(), 0u); }

TEST(Turtle, PrefixedTypeTriple) {
  auto g = parse_turtle(
      "@prefix eu-aiact: <https://w3id.org/dpv/legal/eu/aiact#> . @prefix ex: <http://ex.org/> . ex:f a "
      "eu-aiact:FRIA .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains(Triple(Iri("http://ex.org/f"), kType, kFria)));
}

TEST(Turtle, SyntaxVariants) {
  auto g = parse_turtle(R"(
    PREFIX ex: <http://ex.org/>
    @base <http://base.org/dir/> .
    <rel> ex:p "a", "b"@en ; ex:q 12, -3.5, 1e3, true .
    ex:s ex:r [ ex:inner "x" ; ex:deeper [ ex:leaf ex:o ] ] .
    _:named ex:p """long
string""" .  # comment
    ex:t ex:p 'single'^^ex:dt .
  )");
  EXPECT_TRUE(g.contains(Triple(Iri("http://base.org/dir/rel"), Iri("http://ex.org/p"), Literal("a"))));
  EXPECT_TRUE(g.contains(Triple(Iri("http://base.org/dir/rel"), Iri("http://ex.org/q"), Literal("12", xsd::integer))));
  EXPECT_TRUE(g.contains(Triple(Iri("http://base.org/dir/rel"), Iri("http://ex.org/q"), Literal("-3.5", xsd::decimal))));
  EXPECT_TRUE(g.contains(Triple(Iri("http://base.org/dir/rel"), Iri("http://ex.org/q"), Literal("1e3", xsd::double_))));
  EXPECT_TRUE(g.contains(Triple(Iri("http://base.org/dir/rel"), Iri("http://ex.org/q"), Literal("true", xsd::boolean))));
  EXPECT_TRUE(g.contains(Triple(Iri("http://ex.org/t"), Iri("http://ex.org/p"), Literal("single", Iri("http://ex.org/dt")))));
  EXPECT_EQ(g.match(std::nullopt, Iri("http://ex.org/leaf"), std::nullopt).size(), 1u);
  EXPECT_EQ(g.size(), 12u);
}

TEST(Turtle, ErrorsCarryPosition) {
  try {
    parse_turtle("@prefix ex: <http://ex.org/> .\nex:s ex:p .\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_turtle("undeclared:x <http://a/p> <http://a/o> ."), ParseError);
  EXPECT_THROW(parse_turtle("<http://a/s> <http://a/p> ( <http://a/o> ) ."), ParseError);
}

TEST(Turtle, SingleTypedTripleUsesA) {
  Graph g;
  g.set_prefix("eu-aiact", Iri("https://w3id.org/dpv/legal/eu/aiact#"));
  g.insert(Iri("http://ex.org/f"), kType, kFria);
  auto text = serialize_turtle(g);
  EXPECT_NE(text.find("<http://ex.org/f> a eu-aiact:FRIA ."), std::string::npos) << text;
}

TEST(Turtle, EmptyGraphHasOnlyPrefixes) {
  Graph g;
  g.set_prefix("ex", Iri("http://ex.org/"));
  EXPECT_EQ(serialize_turtle(g), "@prefix ex: <http://ex.org/> .\n");
}

TEST(Turtle, SerializationIsIdempotent) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto g = fria::testing::random_graph(rng);
    auto once = serialize_turtle(g);
    EXPECT_EQ(serialize_turtle(parse_turtle(once)), once);
  }
}

TEST(NTriples, OneLineDocument) {
  auto g = parse_ntriples("<http://a/s> <http://a/p> \"x\\ny\"@en .\n");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(serialize_ntriples(g), "<http://a/s> <http://a/p> \"x\\ny\"@en .\n");
}

TEST(NTriples, ErrorReportsLine) {
  try {
    parse_ntriples("<http://a/s> <http://a/p> <http://a/o> .\n<http://a/s> <http://a/p> .\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(NTriples, OutputIndependentOfInsertionOrder) {
  std::mt19937 rng(11);
  auto g = fria::testing::random_graph(rng);
  std::vector<Triple> triples(g.begin(), g.end());
  std::shuffle(triples.begin(), triples.end(), rng);
  Graph h;
  for (const auto& t : triples) h.insert(t);
  EXPECT_EQ(serialize_ntriples(g), serialize_ntriples(h));
  EXPECT_EQ(serialize_turtle(g), serialize_turtle(h));
}

TEST(Graph, InsertIsIdempotent) {
  Graph g;
  EXPECT_TRUE(g.insert(Iri("http://a/s"), kType, kFria));
  auto before = serialize_ntriples(g);
  EXPECT_FALSE(g.insert(Iri("http://a/s"), kType, kFria));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(serialize_ntriples(g), before);
}

TEST(Graph, EraseKeepsIndexesConsistent) {
  Graph g;
  g.insert(Iri("http://a/s"), kType, kFria);
  g.insert(Iri("http://a/t"), kType, kFria);
  EXPECT_TRUE(g.erase(Triple(Iri("http://a/s"), kType, kFria)));
  EXPECT_EQ(g.subjects(kType, kFria).size(), 1u);
  EXPECT_EQ(g.match(std::nullopt, kType, std::nullopt).size(), 1u);
  EXPECT_FALSE(g.erase(Triple(Iri("http://a/s"), kType, kFria)));
}

TEST(Graph, MatchOnEmptyGraph) {
  Graph g;
  EXPECT_TRUE(g.match(std::nullopt, std::nullopt, std::nullopt).empty());
  EXPECT_TRUE(g.match(Iri("http://a/s"), kType, std::nullopt).empty());
}

// Every bound/unbound combination against a linear scan.
TEST(Graph, MatchAgreesWithLinearScan) {
  std::mt19937 rng(3);
  for (int round = 0; round < 20; ++round) {
    auto g = fria::testing::random_graph(rng);
    std::vector<Triple> all(g.begin(), g.end());
    EXPECT_EQ(g.match(std::nullopt, std::nullopt, std::nullopt), all);
    for (const auto& probe : all) {
      for (int mask = 0; mask < 8; ++mask) {
        std::optional<Term> s, o;
        std::optional<Iri> p;
        if (mask & 1) s = probe.subject();
        if (mask & 2) p = probe.predicate();
        if (mask & 4) o = probe.object();
        std::vector<Triple> expected;
        for (const auto& t : all)
          if ((!s || t.subject() == *s) && (!p || t.predicate() == *p) && (!o || t.object() == *o))
            expected.push_back(t);
        ASSERT_EQ(g.match(s, p, o), expected);
      }
    }
  }
}

TEST(Canonical, RelabelingIgnoresOriginalLabels) {
  auto a = parse_turtle("<http://a/s> <http://a/p> [ <http://a/q> \"1\" ] , [ <http://a/q> \"2\" ] .");
  auto b = parse_ntriples(
      "<http://a/s> <http://a/p> _:zz .\n_:zz <http://a/q> \"2\" .\n<http://a/s> <http://a/p> _:aa .\n"
      "_:aa <http://a/q> \"1\" .\n");
  EXPECT_TRUE(equal_modulo_blank_labels(a, b));
  EXPECT_EQ(serialize_ntriples(canonicalize(a)), serialize_ntriples(canonicalize(b)));
  auto c = parse_turtle("<http://a/s> <http://a/p> [ <http://a/q> \"1\" ] , [ <http://a/q> \"3\" ] .");
  EXPECT_FALSE(equal_modulo_blank_labels(a, c));
}

TEST(Canonical, RoundTripPropertyOnSmallSample) {
  auto r = fria::testing::check_parser_roundtrip(30, 99);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Timestamp, ParsesDatesAndDateTimes) {
  auto d = Timestamp::parse("2024-11-30");
  ASSERT_TRUE(d);
  EXPECT_FALSE(d->has_time());
  EXPECT_EQ(d->to_literal(), Literal("2024-11-30", xsd::date));
  auto dt = Timestamp::parse("2024-11-30T10:00:00Z");
  ASSERT_TRUE(dt);
  EXPECT_TRUE(*d < *dt);
  EXPECT_EQ(d->compare_day(*dt), std::strong_ordering::equal);
  EXPECT_FALSE(Timestamp::parse("2024-02-30"));
  EXPECT_FALSE(Timestamp::parse("30/11/2024"));
  EXPECT_TRUE(Timestamp::parse("2024-02-29"));
}

TEST(ResolveIri, Rfc3986Examples) {
  const std::string base = "http://a/b/c/d;p?q";
  EXPECT_EQ(resolve_iri(base, "g"), "http://a/b/c/g");
  EXPECT_EQ(resolve_iri(base, "../g"), "http://a/b/g");
  EXPECT_EQ(resolve_iri(base, "/g"), "http://a/g");
  EXPECT_EQ(resolve_iri(base, "#s"), "http://a/b/c/d;p?q#s");
  EXPECT_EQ(resolve_iri(base, "//g"), "http://g");
}

}  // namespace
}  // namespace fria::rdf
