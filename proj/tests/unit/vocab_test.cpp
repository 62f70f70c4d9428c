#include <gtest/gtest.h>

#include <algorithm>

#include "checks.h"
#include "fria/rdf/io.h"
#include "fria/vocab/terms.h"
#include "fria/vocab/vocabulary.h"

namespace fria::vocab {
namespace {

namespace t = terms;
using rdf::Iri;

// Naive fixed point: keep adding parents until nothing changes.
std::set<Iri> naive_closure(const Vocabulary& v, const Iri& c) {
  std::set<Iri> out{c};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [iri, def] : v.terms()) {
      if (!out.count(iri)) continue;
      for (const auto& p : def.parents) grew |= out.insert(p).second;
    }
  }
  return out;
}

TEST(Catalog, ManifestMatches) {
  auto r = fria::testing::check_vocabulary_manifest();
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Catalog, ClosureMatchesFixedPoint) {
  const auto& v = catalog();
  for (const auto& [iri, def] : v.terms()) {
    if (def.kind != TermKind::Class) continue;
    EXPECT_EQ(v.superclass_closure(iri), naive_closure(v, iri)) << iri.str();
  }
}

TEST(Catalog, ClosureExamples) {
  const auto& v = catalog();
  auto c = v.superclass_closure(t::fria::FRIACompletedQuestionnaire);
  EXPECT_TRUE(c.count(t::fria::FRIAQuestionnaire));
  EXPECT_TRUE(c.count(t::tech::Documentation));
  EXPECT_TRUE(v.superclass_closure(t::fria::FRIAOutcome).count(t::eu_aiact::FRIA));
  EXPECT_THROW(v.superclass_closure(Iri("https://example.com/FRIA#Nope")), UnknownTermError);
  EXPECT_THROW(v.superclass_closure(t::fria::FRIARequired), VocabularyError);
}

TEST(Catalog, ParentLinksAreAcyclic) {
  const auto& v = catalog();
  for (const auto& [iri, def] : v.terms())
    for (const auto& p : def.parents)
      if (def.kind == TermKind::Class) EXPECT_FALSE(v.superclass_closure(p).count(iri)) << iri.str();
}

TEST(Catalog, CycleIsRejected) {
  const Iri a("https://example.com/FRIA#A"), b("https://example.com/FRIA#B");
  std::vector<TermDef> defs{{a, TermKind::Class, {b}, "A", "", "", "", std::nullopt},
                            {b, TermKind::Class, {a}, "B", "", "", "", std::nullopt}};
  EXPECT_THROW(Vocabulary(defs, {}), VocabularyError);
}

TEST(Catalog, DanglingParentIsRejected) {
  const Iri a("https://example.com/FRIA#A");
  std::vector<TermDef> defs{
      {a, TermKind::Class, {Iri("https://example.com/FRIA#Missing")}, "A", "", "", "", std::nullopt}};
  EXPECT_THROW(Vocabulary(defs, {}), VocabularyError);
}

TEST(Catalog, FriaTermsCiteArticle27) {
  for (const auto& [iri, def] : catalog().terms()) {
    if (iri.str().rfind(ns::kFria, 0) != 0) continue;
    EXPECT_NE(def.source.find("Art. 27"), std::string::npos) << iri.str() << ": " << def.source;
  }
}

TEST(Catalog, InstanceMembership) {
  const auto& v = catalog();
  rdf::Graph g;
  const Iri node("https://example.com/records/x#outcome");
  g.insert(node, t::rdf::type, t::fria::FRIAOutcome);
  EXPECT_TRUE(v.is_instance_of(g, node, t::fria::FRIAOutcome));
  EXPECT_TRUE(v.is_instance_of(g, node, t::eu_aiact::FRIA));
  EXPECT_FALSE(v.is_instance_of(g, node, t::fria::FRIANotice));
  EXPECT_TRUE(v.is_instance_of(g, t::fria::FRIAOutcomeRisksMitigated, t::fria::FRIAOutcomeStatus));
  EXPECT_TRUE(v.is_instance_of(g, t::fria::FRIAOutcomeRisksMitigated, t::dpv::Status));
  EXPECT_FALSE(v.is_instance_of(g, t::fria::FRIANotificationSent, t::fria::FRIAOutcomeStatus));
}

TEST(Catalog, InstancesOfOutcomeStatus) {
  auto got = catalog().instances_of(t::fria::FRIAOutcomeStatus);
  std::vector<Iri> want{t::fria::FRIAOutcomeHighResidualRisk, t::fria::FRIAOutcomeRisksAcceptable,
                        t::fria::FRIAOutcomeRisksMitigated, t::fria::FRIAOutcomeUnacceptableRisk};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(Catalog, ExpandAndCompact) {
  const auto& v = catalog();
  EXPECT_EQ(v.expand("fria:FRIANotice"), t::fria::FRIANotice);
  EXPECT_EQ(v.expand("<https://example.com/FRIA#FRIANotice>"), t::fria::FRIANotice);
  EXPECT_FALSE(v.expand("plainword"));
  EXPECT_EQ(v.expand("urn:x"), Iri("urn:x"));
  EXPECT_EQ(v.compact(t::fria::FRIANotice), "fria:FRIANotice");
  EXPECT_EQ(v.compact(Iri("http://unknown.org/x")), "<http://unknown.org/x>");
}

TEST(Ontology, NoticeIsADpvNotice) {
  auto g = export_ontology(catalog());
  EXPECT_TRUE(g.contains(rdf::Triple(t::fria::FRIANotice, t::rdfs::subClassOf, t::dpv::Notice)));
}

TEST(Ontology, EmptyVocabularyExportsEmptyGraph) { EXPECT_EQ(export_ontology(Vocabulary{}).size(), 0u); }

TEST(Ontology, ExportIsDeterministicAndRoundTrips) {
  auto a = rdf::serialize_turtle(export_ontology(catalog()));
  auto b = rdf::serialize_turtle(export_ontology(catalog()));
  EXPECT_EQ(a, b);
  auto r = fria::testing::check_ontology_roundtrip();
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_EQ(import_ontology(rdf::parse_turtle(a)).terms(), catalog().terms());
}

TEST(Ontology, RebasedExportMovesFriaTerms) {
  const Iri base("https://example.org/mine#");
  auto g = export_ontology(catalog(), base);
  EXPECT_TRUE(g.contains(rdf::Triple(Iri("https://example.org/mine#FRIANotice"), t::rdfs::subClassOf, t::dpv::Notice)));
  EXPECT_TRUE(g.match(t::fria::FRIANotice, std::nullopt, std::nullopt).empty());
}

TEST(Extension, RefinementsAreAdded) {
  const Iri refined("https://example.com/FRIA-ext#NotificationSentByPost");
  TermDef d{refined, TermKind::Instance, {t::fria::FRIANotificationStatus}, "Sent by post", "", "", "",
            t::fria::FRIANotificationSent};
  auto v = catalog().extended({d});
  EXPECT_EQ(v.refinements_of(t::fria::FRIANotificationSent), std::vector<Iri>{refined});
  EXPECT_TRUE(catalog().refinements_of(t::fria::FRIANotificationSent).empty());
  EXPECT_THROW(catalog().extended({d, d}), VocabularyError);
}

}  // namespace
}  // namespace fria::vocab
