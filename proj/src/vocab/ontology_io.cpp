#include <algorithm>

#include "fria/vocab/terms.h"
#include "fria/vocab/vocabulary.h"

namespace fria::vocab {

namespace {

using rdf::Iri;
using rdf::Literal;
namespace t = terms;

Iri rebase(const Iri& iri, const std::optional<Iri>& fria_base) {
  if (!fria_base) return iri;
  const std::string from = ns::kFria;
  if (!iri.str().starts_with(from)) return iri;
  return Iri(fria_base->str() + iri.str().substr(from.size()));
}

std::optional<std::string> single_literal(const rdf::Graph& g, const Iri& s, const Iri& p) {
  auto objs = g.objects(s, p);
  if (objs.empty()) return std::nullopt;
  if (objs.size() > 1) throw VocabularyError("<" + s.str() + "> has more than one " + p.str());
  const auto* lit = std::get_if<Literal>(&objs.front());
  if (!lit) throw VocabularyError("<" + s.str() + "> " + p.str() + " is not a literal");
  return lit->lexical();
}

}  // namespace

rdf::Graph export_ontology(const Vocabulary& v, const std::optional<Iri>& fria_base) {
  rdf::Graph g;
  auto prefixes = v.all_prefixes();
  for (auto& [name, iri] : prefixes) iri = rebase(iri, fria_base);
  g.set_prefixes(prefixes);

  for (const auto& [iri0, def] : v.terms()) {
    Iri iri = rebase(iri0, fria_base);
    switch (def.kind) {
      case TermKind::Class:
        g.insert(iri, t::rdf::type, t::rdfs::Class);
        for (const auto& p : def.parents) g.insert(iri, t::rdfs::subClassOf, rebase(p, fria_base));
        break;
      case TermKind::Property:
        g.insert(iri, t::rdf::type, t::rdf::Property);
        for (const auto& p : def.parents) g.insert(iri, t::rdfs::subPropertyOf, rebase(p, fria_base));
        break;
      case TermKind::Instance:
        g.insert(iri, t::rdf::type, t::skos::Concept);
        for (const auto& p : def.parents) g.insert(iri, t::rdf::type, rebase(p, fria_base));
        break;
    }
    if (!def.label.empty()) g.insert(iri, t::rdfs::label, Literal(def.label));
    if (!def.definition.empty()) g.insert(iri, t::skos::definition, Literal(def.definition));
    if (!def.source.empty()) g.insert(iri, t::dct::source, Literal(def.source));
    if (!def.note.empty()) g.insert(iri, t::skos::note, Literal(def.note));
    if (def.broader) g.insert(iri, t::skos::broader, rebase(*def.broader, fria_base));
  }
  return g;
}

std::vector<TermDef> term_defs_from_graph(const rdf::Graph& g) {
  std::vector<TermDef> out;
  std::set<Iri> seen;
  for (const auto& tr : g.match(std::nullopt, t::rdf::type, std::nullopt)) {
    const auto* subject = std::get_if<Iri>(&tr.subject());
    if (!subject || seen.count(*subject)) continue;
    auto types = g.objects(*subject, t::rdf::type);
    auto has = [&](const Iri& c) { return std::find(types.begin(), types.end(), rdf::Term(c)) != types.end(); };
    int kinds = has(t::rdfs::Class) + has(t::rdf::Property) + has(t::skos::Concept);
    if (kinds == 0) continue;
    if (kinds > 1) throw VocabularyError("<" + subject->str() + "> is declared with more than one term kind");
    seen.insert(*subject);

    TermDef def{*subject, TermKind::Class, {}, {}, {}, {}, {}, std::nullopt};
    auto collect = [&](const Iri& pred, const Iri* skip) {
      for (const auto& o : g.objects(*subject, pred)) {
        const auto* p = std::get_if<Iri>(&o);
        if (!p) throw VocabularyError("parent of <" + subject->str() + "> is not an IRI");
        if (skip && *p == *skip) continue;
        def.parents.insert(*p);
      }
    };
    if (has(t::rdfs::Class)) {
      def.kind = TermKind::Class;
      collect(t::rdfs::subClassOf, nullptr);
    } else if (has(t::rdf::Property)) {
      def.kind = TermKind::Property;
      collect(t::rdfs::subPropertyOf, nullptr);
    } else {
      def.kind = TermKind::Instance;
      collect(t::rdf::type, &t::skos::Concept);
    }
    def.label = single_literal(g, *subject, t::rdfs::label).value_or("");
    def.definition = single_literal(g, *subject, t::skos::definition).value_or("");
    def.source = single_literal(g, *subject, t::dct::source).value_or("");
    def.note = single_literal(g, *subject, t::skos::note).value_or("");
    auto broader = g.objects(*subject, t::skos::broader);
    if (broader.size() > 1) throw VocabularyError("<" + subject->str() + "> has more than one broader term");
    if (!broader.empty()) {
      const auto* b = std::get_if<Iri>(&broader.front());
      if (!b) throw VocabularyError("broader term of <" + subject->str() + "> is not an IRI");
      def.broader = *b;
    }
    out.push_back(std::move(def));
  }
  return out;
}

Vocabulary import_ontology(const rdf::Graph& g) {
  static const char* const kOntologyPrefixes[] = {"fria", "dct", "dpv", "tech", "risk", "ai", "eu-aiact"};
  rdf::PrefixMap namespaces, support;
  for (const auto& [name, iri] : g.prefixes()) {
    bool primary = std::find(std::begin(kOntologyPrefixes), std::end(kOntologyPrefixes), name) !=
                   std::end(kOntologyPrefixes);
    (primary ? namespaces : support).emplace(name, iri);
  }
  return Vocabulary(term_defs_from_graph(g), std::move(namespaces), std::move(support));
}

}  // namespace fria::vocab
