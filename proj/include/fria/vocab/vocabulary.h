#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fria/rdf/graph.h"

namespace fria::vocab {

class VocabularyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownTermError : public VocabularyError {
 public:
  explicit UnknownTermError(const rdf::Iri& iri) : VocabularyError("unknown vocabulary term: <" + iri.str() + ">") {}
};

enum class TermKind { Class, Property, Instance };

std::string_view to_string(TermKind k);

struct TermDef {
  rdf::Iri iri;
  TermKind kind;
  // subclass-of for classes, subproperty-of for properties, instance-of
  // (rdf:type) for instances
  std::set<rdf::Iri> parents;
  std::string label;
  std::string definition;
  // legal or vocabulary citation, e.g. "AI Act Art. 27(1)(b)"
  std::string source;
  // free annotation (modelling alternatives, spelling notes)
  std::string note;
  // narrower-than link between instances, used for jurisdiction-specific
  // refinements of an enumerated status
  std::optional<rdf::Iri> broader;

  friend bool operator==(const TermDef&, const TermDef&) = default;
};

// An immutable catalog of term definitions.
//
// Construction checks that IRIs are unique, every parent resolves to a
// catalogued term of a compatible kind, and parent links are acyclic.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<TermDef> terms, rdf::PrefixMap namespaces, rdf::PrefixMap support_namespaces = {});

  const std::map<rdf::Iri, TermDef>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool contains(const rdf::Iri& iri) const { return terms_.count(iri) != 0; }
  const TermDef* find(const rdf::Iri& iri) const;
  // Throws UnknownTermError.
  const TermDef& at(const rdf::Iri& iri) const;

  // The ontology namespaces.
  const rdf::PrefixMap& namespaces() const noexcept { return namespaces_; }
  // rdf/rdfs/xsd/skos and extension namespaces used alongside them.
  const rdf::PrefixMap& support_namespaces() const noexcept { return support_namespaces_; }
  rdf::PrefixMap all_prefixes() const;

  // Reflexive-transitive closure over parent links. Throws UnknownTermError
  // for unknown IRIs and VocabularyError if `c` is not a class.
  std::set<rdf::Iri> superclass_closure(const rdf::Iri& c) const;
  // Same over subproperty links.
  std::set<rdf::Iri> superproperty_closure(const rdf::Iri& p) const;

  // Catalog instances whose instance-of class has `c` in its closure, sorted.
  std::vector<rdf::Iri> instances_of(const rdf::Iri& c) const;
  // Classes whose closure contains `c` (including `c`), sorted.
  std::vector<rdf::Iri> subclasses_of(const rdf::Iri& c) const;

  // True iff `g` types `node` with some class whose closure contains `c`,
  // or `node` is a catalog instance of `c`. Throws if `c` is not a
  // catalogued class.
  bool is_instance_of(const rdf::Graph& g, const rdf::Term& node, const rdf::Iri& c) const;

  // Catalog instances that refine `parent` through `broader` (transitively).
  std::vector<rdf::Iri> refinements_of(const rdf::Iri& parent) const;

  // "prefix:local" or "<iri>" / absolute IRI -> Iri; nullopt if unresolvable.
  std::optional<rdf::Iri> expand(std::string_view text) const;
  // Shortest prefixed form, or "<iri>".
  std::string compact(const rdf::Iri& iri) const;

  // A copy with extra terms (e.g. jurisdiction-specific statuses).
  Vocabulary extended(const std::vector<TermDef>& extra) const;

 private:
  std::set<rdf::Iri> closure(const rdf::Iri& start, TermKind kind) const;

  std::map<rdf::Iri, TermDef> terms_;
  rdf::PrefixMap namespaces_;
  rdf::PrefixMap support_namespaces_;
};

// The built-in catalog. Built once, shared.
const Vocabulary& catalog();

// One graph with a kind triple, parent triples, label/definition/source
// annotations (and note/broader where present) for each term. When
// `fria_base` is given, IRIs in the fria: namespace are rebased onto it.
rdf::Graph export_ontology(const Vocabulary& v, const std::optional<rdf::Iri>& fria_base = std::nullopt);

// Inverse of export_ontology.
Vocabulary import_ontology(const rdf::Graph& g);

// Term definitions described in a graph (same shape as the export), for
// loading catalog extensions from a file.
std::vector<TermDef> term_defs_from_graph(const rdf::Graph& g);

}  // namespace fria::vocab
