#pragma once

// RDF data values: IRIs, blank nodes, literals, triples.
//
// All types are regular values with a total order so they can live in
// ordered containers. The order is structural (alternative index, then
// fields), which is also what the graph indexes rely on.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace fria::rdf {

class RdfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An absolute IRI. Construction validates: non-empty, has a scheme
// separator, no whitespace.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& str() const noexcept { return value_; }

  // True when `value` would be accepted by the constructor.
  static bool is_valid(std::string_view value) noexcept;

  friend bool operator==(const Iri&, const Iri&) = default;
  friend std::strong_ordering operator<=>(const Iri& a, const Iri& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

 private:
  std::string value_;
};

struct BlankNode {
  std::string label;

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend std::strong_ordering operator<=>(const BlankNode& a, const BlankNode& b) {
    return a.label.compare(b.label) <=> 0;
  }
};

namespace xsd {
extern const Iri string;
extern const Iri boolean;
extern const Iri integer;
extern const Iri decimal;
extern const Iri double_;
extern const Iri date;
extern const Iri date_time;
}  // namespace xsd

namespace rdfns {
extern const Iri type;
extern const Iri lang_string;
}  // namespace rdfns

class Literal {
 public:
  // Plain xsd:string literal.
  explicit Literal(std::string lexical);
  Literal(std::string lexical, Iri datatype);
  // Language-tagged literal; the tag is lowercased.
  static Literal with_language(std::string lexical, std::string_view language);

  const std::string& lexical() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& language() const noexcept { return language_; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);

 private:
  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> language_;
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

// N-Triples form of a single term: <iri>, _:label, "lex"^^<dt>, "lex"@lang.
std::string to_ntriples(const Term& t);
std::string escape_string(std::string_view s);

class Triple {
 public:
  // Throws RdfError if the subject is a literal.
  Triple(Term subject, Iri predicate, Term object);

  const Term& subject() const noexcept { return subject_; }
  const Iri& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b);

 private:
  Term subject_;
  Iri predicate_;
  Term object_;
};

std::strong_ordering compare_terms(const Term& a, const Term& b);

}  // namespace fria::rdf
