#pragma once

// Turtle (subset) and N-Triples reading and writing.
//
// Supported Turtle: @prefix/@base (and the SPARQL-style PREFIX/BASE forms),
// the `a` keyword, `;` predicate lists, `,` object lists, `[ ... ]` blank
// node property lists, prefixed names, IRIs, plain/typed/language-tagged
// literals, integer/decimal/boolean shorthands, comments. Collections and
// quoted triples are rejected.
//
// Both writers are deterministic: blank nodes are relabeled canonically
// (see canonical.h) and everything is emitted in sorted order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fria/rdf/graph.h"

namespace fria::rdf {

class ParseError : public RdfError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

Graph parse_turtle(std::string_view text, const std::optional<Iri>& base = std::nullopt);
std::string serialize_turtle(const Graph& g);

Graph parse_ntriples(std::string_view text);
// One triple per line, lines sorted bytewise; the canonical form used for
// graph comparison in tests.
std::string serialize_ntriples(const Graph& g);

// A blank node label that no other call in this process returns.
BlankNode fresh_blank_node();

// RFC 3986 reference resolution.
std::string resolve_iri(std::string_view base, std::string_view reference);

}  // namespace fria::rdf
