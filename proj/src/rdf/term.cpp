#include "fria/rdf/term.h"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace fria::rdf {

namespace {

bool is_space_char(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

bool Iri::is_valid(std::string_view value) noexcept {
  if (value.empty()) return false;
  auto colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(value[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    unsigned char c = value[i];
    if (!(std::isalnum(c) || c == '+' || c == '-' || c == '.')) return false;
  }
  return std::none_of(value.begin(), value.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return is_space_char(u) || c == '<' || c == '>' || c == '"';
  });
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw RdfError("invalid IRI: '" + value_ + "'");
}

namespace xsd {
const Iri string{"http://www.w3.org/2001/XMLSchema#string"};
const Iri boolean{"http://www.w3.org/2001/XMLSchema#boolean"};
const Iri integer{"http://www.w3.org/2001/XMLSchema#integer"};
const Iri decimal{"http://www.w3.org/2001/XMLSchema#decimal"};
const Iri double_{"http://www.w3.org/2001/XMLSchema#double"};
const Iri date{"http://www.w3.org/2001/XMLSchema#date"};
const Iri date_time{"http://www.w3.org/2001/XMLSchema#dateTime"};
}  // namespace xsd

namespace rdfns {
const Iri type{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"};
const Iri lang_string{"http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"};
}  // namespace rdfns

Literal::Literal(std::string lexical) : lexical_(std::move(lexical)), datatype_(xsd::string) {}

Literal::Literal(std::string lexical, Iri datatype) : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
  if (datatype_ == rdfns::lang_string) throw RdfError("rdf:langString literal requires a language tag");
}

Literal Literal::with_language(std::string lexical, std::string_view language) {
  if (language.empty()) throw RdfError("empty language tag");
  Literal l(std::move(lexical));
  l.datatype_ = rdfns::lang_string;
  l.language_ = to_lower(language);
  return l;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.lexical_.compare(b.lexical_) <=> 0; c != 0) return c;
  if (auto c = a.datatype_ <=> b.datatype_; c != 0) return c;
  return a.language_.value_or("").compare(b.language_.value_or("")) <=> 0;
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b);
      },
      a);
}

std::string escape_string(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string to_ntriples(const Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return "<" + iri->str() + ">";
  if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label;
  const auto& lit = std::get<Literal>(t);
  std::string out = "\"" + escape_string(lit.lexical()) + "\"";
  if (lit.language()) return out + "@" + *lit.language();
  if (lit.datatype() == xsd::string) return out;
  return out + "^^<" + lit.datatype().str() + ">";
}

Triple::Triple(Term subject, Iri predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (is_literal(subject_)) throw RdfError("literal in subject position: " + to_ntriples(subject_));
}

std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
  if (auto c = compare_terms(a.subject_, b.subject_); c != 0) return c;
  if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
  return compare_terms(a.object_, b.object_);
}

}  // namespace fria::rdf
