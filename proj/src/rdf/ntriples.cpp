#include <algorithm>
#include <map>
#include <vector>

#include "fria/rdf/canonical.h"
#include "fria/rdf/io.h"
#include "scanner.h"

namespace fria::rdf {

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no, std::map<std::string, BlankNode>& blanks)
      : sc_(line, line_no), blanks_(blanks) {}

  std::optional<Triple> parse() {
    sc_.skip_inline_ws();
    if (sc_.at_end() || sc_.peek() == '#') return std::nullopt;
    Term s = subject();
    sc_.skip_inline_ws();
    Iri p = iri();
    sc_.skip_inline_ws();
    Term o = object();
    sc_.skip_inline_ws();
    sc_.expect('.');
    sc_.skip_inline_ws();
    if (!sc_.at_end() && sc_.peek() != '#' && sc_.peek() != '\r') sc_.fail("trailing content after '.'");
    return Triple(std::move(s), std::move(p), std::move(o));
  }

 private:
  Iri iri() {
    auto line = sc_.line(), col = sc_.column();
    auto raw = sc_.read_iriref();
    if (!Iri::is_valid(raw)) sc_.fail("IRI must be absolute", line, col, "<" + raw + ">");
    return Iri(raw);
  }

  Term blank() {
    auto label = sc_.read_blank_label();
    auto it = blanks_.find(label);
    if (it == blanks_.end()) it = blanks_.emplace(label, fresh_blank_node()).first;
    return it->second;
  }

  Term subject() {
    if (sc_.peek() == '<') return iri();
    if (sc_.starts_with("_:")) return blank();
    sc_.fail("expected IRI or blank node as subject");
  }

  Term object() {
    if (sc_.peek() == '<') return iri();
    if (sc_.starts_with("_:")) return blank();
    if (sc_.peek() != '"') sc_.fail("expected object");
    std::string lex = sc_.read_string(false, false);
    if (sc_.peek() == '@') return Literal::with_language(std::move(lex), sc_.read_langtag());
    if (sc_.starts_with("^^")) {
      sc_.advance(2);
      return Literal(std::move(lex), iri());
    }
    return Literal(std::move(lex));
  }

  detail::Scanner sc_;
  std::map<std::string, BlankNode>& blanks_;
};

}  // namespace

Graph parse_ntriples(std::string_view text) {
  Graph g;
  std::map<std::string, BlankNode> blanks;
  std::size_t line_no = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (auto t = LineParser(line, line_no, blanks).parse()) g.insert(*t);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++line_no;
  }
  return g;
}

std::string serialize_ntriples(const Graph& g) {
  Graph c = canonicalize(g);
  std::vector<std::string> lines;
  lines.reserve(c.size());
  for (const auto& t : c)
    lines.push_back(to_ntriples(t.subject()) + " " + to_ntriples(t.predicate()) + " " + to_ntriples(t.object()) +
                    " .");
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace fria::rdf
