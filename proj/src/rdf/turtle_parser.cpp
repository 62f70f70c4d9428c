#include <atomic>
#include <cctype>
#include <map>

#include "fria/rdf/io.h"
#include "scanner.h"

namespace fria::rdf {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token)
    : RdfError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message + " (at '" +
               token + "')"),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

BlankNode fresh_blank_node() {
  static std::atomic<unsigned long long> counter{0};
  return BlankNode{"n" + std::to_string(counter.fetch_add(1))};
}

namespace {

std::string remove_dot_segments(std::string_view path) {
  std::string input(path);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      auto slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      std::size_t start = input[0] == '/' ? 1 : 0;
      std::size_t next = input.find('/', start);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

struct IriParts {
  std::string scheme, authority, path, query, fragment;
  bool has_authority = false, has_query = false, has_fragment = false;
};

IriParts split_iri(std::string_view s) {
  IriParts p;
  auto colon = s.find(':');
  auto first_delim = s.find_first_of("/?#");
  if (colon != std::string_view::npos && (first_delim == std::string_view::npos || colon < first_delim)) {
    p.scheme = std::string(s.substr(0, colon));
    s.remove_prefix(colon + 1);
  }
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.has_fragment = true;
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.has_query = true;
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (s.starts_with("//")) {
    p.has_authority = true;
    s.remove_prefix(2);
    auto slash = s.find('/');
    p.authority = std::string(s.substr(0, slash));
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  p.path = std::string(s);
  return p;
}

std::string join_iri(const IriParts& p) {
  std::string out;
  if (!p.scheme.empty()) out += p.scheme + ":";
  if (p.has_authority) out += "//" + p.authority;
  out += p.path;
  if (p.has_query) out += "?" + p.query;
  if (p.has_fragment) out += "#" + p.fragment;
  return out;
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view reference) {
  IriParts r = split_iri(reference);
  if (!r.scheme.empty()) {
    r.path = remove_dot_segments(r.path);
    return join_iri(r);
  }
  IriParts b = split_iri(base);
  IriParts t;
  t.scheme = b.scheme;
  if (r.has_authority) {
    t.has_authority = true;
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.has_query = r.has_query;
    t.query = r.query;
  } else {
    t.has_authority = b.has_authority;
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.has_query = r.has_query || b.has_query;
      t.query = r.has_query ? r.query : b.query;
    } else {
      if (r.path[0] == '/') {
        t.path = remove_dot_segments(r.path);
      } else {
        std::string merged;
        if (b.has_authority && b.path.empty()) {
          merged = "/" + r.path;
        } else {
          auto slash = b.path.rfind('/');
          merged = (slash == std::string::npos ? std::string{} : b.path.substr(0, slash + 1)) + r.path;
        }
        t.path = remove_dot_segments(merged);
      }
      t.has_query = r.has_query;
      t.query = r.query;
    }
  }
  t.has_fragment = r.has_fragment;
  t.fragment = r.fragment;
  return join_iri(t);
}

namespace {

bool is_pn_chars_base(unsigned char c) { return std::isalpha(c) || c >= 0x80; }
bool is_pn_chars(unsigned char c) { return is_pn_chars_base(c) || std::isdigit(c) || c == '_' || c == '-'; }

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const std::optional<Iri>& base) : sc_(text) {
    if (base) base_ = base->str();
  }

  Graph parse() {
    while (true) {
      sc_.skip_ws();
      if (sc_.at_end()) break;
      statement();
    }
    graph_.set_prefixes(prefixes_);
    return std::move(graph_);
  }

 private:
  void statement() {
    if (sc_.starts_with("@prefix")) {
      sc_.advance(7);
      prefix_decl();
      sc_.skip_ws();
      sc_.expect('.');
      return;
    }
    if (sc_.starts_with("@base")) {
      sc_.advance(5);
      base_decl();
      sc_.skip_ws();
      sc_.expect('.');
      return;
    }
    if (keyword_ahead("PREFIX")) {
      sc_.advance(6);
      prefix_decl();
      return;
    }
    if (keyword_ahead("BASE")) {
      sc_.advance(4);
      base_decl();
      return;
    }
    triples();
    sc_.skip_ws();
    sc_.expect('.');
  }

  bool keyword_ahead(std::string_view kw) const {
    for (std::size_t i = 0; i < kw.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(sc_.peek(i))) != kw[i]) return false;
    char after = sc_.peek(kw.size());
    return after == ' ' || after == '\t' || after == '\n' || after == '\r';
  }

  void prefix_decl() {
    sc_.skip_ws();
    std::string name;
    while (!sc_.at_end() && sc_.peek() != ':') {
      auto c = static_cast<unsigned char>(sc_.peek());
      if (!(is_pn_chars(c) || c == '.')) sc_.fail("bad prefix name");
      name += sc_.get();
    }
    if (!name.empty() && (name.back() == '.' || !is_pn_chars_base(static_cast<unsigned char>(name[0]))))
      sc_.fail("bad prefix name '" + name + "'");
    sc_.expect(':');
    sc_.skip_ws();
    auto ns = iri_ref();
    prefixes_.insert_or_assign(name, ns);
  }

  void base_decl() {
    sc_.skip_ws();
    base_ = iri_ref().str();
  }

  Iri make_iri(const std::string& text, std::size_t line, std::size_t col) {
    std::string resolved = text;
    bool absolute = Iri::is_valid(text) && split_iri(text).scheme.size() > 0;
    if (!absolute) {
      if (!base_) sc_.fail("relative IRI without base", line, col, "<" + text + ">");
      resolved = resolve_iri(*base_, text);
    }
    if (!Iri::is_valid(resolved)) sc_.fail("invalid IRI", line, col, "<" + text + ">");
    return Iri(resolved);
  }

  Iri iri_ref() {
    auto line = sc_.line(), col = sc_.column();
    auto raw = sc_.read_iriref();
    return make_iri(raw, line, col);
  }

  // prefixed name (including the empty prefix ":x")
  Iri prefixed_name() {
    auto line = sc_.line(), col = sc_.column();
    std::string token = sc_.current_token();
    std::string prefix;
    while (!sc_.at_end() && sc_.peek() != ':') {
      auto c = static_cast<unsigned char>(sc_.peek());
      if (!(is_pn_chars(c) || c == '.')) sc_.fail("unexpected token");
      prefix += sc_.get();
    }
    if (sc_.at_end()) sc_.fail("unexpected end of input");
    sc_.get();  // ':'
    std::string local;
    while (!sc_.at_end()) {
      auto c = static_cast<unsigned char>(sc_.peek());
      if (is_pn_chars(c) || c == ':' || (local.empty() && std::isdigit(c))) {
        local += sc_.get();
      } else if (c == '.') {
        auto n = static_cast<unsigned char>(sc_.peek(1));
        if (is_pn_chars(n) || n == ':' || n == '.' || n == '%' || n == '\\') {
          local += sc_.get();
        } else {
          break;
        }
      } else if (c == '%') {
        local += sc_.get();
        for (int i = 0; i < 2; ++i) {
          if (!std::isxdigit(static_cast<unsigned char>(sc_.peek()))) sc_.fail("bad percent escape");
          local += sc_.get();
        }
      } else if (c == '\\') {
        sc_.get();
        char e = sc_.peek();
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos)
          sc_.fail("bad local name escape");
        local += sc_.get();
      } else {
        break;
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) sc_.fail("undefined prefix '" + prefix + ":'", line, col, token);
    return make_iri(it->second.str() + local, line, col);
  }

  bool at_prefixed_name_start() const {
    auto c = static_cast<unsigned char>(sc_.peek());
    return c == ':' || is_pn_chars_base(c);
  }

  Iri iri() {
    if (sc_.peek() == '<') return iri_ref();
    if (at_prefixed_name_start()) return prefixed_name();
    sc_.fail("expected IRI");
  }

  BlankNode labeled_blank() {
    auto label = sc_.read_blank_label();
    auto it = blank_labels_.find(label);
    if (it != blank_labels_.end()) return it->second;
    auto b = fresh_blank_node();
    blank_labels_.emplace(label, b);
    return b;
  }

  void triples() {
    if (sc_.peek() == '[') {
      Term subject = blank_property_list();
      sc_.skip_ws();
      if (sc_.peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = this->subject();
    sc_.skip_ws();
    predicate_object_list(subject);
  }

  Term subject() {
    if (sc_.peek() == '(') sc_.fail("RDF collections are not supported");
    if (sc_.starts_with("_:")) return labeled_blank();
    if (sc_.peek() == '"' || sc_.peek() == '\'') sc_.fail("literal in subject position");
    if (sc_.peek() == '<' && sc_.peek(1) == '<') sc_.fail("quoted triples are not supported");
    return iri();
  }

  // Parses "[ ... ]" (or "[]") and returns the new blank node.
  Term blank_property_list() {
    sc_.expect('[');
    BlankNode b = fresh_blank_node();
    sc_.skip_ws();
    if (sc_.peek() != ']') predicate_object_list(b);
    sc_.skip_ws();
    sc_.expect(']');
    return b;
  }

  bool verb_ahead() const {
    char c = sc_.peek();
    return c == '<' || c == 'a' || at_prefixed_name_start();
  }

  Iri verb() {
    if (sc_.peek() == 'a') {
      char n = sc_.peek(1);
      auto nu = static_cast<unsigned char>(n);
      if (!(is_pn_chars(nu) || n == ':' || n == '.')) {
        sc_.get();
        return rdfns::type;
      }
    }
    return iri();
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      sc_.skip_ws();
      Iri p = verb();
      sc_.skip_ws();
      object_list(subject, p);
      sc_.skip_ws();
      if (sc_.peek() != ';') return;
      while (sc_.peek() == ';') {
        sc_.get();
        sc_.skip_ws();
      }
      if (!verb_ahead()) return;
    }
  }

  void object_list(const Term& subject, const Iri& p) {
    while (true) {
      Term o = object();
      graph_.insert(subject, p, std::move(o));
      sc_.skip_ws();
      if (sc_.peek() != ',') return;
      sc_.get();
      sc_.skip_ws();
    }
  }

  Term object() {
    char c = sc_.peek();
    if (c == '(') sc_.fail("RDF collections are not supported");
    if (c == '<' && sc_.peek(1) == '<') sc_.fail("quoted triples are not supported");
    if (c == '[') return blank_property_list();
    if (sc_.starts_with("_:")) return labeled_blank();
    if (c == '"' || c == '\'') return rdf_literal();
    if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) return numeric_literal();
    if (keyword_literal("true")) return Literal("true", xsd::boolean);
    if (keyword_literal("false")) return Literal("false", xsd::boolean);
    if (c == '<' || at_prefixed_name_start()) return iri();
    sc_.fail("expected object");
  }

  bool keyword_literal(std::string_view kw) {
    if (!sc_.starts_with(kw)) return false;
    auto n = static_cast<unsigned char>(sc_.peek(kw.size()));
    if (is_pn_chars(n) || n == ':' || (n == '.' && is_pn_chars(static_cast<unsigned char>(sc_.peek(kw.size() + 1)))))
      return false;
    sc_.advance(kw.size());
    return true;
  }

  Term rdf_literal() {
    std::string lex = sc_.read_string(true, true);
    if (sc_.peek() == '@') return Literal::with_language(std::move(lex), sc_.read_langtag());
    if (sc_.starts_with("^^")) {
      sc_.advance(2);
      return Literal(std::move(lex), iri());
    }
    return Literal(std::move(lex));
  }

  Term numeric_literal() {
    auto line = sc_.line(), col = sc_.column();
    std::string s;
    if (sc_.peek() == '+' || sc_.peek() == '-') s += sc_.get();
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(sc_.peek()))) {
        s += sc_.get();
        ++n;
      }
      return n;
    };
    std::size_t int_digits = digits();
    bool decimal = false, exponent = false;
    if (sc_.peek() == '.' && std::isdigit(static_cast<unsigned char>(sc_.peek(1)))) {
      s += sc_.get();
      digits();
      decimal = true;
    }
    if (sc_.peek() == 'e' || sc_.peek() == 'E') {
      s += sc_.get();
      if (sc_.peek() == '+' || sc_.peek() == '-') s += sc_.get();
      if (digits() == 0) sc_.fail("bad exponent", line, col, s);
      exponent = true;
    }
    if (int_digits == 0 && !decimal) sc_.fail("bad numeric literal", line, col, s);
    if (exponent) return Literal(s, xsd::double_);
    if (decimal) return Literal(s, xsd::decimal);
    return Literal(s, xsd::integer);
  }

  detail::Scanner sc_;
  std::optional<std::string> base_;
  PrefixMap prefixes_;
  std::map<std::string, BlankNode> blank_labels_;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text, const std::optional<Iri>& base) {
  return TurtleParser(text, base).parse();
}

}  // namespace fria::rdf
