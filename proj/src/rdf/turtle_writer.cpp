#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include "fria/rdf/canonical.h"
#include "fria/rdf/io.h"

namespace fria::rdf {

namespace {

bool valid_local_name(std::string_view local) {
  if (local.empty()) return true;
  auto first = static_cast<unsigned char>(local[0]);
  if (!(std::isalnum(first) || first == '_')) return false;
  return std::all_of(local.begin(), local.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-';
  });
}

bool is_integer_lexical(const std::string& s) {
  static const std::regex re("[+-]?[0-9]+");
  return std::regex_match(s, re);
}

bool is_decimal_lexical(const std::string& s) {
  static const std::regex re("[+-]?[0-9]*\\.[0-9]+");
  return std::regex_match(s, re);
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph& g) : g_(canonicalize(g)) {}

  std::string write() {
    std::string out;
    for (const auto& [name, ns] : g_.prefixes()) out += "@prefix " + name + ": <" + ns.str() + "> .\n";

    plan_inlining();

    std::vector<std::pair<std::string, Term>> subjects;
    std::set<Term, TermLess> seen;
    for (const auto& t : g_) {
      if (is_blank(t.subject()) && inlined_.count(std::get<BlankNode>(t.subject()))) continue;
      if (seen.insert(t.subject()).second) subjects.emplace_back(term(t.subject()), t.subject());
    }
    std::sort(subjects.begin(), subjects.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [text, subject] : subjects) {
      out += "\n";
      out += text + " " + predicate_objects(subject, "\n    ") + " .\n";
    }
    return out;
  }

 private:
  struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return compare_terms(a, b) < 0; }
  };

  // A blank node is written inline as [ ... ] when it is the object of
  // exactly one triple and inlining does not loop back on itself.
  void plan_inlining() {
    std::map<BlankNode, int> refs;
    for (const auto& t : g_)
      if (const auto* b = std::get_if<BlankNode>(&t.object())) ++refs[*b];
    for (const auto& [b, n] : refs)
      if (n == 1) inlined_.insert(b);

    while (true) {
      std::set<BlankNode> reached;
      std::vector<Term> stack;
      for (const auto& t : g_)
        if (!(is_blank(t.subject()) && inlined_.count(std::get<BlankNode>(t.subject())))) stack.push_back(t.subject());
      while (!stack.empty()) {
        Term s = stack.back();
        stack.pop_back();
        for (const auto& t : g_.match(s, std::nullopt, std::nullopt)) {
          const auto* b = std::get_if<BlankNode>(&t.object());
          if (b && inlined_.count(*b) && reached.insert(*b).second) stack.push_back(*b);
        }
      }
      std::optional<BlankNode> orphan;
      for (const auto& b : inlined_) {
        if (!reached.count(b)) {
          orphan = b;
          break;
        }
      }
      if (!orphan) break;
      inlined_.erase(*orphan);
    }
  }

  std::string predicate_objects(const Term& subject, const std::string& sep) {
    std::map<std::string, std::vector<std::string>> by_predicate;
    for (const auto& t : g_.match(subject, std::nullopt, std::nullopt)) {
      std::string p = t.predicate() == rdfns::type ? std::string("a") : iri(t.predicate());
      by_predicate[p].push_back(object(t.object()));
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> ordered(by_predicate.begin(), by_predicate.end());
    std::stable_partition(ordered.begin(), ordered.end(), [](const auto& e) { return e.first == "a"; });
    std::string out;
    bool first = true;
    for (auto& [p, objects] : ordered) {
      std::sort(objects.begin(), objects.end());
      if (!first) out += " ;" + sep;
      first = false;
      out += p + " ";
      for (std::size_t i = 0; i < objects.size(); ++i) {
        if (i) out += ", ";
        out += objects[i];
      }
    }
    return out;
  }

  std::string object(const Term& t) {
    if (const auto* b = std::get_if<BlankNode>(&t); b && inlined_.count(*b)) {
      std::string body = predicate_objects(t, " ");
      return body.empty() ? "[]" : "[ " + body + " ]";
    }
    return term(t);
  }

  std::string iri(const Iri& i) {
    const std::string& s = i.str();
    const std::string* best_name = nullptr;
    std::size_t best_len = 0;
    for (const auto& [name, ns] : g_.prefixes()) {
      const std::string& n = ns.str();
      if (n.size() > best_len && s.size() >= n.size() && s.compare(0, n.size(), n) == 0 &&
          valid_local_name(std::string_view(s).substr(n.size()))) {
        best_name = &name;
        best_len = n.size();
      }
    }
    if (best_name) return *best_name + ":" + s.substr(best_len);
    return "<" + s + ">";
  }

  std::string term(const Term& t) {
    if (const auto* i = std::get_if<Iri>(&t)) return iri(*i);
    if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label;
    const auto& lit = std::get<Literal>(t);
    if (lit.datatype() == xsd::integer && is_integer_lexical(lit.lexical())) return lit.lexical();
    if (lit.datatype() == xsd::decimal && is_decimal_lexical(lit.lexical())) return lit.lexical();
    if (lit.datatype() == xsd::boolean && (lit.lexical() == "true" || lit.lexical() == "false")) return lit.lexical();
    std::string out = "\"" + escape_string(lit.lexical()) + "\"";
    if (lit.language()) return out + "@" + *lit.language();
    if (lit.datatype() == xsd::string) return out;
    return out + "^^" + iri(lit.datatype());
  }

  Graph g_;
  std::set<BlankNode> inlined_;
};

}  // namespace

std::string serialize_turtle(const Graph& g) { return TurtleWriter(g).write(); }

}  // namespace fria::rdf
