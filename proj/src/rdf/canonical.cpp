#include "fria/rdf/canonical.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace fria::rdf {

namespace {

class Signer {
 public:
  explicit Signer(const Graph& g) : g_(g) {}

  const std::string& signature(const BlankNode& b) {
    if (auto it = done_.find(b); it != done_.end()) return it->second;
    if (active_.count(b)) {
      static const std::string cycle = "[cycle]";
      return cycle;
    }
    active_.insert(b);
    std::vector<std::string> parts;
    for (const auto& t : g_.match(Term{b}, std::nullopt, std::nullopt))
      parts.push_back("<" + t.predicate().str() + "> " + term_key(t.object()));
    std::sort(parts.begin(), parts.end());
    std::string sig = "[";
    for (const auto& p : parts) sig += p + ";";
    // incoming edges from named subjects separate otherwise identical trees
    std::vector<std::string> incoming;
    for (const auto& t : g_.match(std::nullopt, std::nullopt, Term{b}))
      if (!is_blank(t.subject())) incoming.push_back(to_ntriples(t.subject()) + " <" + t.predicate().str() + ">");
    std::sort(incoming.begin(), incoming.end());
    for (const auto& i : incoming) sig += "|" + i;
    sig += "]";
    active_.erase(b);
    return done_.emplace(b, std::move(sig)).first->second;
  }

  std::string term_key(const Term& t) {
    if (const auto* b = std::get_if<BlankNode>(&t)) return signature(*b);
    return to_ntriples(t);
  }

 private:
  const Graph& g_;
  std::map<BlankNode, std::string> done_;
  std::set<BlankNode> active_;
};

}  // namespace

std::map<BlankNode, BlankNode> canonical_labels(const Graph& g) {
  Signer signer(g);
  struct Keyed {
    std::string key;
    const Triple* triple;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(g.size());
  for (const auto& t : g) {
    if (!is_blank(t.subject()) && !is_blank(t.object())) continue;
    keyed.push_back({signer.term_key(t.subject()) + " <" + t.predicate().str() + "> " + signer.term_key(t.object()),
                     &t});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });

  std::map<BlankNode, BlankNode> labels;
  auto assign = [&](const Term& t) {
    if (const auto* b = std::get_if<BlankNode>(&t); b && !labels.count(*b))
      labels.emplace(*b, BlankNode{"b" + std::to_string(labels.size())});
  };
  for (const auto& k : keyed) {
    assign(k.triple->subject());
    assign(k.triple->object());
  }
  return labels;
}

Graph canonicalize(const Graph& g) {
  auto labels = canonical_labels(g);
  auto map = [&](const Term& t) -> Term {
    if (const auto* b = std::get_if<BlankNode>(&t)) return labels.at(*b);
    return t;
  };
  Graph out;
  out.set_prefixes(g.prefixes());
  for (const auto& t : g) out.insert(map(t.subject()), t.predicate(), map(t.object()));
  return out;
}

bool equal_modulo_blank_labels(const Graph& a, const Graph& b) {
  return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

}  // namespace fria::rdf
