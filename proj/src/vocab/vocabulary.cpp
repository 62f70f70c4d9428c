#include "fria/vocab/vocabulary.h"

#include <algorithm>
#include <functional>

#include "fria/vocab/terms.h"

namespace fria::vocab {

using rdf::Iri;

std::string_view to_string(TermKind k) {
  switch (k) {
    case TermKind::Class: return "Class";
    case TermKind::Property: return "Property";
    case TermKind::Instance: return "Instance";
  }
  return "?";
}

Vocabulary::Vocabulary(std::vector<TermDef> terms, rdf::PrefixMap namespaces, rdf::PrefixMap support_namespaces)
    : namespaces_(std::move(namespaces)), support_namespaces_(std::move(support_namespaces)) {
  for (auto& t : terms) {
    Iri key = t.iri;
    if (!terms_.emplace(key, std::move(t)).second) throw VocabularyError("duplicate term: <" + key.str() + ">");
  }
  for (const auto& [iri, def] : terms_) {
    if (def.kind == TermKind::Instance && def.parents.empty())
      throw VocabularyError("instance without a class: <" + iri.str() + ">");
    for (const auto& p : def.parents) {
      auto it = terms_.find(p);
      if (it == terms_.end())
        throw VocabularyError("parent <" + p.str() + "> of <" + iri.str() + "> is not in the catalog");
      TermKind expected = def.kind == TermKind::Property ? TermKind::Property : TermKind::Class;
      if (it->second.kind != expected)
        throw VocabularyError("parent <" + p.str() + "> of <" + iri.str() + "> has the wrong kind");
    }
    if (def.broader) {
      auto it = terms_.find(*def.broader);
      if (it == terms_.end() || it->second.kind != def.kind)
        throw VocabularyError("broader term of <" + iri.str() + "> does not resolve");
    }
  }

  // cycle check (white/grey/black DFS)
  std::map<Iri, int> colour;
  std::function<void(const Iri&)> visit = [&](const Iri& n) {
    colour[n] = 1;
    const auto& def = terms_.at(n);
    std::vector<Iri> next(def.parents.begin(), def.parents.end());
    if (def.broader) next.push_back(*def.broader);
    for (const auto& p : next) {
      int c = colour[p];
      if (c == 1) throw VocabularyError("cycle in parent links through <" + p.str() + ">");
      if (c == 0) visit(p);
    }
    colour[n] = 2;
  };
  for (const auto& [iri, _] : terms_)
    if (colour[iri] == 0) visit(iri);
}

const TermDef* Vocabulary::find(const Iri& iri) const {
  auto it = terms_.find(iri);
  return it == terms_.end() ? nullptr : &it->second;
}

const TermDef& Vocabulary::at(const Iri& iri) const {
  if (const auto* d = find(iri)) return *d;
  throw UnknownTermError(iri);
}

rdf::PrefixMap Vocabulary::all_prefixes() const {
  rdf::PrefixMap out = support_namespaces_;
  for (const auto& [k, v] : namespaces_) out.insert_or_assign(k, v);
  return out;
}

std::set<Iri> Vocabulary::closure(const Iri& start, TermKind kind) const {
  const auto& def = at(start);
  if (def.kind != kind)
    throw VocabularyError("<" + start.str() + "> is a " + std::string(to_string(def.kind)) + ", expected a " +
                          std::string(to_string(kind)));
  std::set<Iri> out{start};
  std::vector<Iri> stack{start};
  while (!stack.empty()) {
    Iri n = stack.back();
    stack.pop_back();
    for (const auto& p : at(n).parents)
      if (out.insert(p).second) stack.push_back(p);
  }
  return out;
}

std::set<Iri> Vocabulary::superclass_closure(const Iri& c) const { return closure(c, TermKind::Class); }

std::set<Iri> Vocabulary::superproperty_closure(const Iri& p) const { return closure(p, TermKind::Property); }

std::vector<Iri> Vocabulary::instances_of(const Iri& c) const {
  at(c);
  std::vector<Iri> out;
  for (const auto& [iri, def] : terms_) {
    if (def.kind != TermKind::Instance) continue;
    for (const auto& cls : def.parents) {
      if (superclass_closure(cls).count(c)) {
        out.push_back(iri);
        break;
      }
    }
  }
  return out;
}

std::vector<Iri> Vocabulary::subclasses_of(const Iri& c) const {
  at(c);
  std::vector<Iri> out;
  for (const auto& [iri, def] : terms_)
    if (def.kind == TermKind::Class && superclass_closure(iri).count(c)) out.push_back(iri);
  return out;
}

bool Vocabulary::is_instance_of(const rdf::Graph& g, const rdf::Term& node, const Iri& c) const {
  if (at(c).kind != TermKind::Class) throw VocabularyError("<" + c.str() + "> is not a class");
  for (const auto& t : g.match(node, terms::rdf::type, std::nullopt)) {
    const auto* type = std::get_if<Iri>(&t.object());
    if (!type) continue;
    const auto* def = find(*type);
    if (def && def->kind == TermKind::Class && superclass_closure(*type).count(c)) return true;
  }
  if (const auto* iri = std::get_if<Iri>(&node)) {
    const auto* def = find(*iri);
    if (def && def->kind == TermKind::Instance)
      for (const auto& cls : def->parents)
        if (superclass_closure(cls).count(c)) return true;
  }
  return false;
}

std::vector<Iri> Vocabulary::refinements_of(const Iri& parent) const {
  std::vector<Iri> out;
  for (const auto& [iri, def] : terms_) {
    std::optional<Iri> up = def.broader;
    while (up) {
      if (*up == parent) {
        out.push_back(iri);
        break;
      }
      up = at(*up).broader;
    }
  }
  return out;
}

std::optional<Iri> Vocabulary::expand(std::string_view text) const {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    auto inner = text.substr(1, text.size() - 2);
    if (Iri::is_valid(inner)) return Iri(std::string(inner));
    return std::nullopt;
  }
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    auto prefixes = all_prefixes();
    auto it = prefixes.find(std::string(text.substr(0, colon)));
    if (it != prefixes.end()) {
      std::string full = it->second.str() + std::string(text.substr(colon + 1));
      if (Iri::is_valid(full)) return Iri(full);
      return std::nullopt;
    }
  }
  if (Iri::is_valid(text)) return Iri(std::string(text));
  return std::nullopt;
}

std::string Vocabulary::compact(const Iri& iri) const {
  const auto& s = iri.str();
  std::string best;
  std::size_t best_len = 0;
  for (const auto& [name, ns] : all_prefixes()) {
    const auto& n = ns.str();
    if (n.size() > best_len && s.starts_with(n)) {
      best = name + ":" + s.substr(n.size());
      best_len = n.size();
    }
  }
  return best_len ? best : "<" + s + ">";
}

Vocabulary Vocabulary::extended(const std::vector<TermDef>& extra) const {
  std::vector<TermDef> all;
  all.reserve(terms_.size() + extra.size());
  for (const auto& [_, d] : terms_) all.push_back(d);
  all.insert(all.end(), extra.begin(), extra.end());
  return Vocabulary(std::move(all), namespaces_, support_namespaces_);
}

}  // namespace fria::vocab
