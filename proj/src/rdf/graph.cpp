#include "fria/rdf/graph.h"

#include <algorithm>

namespace fria::rdf {

namespace detail {

bool PosLess::operator()(const Triple& a, const Triple& b) const {
  if (auto c = a.predicate() <=> b.predicate(); c != 0) return c < 0;
  if (auto c = compare_terms(a.object(), b.object()); c != 0) return c < 0;
  return compare_terms(a.subject(), b.subject()) < 0;
}

bool OspLess::operator()(const Triple& a, const Triple& b) const {
  if (auto c = compare_terms(a.object(), b.object()); c != 0) return c < 0;
  if (auto c = compare_terms(a.subject(), b.subject()); c != 0) return c < 0;
  return a.predicate() < b.predicate();
}

}  // namespace detail

bool Graph::insert(const Triple& t) {
  if (!spo_.insert(t).second) return false;
  pos_.insert(t);
  osp_.insert(t);
  return true;
}

void Graph::insert_all(const Graph& other) {
  for (const auto& t : other) insert(t);
}

bool Graph::erase(const Triple& t) {
  if (spo_.erase(t) == 0) return false;
  pos_.erase(t);
  osp_.erase(t);
  return true;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  auto keep = [&](const Triple& t) {
    return (!s || t.subject() == *s) && (!p || t.predicate() == *p) && (!o || t.object() == *o);
  };
  if (s) {
    auto [lo, hi] = spo_.equal_range(*s);
    for (auto it = lo; it != hi; ++it)
      if (keep(*it)) out.push_back(*it);
    return out;
  }
  if (p) {
    auto [lo, hi] = pos_.equal_range(*p);
    for (auto it = lo; it != hi; ++it)
      if (keep(*it)) out.push_back(*it);
  } else if (o) {
    auto [lo, hi] = osp_.equal_range(*o);
    for (auto it = lo; it != hi; ++it) out.push_back(*it);
  } else {
    return {spo_.begin(), spo_.end()};
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Iri& p) const {
  std::vector<Term> out;
  for (const auto& t : match(s, p, std::nullopt)) out.push_back(t.object());
  return out;
}

std::vector<Term> Graph::subjects(const Iri& p, const Term& o) const {
  std::vector<Term> out;
  for (const auto& t : match(std::nullopt, p, o)) out.push_back(t.subject());
  return out;
}

}  // namespace fria::rdf
