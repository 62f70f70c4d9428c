#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fria/rdf/term.h"

namespace fria::rdf {

// prefix name (without colon) -> namespace IRI
using PrefixMap = std::map<std::string, Iri>;

namespace detail {
struct PosLess {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const;
  bool operator()(const Triple& a, const Iri& p) const { return a.predicate() < p; }
  bool operator()(const Iri& p, const Triple& b) const { return p < b.predicate(); }
};
struct OspLess {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const;
  bool operator()(const Triple& a, const Term& o) const { return compare_terms(a.object(), o) < 0; }
  bool operator()(const Term& o, const Triple& b) const { return compare_terms(o, b.object()) < 0; }
};
struct SpoLess {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const { return a < b; }
  bool operator()(const Triple& a, const Term& s) const { return compare_terms(a.subject(), s) < 0; }
  bool operator()(const Term& s, const Triple& b) const { return compare_terms(s, b.subject()) < 0; }
};
}  // namespace detail

// A set of triples plus the prefix bindings used to print it.
//
// Value type: copies are independent. Equality compares the triple sets
// only; prefixes are presentation.
class Graph {
 public:
  using const_iterator = std::set<Triple, detail::SpoLess>::const_iterator;

  Graph() = default;

  // Returns false if the triple was already present.
  bool insert(const Triple& t);
  bool insert(Term s, Iri p, Term o) { return insert(Triple(std::move(s), std::move(p), std::move(o))); }
  void insert_all(const Graph& other);
  bool erase(const Triple& t);
  bool contains(const Triple& t) const { return spo_.count(t) != 0; }

  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }
  const_iterator begin() const { return spo_.begin(); }
  const_iterator end() const { return spo_.end(); }

  // All triples matching the bound positions, sorted in (s, p, o) order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;

  // Convenience: objects of (s, p, ?) in sorted order.
  std::vector<Term> objects(const Term& s, const Iri& p) const;
  // Subjects of (?, p, o) in sorted order.
  std::vector<Term> subjects(const Iri& p, const Term& o) const;

  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  void set_prefix(const std::string& name, const Iri& ns) { prefixes_.insert_or_assign(name, ns); }
  void set_prefixes(PrefixMap m) { prefixes_ = std::move(m); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.spo_ == b.spo_; }

 private:
  std::set<Triple, detail::SpoLess> spo_;
  std::set<Triple, detail::PosLess> pos_;
  std::set<Triple, detail::OspLess> osp_;
  PrefixMap prefixes_;
};

}  // namespace fria::rdf
