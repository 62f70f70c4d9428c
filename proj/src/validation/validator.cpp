#include "fria/validation/validator.h"

#include <algorithm>
#include <tuple>

#include "fria/rdf/canonical.h"
#include "fria/vocab/terms.h"

namespace fria::validation {

namespace {

using rdf::Term;

void check_constraint(const rdf::Graph& g, const Term& focus, const Shape& s, const PropertyConstraint& c,
                      const vocab::Vocabulary& v, std::vector<Violation>& out) {
  auto values = g.objects(focus, c.path);
  auto add = [&](const std::string& kind, const std::string& detail) {
    out.push_back(Violation{focus, s.id, c.path, kind, c.message + detail, c.source});
  };
  int n = static_cast<int>(values.size());
  if (n < c.min_count)
    add("min_count", " (found " + std::to_string(n) + ", need at least " + std::to_string(c.min_count) + ")");
  if (c.max_count && n > *c.max_count)
    add("max_count", " (found " + std::to_string(n) + ", allowed at most " + std::to_string(*c.max_count) + ")");
  for (const auto& val : values) {
    if (c.value_in) {
      const auto* iri = std::get_if<rdf::Iri>(&val);
      if (!iri || !c.value_in->count(*iri)) add("value_in", " (value " + rdf::to_ntriples(val) + " is not allowed)");
    }
    if (c.value_class && !v.is_instance_of(g, val, *c.value_class))
      add("value_class", " (value " + rdf::to_ntriples(val) + " is not a " + v.compact(*c.value_class) + ")");
    if (c.datatype) {
      const auto* lit = std::get_if<rdf::Literal>(&val);
      if (!lit || lit->datatype() != *c.datatype)
        add("datatype", " (value " + rdf::to_ntriples(val) + " is not a " + v.compact(*c.datatype) + " literal)");
    }
  }
}

}  // namespace

std::string term_key(const rdf::Term& t) {
  if (const auto* i = std::get_if<rdf::Iri>(&t)) return i->str();
  if (const auto* b = std::get_if<rdf::BlankNode>(&t)) return "_:" + b->label;
  return rdf::to_ntriples(t);
}

ValidationReport validate(const rdf::Graph& g0, const std::vector<Shape>& shapes, const vocab::Vocabulary& v) {
  const rdf::Graph g = rdf::canonicalize(g0);
  std::set<Term, bool (*)(const Term&, const Term&)> subjects(
      [](const Term& a, const Term& b) { return rdf::compare_terms(a, b) < 0; });
  for (const auto& tr : g) subjects.insert(tr.subject());

  ValidationReport report;
  for (const auto& focus : subjects) {
    for (const auto& s : shapes) {
      if (!v.is_instance_of(g, focus, s.target_class)) continue;
      if (s.when && !g.contains(rdf::Triple(focus, s.when->path, s.when->value))) continue;
      for (const auto& c : s.constraints) check_constraint(g, focus, s, c, v, report.violations);
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const Violation& a, const Violation& b) {
    if (auto c = rdf::compare_terms(a.focus, b.focus); c != 0) return c < 0;
    return std::tie(a.shape_id, a.path, a.constraint_kind, a.message) <
           std::tie(b.shape_id, b.path, b.constraint_kind, b.message);
  });
  report.conforms = report.violations.empty();
  return report;
}

std::string to_text(const ValidationReport& r, const vocab::Vocabulary& v) {
  std::string out = r.conforms ? "conforms: true\n" : "conforms: false\n";
  out += "violations: " + std::to_string(r.violations.size()) + "\n";
  for (const auto& x : r.violations) {
    std::string focus = rdf::is_iri(x.focus) ? v.compact(std::get<rdf::Iri>(x.focus)) : term_key(x.focus);
    out += "- " + focus + " " + v.compact(x.path) + " [" + x.constraint_kind + "] " + x.message + " (" + x.source +
           ") {" + x.shape_id + "}\n";
  }
  return out;
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& x : r.violations)
    vs.push_back({{"focus", term_key(x.focus)},
                  {"shape", x.shape_id},
                  {"path", x.path.str()},
                  {"constraint", x.constraint_kind},
                  {"message", x.message},
                  {"source", x.source}});
  return {{"conforms", r.conforms}, {"violations", vs}};
}

}  // namespace fria::validation
