#include "fria/validation/competency.h"

#include <algorithm>
#include <cctype>

#include "fria/rdf/canonical.h"
#include "fria/vocab/terms.h"

namespace fria::validation {

namespace {

using rdf::Iri;
using rdf::Term;
using Row = std::vector<Term>;
namespace t = terms;

const std::vector<std::string>& questions() {
  static const std::vector<std::string> q{
      "When was the FRIA conducted?",
      "What is the intended purpose of the AI system?",
      "What risks and impacts were identified?",
      "What measures address the identified risks?",
      "What is the outcome of the FRIA process?",
      "What fundamental rights are affected?",
      "What authorities are notified?",
      "What documentation and tools were used for the FRIA?",
  };
  return q;
}

bool row_less(const Row& a, const Row& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Term& x, const Term& y) { return rdf::compare_terms(x, y) < 0; });
}

// Stage nodes of `fria` that are instances of `type`.
std::vector<Term> stages(const rdf::Graph& g, const Iri& fria, const Iri& type, const vocab::Vocabulary& v) {
  std::vector<Term> out;
  for (const auto& o : g.objects(fria, t::dpv::hasAssessment))
    if (v.is_instance_of(g, o, type)) out.push_back(o);
  return out;
}

}  // namespace

const std::string& cq_question(int n) {
  if (n < 1 || n > 8) throw CqError("unknown competency question CQ" + std::to_string(n));
  return questions()[n - 1];
}

int parse_cq_id(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.starts_with("cq")) s = s.substr(2);
  if (s.size() == 1 && s[0] >= '1' && s[0] <= '8') return s[0] - '0';
  throw CqError("unknown competency question '" + std::string(text) + "' (expected 1..8)");
}

CqAnswer answer_cq(const rdf::Graph& g0, const Iri& fria, int cq, const vocab::Vocabulary& v) {
  cq_question(cq);
  const rdf::Graph g = rdf::canonicalize(g0);
  if (!v.is_instance_of(g, fria, t::eu_aiact::FRIA))
    throw CqError("<" + fria.str() + "> is not typed as a FRIA in the graph");

  CqAnswer a;
  a.cq = cq;
  std::vector<Row> rows;
  std::string reason;
  auto procedures = stages(g, fria, t::fria::FRIAProcedure, v);

  switch (cq) {
    case 1:
      a.variables = {"property", "date"};
      for (const auto& p : {t::dct::created, t::dct::modified})
        for (const auto& o : g.objects(fria, p)) rows.push_back({p, o});
      reason = "no creation or modification date recorded";
      break;
    case 2:
      a.variables = {"purpose"};
      for (const auto& p : procedures)
        for (const auto& o : g.objects(p, t::dpv::hasPurpose)) rows.push_back({o});
      reason = procedures.empty() ? "inputs not recorded" : "intended purpose not recorded";
      break;
    case 3:
      a.variables = {"link", "node", "consequence"};
      for (const auto& p : procedures) {
        for (const auto& r : g.objects(p, t::dpv::hasRisk)) {
          auto cons = g.objects(r, t::dpv::hasConsequence);
          if (cons.empty()) rows.push_back({t::dpv::hasRisk, r, t::dpv::Risk});
          for (const auto& c : cons) rows.push_back({t::dpv::hasRisk, r, c});
        }
        for (const auto& i : g.objects(p, t::dpv::hasImpact)) {
          auto types = g.objects(i, t::rdf::type);
          if (types.empty()) rows.push_back({t::dpv::hasImpact, i, t::dpv::Impact});
          for (const auto& ty : types) rows.push_back({t::dpv::hasImpact, i, ty});
        }
        for (const auto& c : g.objects(p, t::dpv::hasConsequence)) rows.push_back({t::dpv::hasConsequence, c, c});
      }
      reason = procedures.empty() ? "inputs not recorded" : "no risks or impacts recorded";
      break;
    case 4:
      a.variables = {"measure", "via"};
      for (const auto& p : procedures) {
        for (const auto& m : g.objects(p, t::dpv::hasTechnicalOrganisationalMeasure))
          rows.push_back({m, t::dpv::hasTechnicalOrganisationalMeasure});
        for (const auto& r : g.objects(p, t::dpv::hasRisk))
          for (const auto& m : g.objects(r, t::dpv::isMitigatedByMeasure)) rows.push_back({m, t::dpv::isMitigatedByMeasure});
      }
      reason = procedures.empty() ? "inputs not recorded" : "no measures recorded";
      break;
    case 5:
      a.variables = {"status"};
      for (const auto& o : stages(g, fria, t::fria::FRIAOutcome, v))
        for (const auto& s : g.objects(o, t::dpv::hasStatus)) rows.push_back({s});
      reason = "outcome not determined";
      break;
    case 6:
      a.variables = {"right"};
      for (const auto& p : procedures)
        for (const auto& i : g.objects(p, t::dpv::hasImpact))
          if (v.is_instance_of(g, i, t::risk::ImpactToRights))
            for (const auto& r : g.objects(i, t::dpv::hasRight)) rows.push_back({r});
      reason = procedures.empty() ? "inputs not recorded" : "no impact on rights recorded";
      break;
    case 7:
      a.variables = {"authority", "notice"};
      for (const auto& n : stages(g, fria, t::fria::FRIANotificationAssessment, v))
        for (const auto& notice : g.objects(n, t::dpv::hasNotice))
          for (const auto& auth : g.objects(notice, t::dpv::hasRecipient)) rows.push_back({auth, notice});
      reason = "no notice prepared";
      break;
    case 8:
      a.variables = {"resource", "via"};
      for (const auto& o : g.objects(fria, t::dpv::isImplementedUsingTechnology))
        rows.push_back({o, t::dpv::isImplementedUsingTechnology});
      for (const auto& o : g.objects(fria, t::fria_ext::hasQuestionnaire)) rows.push_back({o, t::fria_ext::hasQuestionnaire});
      for (const auto& p : procedures)
        for (const auto& o : g.objects(p, t::tech::hasDocumentation)) rows.push_back({o, t::tech::hasDocumentation});
      reason = "no tools or documentation recorded";
      break;
  }
  std::sort(rows.begin(), rows.end(), row_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  a.bindings = std::move(rows);
  if (a.bindings.empty()) a.empty_reason = reason;
  return a;
}

nlohmann::json to_json(const CqAnswer& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : a.bindings) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& term : r) row.push_back(rdf::to_ntriples(term));
    rows.push_back(row);
  }
  return {{"cq", "CQ" + std::to_string(a.cq)},
          {"question", cq_question(a.cq)},
          {"variables", a.variables},
          {"bindings", rows},
          {"empty_reason", a.empty_reason ? nlohmann::json(*a.empty_reason) : nlohmann::json(nullptr)}};
}

std::string to_text(const CqAnswer& a, const vocab::Vocabulary& v) {
  std::string out = "CQ" + std::to_string(a.cq) + ": " + cq_question(a.cq) + "\n";
  if (a.bindings.empty()) return out + "(no answer: " + a.empty_reason.value_or("") + ")\n";
  for (const auto& r : a.bindings) {
    out += " ";
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto& term = r[i];
      std::string s = rdf::is_iri(term) ? v.compact(std::get<Iri>(term)) : rdf::to_ntriples(term);
      out += " " + a.variables[i] + "=" + s;
    }
    out += "\n";
  }
  return out;
}

}  // namespace fria::validation
