#include "fria/model/record.h"

#include "fria/vocab/terms.h"

namespace fria::model {

namespace t = terms;

std::string_view to_string(ResidualLevel level) {
  switch (level) {
    case ResidualLevel::None: return "none";
    case ResidualLevel::Acceptable: return "acceptable";
    case ResidualLevel::High: return "high";
    case ResidualLevel::Unacceptable: return "unacceptable";
  }
  return "none";
}

Iri to_iri(ResidualLevel level) {
  switch (level) {
    case ResidualLevel::None: return t::fria_ext::ResidualRiskNone;
    case ResidualLevel::Acceptable: return t::fria_ext::ResidualRiskAcceptable;
    case ResidualLevel::High: return t::fria_ext::ResidualRiskHigh;
    case ResidualLevel::Unacceptable: return t::fria_ext::ResidualRiskUnacceptable;
  }
  return t::fria_ext::ResidualRiskNone;
}

std::optional<ResidualLevel> residual_level_from_iri(const Iri& iri) {
  for (auto l : {ResidualLevel::None, ResidualLevel::Acceptable, ResidualLevel::High, ResidualLevel::Unacceptable})
    if (to_iri(l) == iri) return l;
  return std::nullopt;
}

std::optional<ResidualLevel> residual_level_from_string(std::string_view s) {
  for (auto l : {ResidualLevel::None, ResidualLevel::Acceptable, ResidualLevel::High, ResidualLevel::Unacceptable})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

Iri stage_iri(const Iri& record, std::string_view fragment) {
  return Iri(record.str() + "#" + std::string(fragment));
}

Iri necessity_node(const Iri& record) { return stage_iri(record, "necessity"); }
Iri procedure_node(const Iri& record) { return stage_iri(record, "procedure"); }
Iri outcome_node(const Iri& record) { return stage_iri(record, "outcome"); }
Iri notification_node(const Iri& record) { return stage_iri(record, "notification"); }
Iri purpose_node(const Iri& record) { return stage_iri(record, "purpose"); }

FriaRecord new_record(const Iri& iri, const std::string& identifier, const Timestamp& created) {
  FriaRecord r{iri, {}, {}, {}, {}, {}, {}, {}, false, {}};
  r.metadata.created = created;
  r.metadata.identifier = identifier;
  r.metadata.title = "FRIA " + identifier;
  r.metadata.creator_tool = t::fria_ext::FRIAComplianceEngine;
  r.tools_used.insert(t::fria_ext::FRIAComplianceEngine);
  return r;
}

void check_invariants(const FriaRecord& r, const vocab::Vocabulary& v) {
  const auto& m = r.metadata;
  if (m.identifier.empty()) throw ModelError("record identifier is empty");
  if (m.modified && m.modified->compare_day(m.created) < 0)
    throw ModelError("modified date " + m.modified->lexical() + " precedes created date " + m.created.lexical());
  if (r.outcome && (!r.necessity || r.necessity->status != t::fria::FRIARequired))
    throw ModelError("an outcome requires a necessity assessment with status FRIARequired");
  if (r.notification && !r.outcome) throw ModelError("a notification requires an outcome");
  if (r.inputs) {
    for (const auto& h : r.inputs->harms)
      if (h.residual_level == ResidualLevel::None && !h.accepted)
        throw ModelError("risk <" + h.risk.str() + "> has no residual risk but is marked not accepted");
    for (const auto& i : r.inputs->impacts) {
      const auto* def = v.find(i.impact);
      bool rights = def && def->kind == vocab::TermKind::Class &&
                    v.superclass_closure(i.impact).count(t::risk::ImpactToRights);
      if (rights && !i.right) throw ModelError("impact on rights <" + i.impact.str() + "> names no right");
    }
  }
}

FriaRecord touch(const FriaRecord& r, const Timestamp& when) {
  if (when.compare_day(r.metadata.created) < 0)
    throw ModelError("date " + when.lexical() + " precedes created date " + r.metadata.created.lexical());
  FriaRecord out = r;
  out.metadata.modified = when;
  out.stale = true;
  return out;
}

}  // namespace fria::model
