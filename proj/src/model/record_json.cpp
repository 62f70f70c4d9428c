#include "fria/model/record_json.h"

namespace fria::model {

namespace {

using nlohmann::json;

json iri_or_null(const std::optional<Iri>& i) { return i ? json(i->str()) : json(nullptr); }
json ts_or_null(const std::optional<Timestamp>& t) { return t ? json(t->lexical()) : json(nullptr); }
json text_or_null(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

json iri_array(const std::set<Iri>& s) {
  json a = json::array();
  for (const auto& i : s) a.push_back(i.str());
  return a;
}

json described_array(const std::set<DescribedNode>& s) {
  json a = json::array();
  for (const auto& n : s) a.push_back({{"iri", n.iri.str()}, {"description", n.description}});
  return a;
}

json metadata_json(const FriaMetadata& m) {
  return {
      {"created", m.created.lexical()},
      {"modified", ts_or_null(m.modified)},
      {"date_submitted", ts_or_null(m.date_submitted)},
      {"date_accepted", ts_or_null(m.date_accepted)},
      {"temporal_coverage", text_or_null(m.temporal_coverage)},
      {"valid_until", ts_or_null(m.valid_until)},
      {"conforms_to", iri_array(m.conforms_to)},
      {"title", m.title},
      {"description", m.description},
      {"identifier", m.identifier},
      {"is_version_of", iri_or_null(m.is_version_of)},
      {"subject", iri_array(m.subject)},
      {"coverage", text_or_null(m.coverage)},
      {"publisher", iri_or_null(m.publisher)},
      {"contributors", iri_array(m.contributors)},
      {"creator_tool", iri_or_null(m.creator_tool)},
      {"provenance_log", iri_or_null(m.provenance_log)},
  };
}

}  // namespace

json to_json(const ProcedureInputs& in) {
  json purpose = nullptr;
  if (in.intended_purpose) {
    if (const auto* i = std::get_if<Iri>(&*in.intended_purpose))
      purpose = {{"iri", i->str()}};
    else
      purpose = {{"text", std::get<std::string>(*in.intended_purpose)}};
  }
  json impacts = json::array();
  for (const auto& i : in.impacts)
    impacts.push_back({{"impact", i.impact.str()},
                       {"affected", i.affected.str()},
                       {"likelihood", i.likelihood.str()},
                       {"right", iri_or_null(i.right)}});
  json harms = json::array();
  for (const auto& h : in.harms)
    harms.push_back({{"risk", h.risk.str()},
                     {"harm_category", h.harm_category.str()},
                     {"residual_level", std::string(to_string(h.residual_level))},
                     {"accepted", h.accepted},
                     {"mitigations", iri_array(h.mitigations)}});
  json mitigations = json::array();
  for (const auto& m : in.mitigation_measures)
    mitigations.push_back({{"iri", m.iri.str()}, {"kind", m.kind.str()}, {"description", m.description}});
  return {
      {"processes", described_array(in.processes)},
      {"intended_purpose", purpose},
      {"duration", iri_or_null(in.duration)},
      {"frequency", iri_or_null(in.frequency)},
      {"intended_uses", described_array(in.intended_uses)},
      {"human_subject_categories", iri_array(in.human_subject_categories)},
      {"impacts", impacts},
      {"harms", harms},
      {"oversight_measures", described_array(in.oversight_measures)},
      {"instructions_for_use", iri_or_null(in.instructions_for_use)},
      {"mitigation_measures", mitigations},
      {"reused_assessments", iri_array(in.reused_assessments)},
  };
}

json to_json(const FriaRecord& r) {
  json out = {{"iri", r.iri.str()}, {"metadata", metadata_json(r.metadata)}};
  if (r.necessity) {
    json flags = json::object();
    for (const auto& [k, v] : r.necessity->condition_flags) flags[k] = v;
    out["necessity"] = {{"status", r.necessity->status.str()},
                        {"justification", r.necessity->justification},
                        {"condition_flags", flags}};
  } else {
    out["necessity"] = nullptr;
  }
  out["inputs"] = r.inputs ? to_json(*r.inputs) : json(nullptr);
  if (r.outcome)
    out["outcome"] = {{"status", r.outcome->status.str()},
                      {"rights_impacted", iri_array(r.outcome->rights_impacted)},
                      {"rationale", r.outcome->rationale}};
  else
    out["outcome"] = nullptr;
  if (r.notification)
    out["notification"] = {{"status", r.notification->status.str()},
                           {"authority", iri_or_null(r.notification->authority)},
                           {"notice", iri_or_null(r.notification->notice)},
                           {"exemption_basis", text_or_null(r.notification->exemption_basis)},
                           {"sent_on", ts_or_null(r.notification->sent_on)}};
  else
    out["notification"] = nullptr;
  out["tools_used"] = iri_array(r.tools_used);
  out["questionnaires"] = iri_array(r.questionnaires);
  out["stale"] = r.stale;
  out["remainder_triples"] = r.remainder.size();
  return out;
}

}  // namespace fria::model
