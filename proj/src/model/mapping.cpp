#include "fria/model/mapping.h"

#include <algorithm>

#include "fria/vocab/terms.h"

namespace fria::model {

namespace {

using rdf::BlankNode;
using rdf::Graph;
using rdf::Literal;
using rdf::Term;
using rdf::Triple;
namespace t = terms;

Literal bool_literal(bool b) { return Literal(b ? "true" : "false", rdf::xsd::boolean); }

void require_term(const vocab::Vocabulary& v, const Iri& iri) {
  if (!v.contains(iri)) throw vocab::UnknownTermError(iri);
}

void emit_described(Graph& g, const Iri& from, const Iri& link, const DescribedNode& n, const Iri& type) {
  g.insert(from, link, n.iri);
  g.insert(n.iri, t::rdf::type, type);
  if (!n.description.empty()) g.insert(n.iri, t::dct::description, Literal(n.description));
}

void emit_metadata(Graph& g, const Iri& r, const FriaMetadata& m) {
  auto opt_ts = [&](const Iri& p, const std::optional<Timestamp>& ts) {
    if (ts) g.insert(r, p, ts->to_literal());
  };
  auto opt_iri = [&](const Iri& p, const std::optional<Iri>& v) {
    if (v) g.insert(r, p, *v);
  };
  auto iri_set = [&](const Iri& p, const std::set<Iri>& s) {
    for (const auto& v : s) g.insert(r, p, v);
  };
  auto text = [&](const Iri& p, const std::string& s) {
    if (!s.empty()) g.insert(r, p, Literal(s));
  };
  g.insert(r, t::dct::created, m.created.to_literal());
  opt_ts(t::dct::modified, m.modified);
  opt_ts(t::dct::dateSubmitted, m.date_submitted);
  opt_ts(t::dct::dateAccepted, m.date_accepted);
  if (m.temporal_coverage) g.insert(r, t::dct::temporal, Literal(*m.temporal_coverage));
  opt_ts(t::dct::valid, m.valid_until);
  iri_set(t::dct::conformsTo, m.conforms_to);
  text(t::dct::title, m.title);
  text(t::dct::description, m.description);
  text(t::dct::identifier, m.identifier);
  opt_iri(t::dct::isVersionOf, m.is_version_of);
  iri_set(t::dct::subject, m.subject);
  if (m.coverage) g.insert(r, t::dct::coverage, Literal(*m.coverage));
  opt_iri(t::dct::publisher, m.publisher);
  iri_set(t::dct::contributor, m.contributors);
  opt_iri(t::dct::creator, m.creator_tool);
  opt_iri(t::dct::provenance, m.provenance_log);
}

void emit_procedure(Graph& g, const Iri& r, const ProcedureInputs& in, const vocab::Vocabulary& v) {
  const Iri p = procedure_node(r);
  g.insert(r, t::dpv::hasAssessment, p);
  g.insert(p, t::rdf::type, t::fria::FRIAProcedure);
  for (const auto& n : in.processes) emit_described(g, p, t::dpv::hasProcess, n, t::fria::AIProcess);
  if (in.intended_purpose) {
    if (const auto* iri = std::get_if<Iri>(&*in.intended_purpose)) {
      g.insert(p, t::dpv::hasPurpose, *iri);
    } else {
      emit_described(g, p, t::dpv::hasPurpose, DescribedNode{purpose_node(r), std::get<std::string>(*in.intended_purpose)},
                     t::eu_aiact::IntendedPurpose);
    }
  }
  if (in.duration) g.insert(p, t::dpv::hasDuration, *in.duration);
  if (in.frequency) g.insert(p, t::dpv::hasFrequency, *in.frequency);
  for (const auto& n : in.intended_uses) emit_described(g, p, t::tech::hasIntendedUse, n, t::fria::IntendedUse);
  for (const auto& h : in.human_subject_categories) g.insert(p, t::dpv::hasDataSubject, h);
  int k = 0;
  for (const auto& i : in.impacts) {
    BlankNode b{"impact" + std::to_string(k++)};
    g.insert(p, t::dpv::hasImpact, b);
    g.insert(b, t::rdf::type, i.impact);
    g.insert(b, t::dpv::hasImpactOn, i.affected);
    g.insert(b, t::dpv::hasLikelihood, i.likelihood);
    if (i.right) g.insert(b, t::dpv::hasRight, *i.right);
  }
  for (const auto& h : in.harms) {
    g.insert(p, t::dpv::hasRisk, h.risk);
    g.insert(h.risk, t::rdf::type, t::dpv::Risk);
    g.insert(h.risk, t::dpv::hasConsequence, h.harm_category);
    g.insert(h.risk, t::fria_ext::hasResidualRiskLevel, to_iri(h.residual_level));
    g.insert(h.risk, t::fria_ext::isRiskAccepted, bool_literal(h.accepted));
    for (const auto& m : h.mitigations) g.insert(h.risk, t::dpv::isMitigatedByMeasure, m);
  }
  for (const auto& n : in.oversight_measures)
    emit_described(g, p, t::dpv::hasHumanInvolvement, n, t::dpv::HumanInvolvementForOversight);
  if (in.instructions_for_use) g.insert(p, t::tech::hasDocumentation, *in.instructions_for_use);
  for (const auto& m : in.mitigation_measures)
    emit_described(g, p, t::dpv::hasTechnicalOrganisationalMeasure, DescribedNode{m.iri, m.description}, m.kind);
  for (const auto& d : in.reused_assessments) g.insert(p, t::dpv::hasData, d);
  (void)v;
}

// Reads a graph while recording which triples were mapped to fields.
class Reader {
 public:
  Reader(const Graph& g, const vocab::Vocabulary& v) : g_(g), v_(v) {}

  const Graph& graph() const { return g_; }
  const vocab::Vocabulary& vocab() const { return v_; }

  std::vector<Term> objects(const Term& s, const Iri& p) const { return g_.objects(s, p); }
  bool has(const Term& s, const Iri& p, const Term& o) const { return g_.contains(Triple(s, p, o)); }

  void consume(const Term& s, const Iri& p, const Term& o) {
    Triple tr(s, p, o);
    if (g_.contains(tr)) consumed_.insert(tr);
  }
  void consume(const std::vector<Triple>& ts) {
    for (const auto& tr : ts) consume(tr.subject(), tr.predicate(), tr.object());
  }
  bool consumed(const Triple& tr) const { return consumed_.count(tr) != 0; }

  // Exactly one object, an IRI.
  std::optional<Iri> single_iri(const Term& s, const Iri& p) const {
    auto objs = objects(s, p);
    if (objs.size() != 1) return std::nullopt;
    if (const auto* i = std::get_if<Iri>(&objs.front())) return *i;
    return std::nullopt;
  }
  // Smallest literal object (others, if any, stay unmapped).
  std::optional<Literal> first_literal(const Term& s, const Iri& p) const {
    for (const auto& o : objects(s, p))
      if (const auto* l = std::get_if<Literal>(&o)) return *l;
    return std::nullopt;
  }
  std::optional<Iri> first_iri(const Term& s, const Iri& p) const {
    for (const auto& o : objects(s, p))
      if (const auto* i = std::get_if<Iri>(&o)) return *i;
    return std::nullopt;
  }
  std::set<Iri> all_iris(const Term& s, const Iri& p) {
    std::set<Iri> out;
    for (const auto& o : objects(s, p))
      if (const auto* i = std::get_if<Iri>(&o)) {
        out.insert(*i);
        consume(s, p, *i);
      }
    return out;
  }

  Graph remainder() const {
    Graph out;
    for (const auto& tr : g_)
      if (!consumed_.count(tr)) out.insert(tr);
    return out;
  }

 private:
  const Graph& g_;
  const vocab::Vocabulary& v_;
  std::set<Triple> consumed_;
};

std::optional<Timestamp> read_timestamp(Reader& rd, const Iri& s, const Iri& p) {
  for (const auto& o : rd.objects(s, p)) {
    const auto* l = std::get_if<Literal>(&o);
    if (!l) continue;
    if (auto ts = Timestamp::from_literal(*l)) {
      rd.consume(s, p, o);
      return ts;
    }
  }
  return std::nullopt;
}

std::optional<std::string> read_text(Reader& rd, const Term& s, const Iri& p) {
  for (const auto& o : rd.objects(s, p)) {
    const auto* l = std::get_if<Literal>(&o);
    if (l && l->datatype() == rdf::xsd::string && !l->language()) {
      rd.consume(s, p, o);
      return l->lexical();
    }
  }
  return std::nullopt;
}

std::optional<Iri> read_one_iri(Reader& rd, const Term& s, const Iri& p) {
  auto v = rd.first_iri(s, p);
  if (v) rd.consume(s, p, *v);
  return v;
}

FriaMetadata read_metadata(Reader& rd, const Iri& r) {
  FriaMetadata m;
  auto created = read_timestamp(rd, r, t::dct::created);
  if (!created) throw ModelError("record <" + r.str() + "> has no dct:created date");
  m.created = *created;
  m.modified = read_timestamp(rd, r, t::dct::modified);
  m.date_submitted = read_timestamp(rd, r, t::dct::dateSubmitted);
  m.date_accepted = read_timestamp(rd, r, t::dct::dateAccepted);
  m.temporal_coverage = read_text(rd, r, t::dct::temporal);
  m.valid_until = read_timestamp(rd, r, t::dct::valid);
  m.conforms_to = rd.all_iris(r, t::dct::conformsTo);
  m.title = read_text(rd, r, t::dct::title).value_or("");
  m.description = read_text(rd, r, t::dct::description).value_or("");
  m.identifier = read_text(rd, r, t::dct::identifier).value_or("");
  m.is_version_of = read_one_iri(rd, r, t::dct::isVersionOf);
  m.subject = rd.all_iris(r, t::dct::subject);
  m.coverage = read_text(rd, r, t::dct::coverage);
  m.publisher = read_one_iri(rd, r, t::dct::publisher);
  m.contributors = rd.all_iris(r, t::dct::contributor);
  m.creator_tool = read_one_iri(rd, r, t::dct::creator);
  m.provenance_log = read_one_iri(rd, r, t::dct::provenance);
  return m;
}

Iri read_status_strict(Reader& rd, const Iri& node, const char* stage) {
  auto objs = rd.objects(node, t::dpv::hasStatus);
  if (objs.size() != 1)
    throw MalformedStatusError(std::string(stage) + " node <" + node.str() + "> has " + std::to_string(objs.size()) +
                               " statuses; exactly one is required");
  const auto* iri = std::get_if<Iri>(&objs.front());
  if (!iri) throw MalformedStatusError(std::string(stage) + " status of <" + node.str() + "> is not an IRI");
  if (!rd.vocab().contains(*iri)) throw vocab::UnknownTermError(*iri);
  rd.consume(node, t::dpv::hasStatus, *iri);
  return *iri;
}

// Nodes linked from `from` by `link` that carry `type`; the type triple and
// a description (if any) are consumed.
std::set<DescribedNode> read_described(Reader& rd, const Iri& from, const Iri& link, const Iri& type) {
  std::set<DescribedNode> out;
  for (const auto& o : rd.objects(from, link)) {
    const auto* iri = std::get_if<Iri>(&o);
    if (!iri || !rd.has(*iri, t::rdf::type, type)) continue;
    rd.consume(from, link, *iri);
    rd.consume(*iri, t::rdf::type, type);
    DescribedNode n{*iri, read_text(rd, *iri, t::dct::description).value_or("")};
    out.insert(n);
  }
  return out;
}

Necessity read_necessity(Reader& rd, const Iri& node) {
  Necessity n{read_status_strict(rd, node, "necessity"), read_text(rd, node, t::dct::description).value_or(""), {}};
  for (const auto& o : rd.objects(node, t::fria_ext::conditionFlag)) {
    const auto* l = std::get_if<Literal>(&o);
    if (!l || l->datatype() != rdf::xsd::string) continue;
    const auto& s = l->lexical();
    auto eq = s.rfind('=');
    if (eq == std::string::npos || eq == 0) continue;
    std::string value = s.substr(eq + 1);
    if (value != "true" && value != "false") continue;
    std::string key = s.substr(0, eq);
    if (n.condition_flags.count(key)) continue;
    n.condition_flags[key] = value == "true";
    rd.consume(node, t::fria_ext::conditionFlag, o);
  }
  return n;
}

bool is_impact_class(const vocab::Vocabulary& v, const Iri& c) {
  const auto* def = v.find(c);
  return def && def->kind == vocab::TermKind::Class && v.superclass_closure(c).count(t::dpv::Impact);
}

std::set<ImpactEntry> read_impacts(Reader& rd, const Iri& p) {
  std::set<ImpactEntry> out;
  const auto& g = rd.graph();
  for (const auto& o : rd.objects(p, t::dpv::hasImpact)) {
    const auto* b = std::get_if<BlankNode>(&o);
    if (!b) continue;
    // Only self-contained nodes become entries; anything richer is kept
    // verbatim so that nothing is lost when labels change.
    if (g.match(std::nullopt, std::nullopt, o).size() != 1) continue;
    auto type = rd.single_iri(o, t::rdf::type);
    auto affected = rd.single_iri(o, t::dpv::hasImpactOn);
    auto likelihood = rd.single_iri(o, t::dpv::hasLikelihood);
    auto rights = rd.objects(o, t::dpv::hasRight);
    if (!type || !affected || !likelihood || rights.size() > 1 || !is_impact_class(rd.vocab(), *type)) continue;
    std::optional<Iri> right;
    if (rights.size() == 1) {
      const auto* ri = std::get_if<Iri>(&rights.front());
      if (!ri) continue;
      right = *ri;
    }
    auto outgoing = g.match(o, std::nullopt, std::nullopt);
    std::size_t expected = 3 + (right ? 1 : 0);
    if (outgoing.size() != expected) continue;
    rd.consume(outgoing);
    rd.consume(p, t::dpv::hasImpact, o);
    out.insert(ImpactEntry{*type, *affected, *likelihood, right});
  }
  return out;
}

std::set<RiskEntry> read_harms(Reader& rd, const Iri& p) {
  std::set<RiskEntry> out;
  for (const auto& o : rd.objects(p, t::dpv::hasRisk)) {
    const auto* risk = std::get_if<Iri>(&o);
    if (!risk || !rd.has(*risk, t::rdf::type, t::dpv::Risk)) continue;
    auto harm = rd.single_iri(*risk, t::dpv::hasConsequence);
    auto level_iri = rd.single_iri(*risk, t::fria_ext::hasResidualRiskLevel);
    auto accepted = rd.objects(*risk, t::fria_ext::isRiskAccepted);
    if (!harm || !level_iri || accepted.size() != 1) continue;
    auto level = residual_level_from_iri(*level_iri);
    const auto* acc = std::get_if<Literal>(&accepted.front());
    if (!level || !acc || acc->datatype() != rdf::xsd::boolean) continue;
    if (acc->lexical() != "true" && acc->lexical() != "false") continue;
    RiskEntry e{*risk, *harm, *level, acc->lexical() == "true", {}};
    rd.consume(p, t::dpv::hasRisk, *risk);
    rd.consume(*risk, t::rdf::type, t::dpv::Risk);
    rd.consume(*risk, t::dpv::hasConsequence, *harm);
    rd.consume(*risk, t::fria_ext::hasResidualRiskLevel, *level_iri);
    rd.consume(*risk, t::fria_ext::isRiskAccepted, *acc);
    e.mitigations = rd.all_iris(*risk, t::dpv::isMitigatedByMeasure);
    out.insert(std::move(e));
  }
  return out;
}

std::set<MitigationMeasure> read_mitigations(Reader& rd, const Iri& p) {
  std::set<MitigationMeasure> out;
  const auto& v = rd.vocab();
  for (const auto& o : rd.objects(p, t::dpv::hasTechnicalOrganisationalMeasure)) {
    const auto* iri = std::get_if<Iri>(&o);
    if (!iri) continue;
    // The kind is the single catalogued mitigation class the node carries.
    std::optional<Iri> kind;
    int kinds = 0;
    for (const auto& ty : rd.objects(*iri, t::rdf::type)) {
      const auto* c = std::get_if<Iri>(&ty);
      if (!c) continue;
      const auto* def = v.find(*c);
      if (def && def->kind == vocab::TermKind::Class && v.superclass_closure(*c).count(t::dpv::RiskMitigationMeasure)) {
        kind = *c;
        ++kinds;
      }
    }
    if (kinds != 1) continue;
    rd.consume(p, t::dpv::hasTechnicalOrganisationalMeasure, *iri);
    rd.consume(*iri, t::rdf::type, *kind);
    out.insert(MitigationMeasure{*iri, *kind, read_text(rd, *iri, t::dct::description).value_or("")});
  }
  return out;
}

ProcedureInputs read_procedure_impl(Reader& rd, const Iri& r, const Iri& p) {
  ProcedureInputs in;
  in.processes = read_described(rd, p, t::dpv::hasProcess, t::fria::AIProcess);
  if (auto purpose = rd.single_iri(p, t::dpv::hasPurpose)) {
    rd.consume(p, t::dpv::hasPurpose, *purpose);
    const Iri minted = purpose_node(r);
    std::optional<std::string> text;
    if (*purpose == minted && rd.has(minted, t::rdf::type, t::eu_aiact::IntendedPurpose) &&
        rd.objects(minted, t::rdf::type).size() == 1 && rd.objects(minted, t::dct::description).size() == 1) {
      text = read_text(rd, minted, t::dct::description);
      if (text) rd.consume(minted, t::rdf::type, t::eu_aiact::IntendedPurpose);
    }
    if (text)
      in.intended_purpose = *text;
    else
      in.intended_purpose = *purpose;
  }
  if ((in.duration = rd.single_iri(p, t::dpv::hasDuration))) rd.consume(p, t::dpv::hasDuration, *in.duration);
  if ((in.frequency = rd.single_iri(p, t::dpv::hasFrequency))) rd.consume(p, t::dpv::hasFrequency, *in.frequency);
  in.intended_uses = read_described(rd, p, t::tech::hasIntendedUse, t::fria::IntendedUse);
  in.human_subject_categories = rd.all_iris(p, t::dpv::hasDataSubject);
  in.impacts = read_impacts(rd, p);
  in.harms = read_harms(rd, p);
  in.oversight_measures =
      read_described(rd, p, t::dpv::hasHumanInvolvement, t::dpv::HumanInvolvementForOversight);
  if ((in.instructions_for_use = rd.single_iri(p, t::tech::hasDocumentation)))
    rd.consume(p, t::tech::hasDocumentation, *in.instructions_for_use);
  in.mitigation_measures = read_mitigations(rd, p);
  in.reused_assessments = rd.all_iris(p, t::dpv::hasData);
  return in;
}

// The single node linked by dpv:hasAssessment that carries `type`.
std::optional<Iri> stage(Reader& rd, const Iri& r, const Iri& type, const char* name) {
  std::optional<Iri> found;
  for (const auto& o : rd.objects(r, t::dpv::hasAssessment)) {
    const auto* iri = std::get_if<Iri>(&o);
    if (!iri || !rd.has(*iri, t::rdf::type, type)) continue;
    if (found) throw ModelError(std::string("record <") + r.str() + "> has more than one " + name + " assessment");
    found = *iri;
  }
  if (found) {
    rd.consume(r, t::dpv::hasAssessment, *found);
    rd.consume(*found, t::rdf::type, type);
  }
  return found;
}

}  // namespace

rdf::PrefixMap record_prefixes(const vocab::Vocabulary& v) { return v.all_prefixes(); }

rdf::Graph to_graph(const FriaRecord& r, const vocab::Vocabulary& v) {
  Graph g;
  g.set_prefixes(record_prefixes(v));
  const Iri& R = r.iri;
  g.insert(R, t::rdf::type, t::eu_aiact::FRIA);
  emit_metadata(g, R, r.metadata);
  if (r.stale) g.insert(R, t::fria_ext::requiresReassessment, bool_literal(true));
  for (const auto& tool : r.tools_used) {
    g.insert(R, t::dpv::isImplementedUsingTechnology, tool);
    if (!v.contains(tool)) g.insert(tool, t::rdf::type, t::fria::FRIATool);
  }
  for (const auto& q : r.questionnaires) g.insert(R, t::fria_ext::hasQuestionnaire, q);

  if (r.necessity) {
    const auto& n = *r.necessity;
    require_term(v, n.status);
    const Iri node = necessity_node(R);
    g.insert(R, t::dpv::hasAssessment, node);
    g.insert(node, t::rdf::type, t::fria::FRIANecessityAssessment);
    g.insert(node, t::dpv::hasStatus, n.status);
    if (!n.justification.empty()) g.insert(node, t::dct::description, Literal(n.justification));
    for (const auto& [k, val] : n.condition_flags)
      g.insert(node, t::fria_ext::conditionFlag, Literal(k + "=" + (val ? "true" : "false")));
  }
  if (r.inputs) emit_procedure(g, R, *r.inputs, v);
  if (r.outcome) {
    const auto& o = *r.outcome;
    require_term(v, o.status);
    const Iri node = outcome_node(R);
    g.insert(R, t::dpv::hasAssessment, node);
    g.insert(node, t::rdf::type, t::fria::FRIAOutcome);
    g.insert(node, t::dpv::hasStatus, o.status);
    for (const auto& right : o.rights_impacted) g.insert(node, t::dpv::hasRight, right);
    if (!o.rationale.empty()) g.insert(node, t::dct::description, Literal(o.rationale));
  }
  if (r.notification) {
    const auto& n = *r.notification;
    require_term(v, n.status);
    const Iri node = notification_node(R);
    g.insert(R, t::dpv::hasAssessment, node);
    g.insert(node, t::rdf::type, t::fria::FRIANotificationAssessment);
    g.insert(node, t::dpv::hasStatus, n.status);
    if (n.authority) g.insert(node, t::dpv::hasRecipient, *n.authority);
    if (n.notice) g.insert(node, t::dpv::hasNotice, *n.notice);
    if (n.exemption_basis) g.insert(node, t::fria_ext::exemptionBasis, Literal(*n.exemption_basis));
    if (n.sent_on) g.insert(node, t::dct::dateSubmitted, n.sent_on->to_literal());
  }
  g.insert_all(r.remainder);
  return g;
}

FriaRecord from_graph(const rdf::Graph& g, const Iri& fria, const vocab::Vocabulary& v) {
  Reader rd(g, v);
  if (!rd.has(fria, t::rdf::type, t::eu_aiact::FRIA)) {
    bool typed = false;
    for (const auto& o : g.objects(fria, t::rdf::type)) {
      const auto* c = std::get_if<Iri>(&o);
      const auto* def = c ? v.find(*c) : nullptr;
      if (def && def->kind == vocab::TermKind::Class && v.superclass_closure(*c).count(t::eu_aiact::FRIA)) typed = true;
    }
    if (!typed) throw MissingFriaTypeError("<" + fria.str() + "> is not typed as a FRIA");
  }
  rd.consume(fria, t::rdf::type, t::eu_aiact::FRIA);

  FriaRecord r{fria, read_metadata(rd, fria), {}, {}, {}, {}, {}, {}, false, {}};
  if (rd.has(fria, t::fria_ext::requiresReassessment, bool_literal(true))) {
    r.stale = true;
    rd.consume(fria, t::fria_ext::requiresReassessment, bool_literal(true));
  }
  for (const auto& tool : rd.all_iris(fria, t::dpv::isImplementedUsingTechnology)) {
    r.tools_used.insert(tool);
    if (!v.contains(tool)) rd.consume(tool, t::rdf::type, t::fria::FRIATool);
  }
  r.questionnaires = rd.all_iris(fria, t::fria_ext::hasQuestionnaire);

  if (auto n = stage(rd, fria, t::fria::FRIANecessityAssessment, "necessity")) r.necessity = read_necessity(rd, *n);
  if (auto p = stage(rd, fria, t::fria::FRIAProcedure, "procedure")) r.inputs = read_procedure_impl(rd, fria, *p);
  if (auto o = stage(rd, fria, t::fria::FRIAOutcome, "outcome")) {
    Outcome out{read_status_strict(rd, *o, "outcome"), rd.all_iris(*o, t::dpv::hasRight),
                read_text(rd, *o, t::dct::description).value_or("")};
    r.outcome = std::move(out);
  }
  if (auto n = stage(rd, fria, t::fria::FRIANotificationAssessment, "notification")) {
    Notification out{read_status_strict(rd, *n, "notification"), {}, {}, {}, {}};
    out.authority = read_one_iri(rd, *n, t::dpv::hasRecipient);
    out.notice = read_one_iri(rd, *n, t::dpv::hasNotice);
    out.exemption_basis = read_text(rd, *n, t::fria_ext::exemptionBasis);
    out.sent_on = read_timestamp(rd, *n, t::dct::dateSubmitted);
    r.notification = std::move(out);
  }
  r.remainder = rd.remainder();
  return r;
}

ProcedureInputs read_procedure(const rdf::Graph& g, const Iri& record, const Iri& node, const vocab::Vocabulary& v) {
  Reader rd(g, v);
  return read_procedure_impl(rd, record, node);
}

std::optional<Iri> read_status(const rdf::Graph& g, const Iri& node) {
  auto objs = g.objects(node, t::dpv::hasStatus);
  if (objs.size() != 1) return std::nullopt;
  if (const auto* i = std::get_if<Iri>(&objs.front())) return *i;
  return std::nullopt;
}

void erase_node(rdf::Graph& g, const rdf::Term& node) {
  for (const auto& tr : g.match(node, std::nullopt, std::nullopt)) {
    g.erase(tr);
    if (rdf::is_blank(tr.object())) erase_node(g, tr.object());
  }
}

}  // namespace fria::model
