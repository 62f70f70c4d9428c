#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fria/rdf/datetime.h"
#include "fria/rdf/graph.h"
#include "fria/vocab/vocabulary.h"

namespace fria::model {

using rdf::Iri;
using rdf::Timestamp;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The graph has no node typed as a FRIA at the requested IRI.
class MissingFriaTypeError : public ModelError {
 public:
  using ModelError::ModelError;
};

// A stage node with zero or several statuses where exactly one is required.
class MalformedStatusError : public ModelError {
 public:
  using ModelError::ModelError;
};

struct FriaMetadata {
  Timestamp created;                        // dct:created
  std::optional<Timestamp> modified;        // dct:modified
  std::optional<Timestamp> date_submitted;  // dct:dateSubmitted
  std::optional<Timestamp> date_accepted;   // dct:dateAccepted
  std::optional<std::string> temporal_coverage;  // dct:temporal
  std::optional<Timestamp> valid_until;     // dct:valid
  std::set<Iri> conforms_to;                // dct:conformsTo
  std::string title;                        // dct:title
  std::string description;                  // dct:description
  std::string identifier;                   // dct:identifier
  std::optional<Iri> is_version_of;         // dct:isVersionOf
  std::set<Iri> subject;                    // dct:subject
  std::optional<std::string> coverage;      // dct:coverage
  std::optional<Iri> publisher;             // dct:publisher
  std::set<Iri> contributors;               // dct:contributor
  std::optional<Iri> creator_tool;          // dct:creator
  std::optional<Iri> provenance_log;        // dct:provenance

  friend bool operator==(const FriaMetadata&, const FriaMetadata&) = default;
};

struct Necessity {
  Iri status;
  std::string justification;
  std::map<std::string, bool> condition_flags;

  friend bool operator==(const Necessity&, const Necessity&) = default;
};

// A node minted for (or pointing at) a described thing: a deployer
// process, an intended use, an oversight measure.
struct DescribedNode {
  Iri iri;
  std::string description;

  friend auto operator<=>(const DescribedNode&, const DescribedNode&) = default;
};

struct MitigationMeasure {
  Iri iri;
  Iri kind;  // dpv:RiskMitigationMeasure or a subclass
  std::string description;

  friend auto operator<=>(const MitigationMeasure&, const MitigationMeasure&) = default;
};

struct ImpactEntry {
  Iri impact;  // a dpv:Impact subclass
  Iri affected;
  Iri likelihood;
  std::optional<Iri> right;

  friend auto operator<=>(const ImpactEntry&, const ImpactEntry&) = default;
};

enum class ResidualLevel { None, Acceptable, High, Unacceptable };

std::string_view to_string(ResidualLevel level);
Iri to_iri(ResidualLevel level);
std::optional<ResidualLevel> residual_level_from_iri(const Iri& iri);
std::optional<ResidualLevel> residual_level_from_string(std::string_view s);

struct RiskEntry {
  Iri risk;
  Iri harm_category;
  ResidualLevel residual_level = ResidualLevel::None;
  bool accepted = true;
  std::set<Iri> mitigations;

  friend auto operator<=>(const RiskEntry&, const RiskEntry&) = default;
};

// Free text is kept on a locally minted purpose node.
using IntendedPurpose = std::variant<Iri, std::string>;

struct ProcedureInputs {
  std::set<DescribedNode> processes;
  std::optional<IntendedPurpose> intended_purpose;
  std::optional<Iri> duration;
  std::optional<Iri> frequency;
  std::set<DescribedNode> intended_uses;
  std::set<Iri> human_subject_categories;
  std::set<ImpactEntry> impacts;
  std::set<RiskEntry> harms;
  std::set<DescribedNode> oversight_measures;
  std::optional<Iri> instructions_for_use;
  std::set<MitigationMeasure> mitigation_measures;
  std::set<Iri> reused_assessments;

  friend bool operator==(const ProcedureInputs&, const ProcedureInputs&) = default;
};

struct Outcome {
  Iri status;
  std::set<Iri> rights_impacted;
  std::string rationale;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct Notification {
  Iri status;
  std::optional<Iri> authority;
  std::optional<Iri> notice;
  std::optional<std::string> exemption_basis;
  std::optional<Timestamp> sent_on;

  friend bool operator==(const Notification&, const Notification&) = default;
};

struct FriaRecord {
  Iri iri;
  FriaMetadata metadata;
  std::optional<Necessity> necessity;
  std::optional<ProcedureInputs> inputs;
  std::optional<Outcome> outcome;
  std::optional<Notification> notification;
  std::set<Iri> tools_used;
  std::set<Iri> questionnaires;
  // Information was updated after assessment; reassessment is due.
  bool stale = false;
  // Triples not described by the fields above, kept verbatim.
  rdf::Graph remainder;

  friend bool operator==(const FriaRecord&, const FriaRecord&) = default;
};

// Stage node IRIs derived from the record IRI.
Iri stage_iri(const Iri& record, std::string_view fragment);
Iri necessity_node(const Iri& record);
Iri procedure_node(const Iri& record);
Iri outcome_node(const Iri& record);
Iri notification_node(const Iri& record);
Iri purpose_node(const Iri& record);

// A fresh record with only metadata filled in.
FriaRecord new_record(const Iri& iri, const std::string& identifier, const Timestamp& created);

// Checks the record-level invariants. Throws ModelError.
void check_invariants(const FriaRecord& r, const vocab::Vocabulary& v);

// Copy with modified = when and the stale mark set. Throws ModelError if
// `when` precedes the creation day.
FriaRecord touch(const FriaRecord& r, const Timestamp& when);

}  // namespace fria::model
