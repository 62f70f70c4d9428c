#pragma once

#include <string>

namespace fria::testing {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

// Catalog against the checked-in manifest of the 23 fria: terms.
CheckResult check_vocabulary_manifest();
// Ontology export -> parse -> re-export is byte-identical; Turtle and
// N-Triples forms parse to the same triples.
CheckResult check_ontology_roundtrip();
// `count` random graphs round-trip through Turtle and N-Triples.
CheckResult check_parser_roundtrip(int count = 200, unsigned seed = 20250301);
// Every Art. 27(1) letter is cited, and deleting each mandatory triple of
// the golden record yields exactly one violation on that path.
CheckResult check_shape_coverage();
// All eight competency questions on the golden record match the
// checked-in bindings and are non-empty.
CheckResult check_competency_questions();
// All event sequences up to `depth` from Draft, against a reference
// transition table.
CheckResult check_workflow_exhaustive(int depth = 8);
// Every multiset of up to 3 risk entries against a severity-max oracle.
CheckResult check_outcome_oracle();
// Golden path through the `fria` executable.
CheckResult check_cli_golden(const std::string& cli_path);
// Golden path over HTTP, plus racing writers.
CheckResult check_service_golden();

}  // namespace fria::testing
