#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fria/model/record.h"
#include "fria/questionnaire/session.h"
#include "fria/workflow/state.h"

namespace fria::store {

using rdf::Iri;

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RecordNotFound : public StoreError {
 public:
  using StoreError::StoreError;
};

class RecordExists : public StoreError {
 public:
  using StoreError::StoreError;
};

// Ids are letters, digits, '-', '_' and '.', not starting with '.' or '-'.
class InvalidRecordId : public StoreError {
 public:
  using StoreError::StoreError;
};

class VersionConflict : public StoreError {
 public:
  VersionConflict(int expected, int actual);
  int expected() const noexcept { return expected_; }
  int actual() const noexcept { return actual_; }

 private:
  int expected_;
  int actual_;
};

// One line of log.txt: "<when> <from> <event> <to>".
struct LogEntry {
  std::string when;
  std::string from;  // "-" for the creating entry
  std::string event;
  std::string to;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

std::string to_line(const LogEntry& e);
LogEntry parse_log_line(std::string_view line);

struct StoredRecord {
  std::string id;
  model::FriaRecord record;
  workflow::WorkflowState state;
  std::optional<questionnaire::Session> session;
  // Number of committed mutations (log lines).
  int version = 0;
  std::vector<LogEntry> log;
};

// A mutation computed from the current stored state.
struct Change {
  model::FriaRecord record;
  workflow::WorkflowState state;
  std::optional<questionnaire::Session> session;
  std::string event;  // single token
};

// Directory-per-record persistence:
//   <root>/<id>/record.ttl    record graph
//   <root>/<id>/session.json  questionnaire session
//   <root>/<id>/log.txt       one line per committed mutation
// Writers take an exclusive flock on <root>/<id>/.lock, readers a shared one.
// A mutation stages record.ttl.new and session.json.new, then commits by
// atomically writing commit.pending; the staged files are renamed into
// place and the log line appended. An interrupted commit is rolled forward
// on the next access, so a crash never leaves content and log out of step.
class RecordStore {
 public:
  RecordStore(std::filesystem::path root, const vocab::Vocabulary& v, const questionnaire::Questionnaire& q);

  const std::filesystem::path& root() const noexcept { return root_; }

  static bool valid_id(std::string_view id);
  bool exists(const std::string& id) const;
  std::vector<std::string> list() const;

  // Throws RecordExists.
  StoredRecord create(const std::string& id, const model::FriaRecord& record, const questionnaire::Session& session,
                      const std::string& when, const std::string& event);
  // Throws RecordNotFound, StoreError for unreadable directories.
  StoredRecord load(const std::string& id) const;
  // Applies `change` under the record's write lock. With `expected_version`
  // set, throws VersionConflict unless it equals the stored version.
  StoredRecord update(const std::string& id, std::optional<int> expected_version, const std::string& when,
                      const std::function<Change(const StoredRecord&)>& change);

 private:
  std::filesystem::path dir(const std::string& id) const;
  StoredRecord read_unlocked(const std::string& id) const;
  void write_unlocked(const std::string& id, const model::FriaRecord& record,
                      const std::optional<questionnaire::Session>& session, const LogEntry& entry,
                      int lines) const;

  std::filesystem::path root_;
  const vocab::Vocabulary& v_;
  const questionnaire::Questionnaire& q_;
};

}  // namespace fria::store
