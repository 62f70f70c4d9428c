#include "fria/store/record_store.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fria/model/mapping.h"
#include "fria/rdf/io.h"
#include "fria/vocab/terms.h"

namespace fria::store {

namespace fs = std::filesystem;

namespace {

namespace t = terms;

class FileLock {
 public:
  FileLock(const fs::path& path, bool exclusive) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw StoreError("cannot open lock file " + path.string() + ": " + std::strerror(errno));
    while (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      if (errno == EINTR) continue;
      int err = errno;
      ::close(fd_);
      throw StoreError("cannot lock " + path.string() + ": " + std::strerror(err));
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StoreError("cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void sync_fd(int fd) {
  if (::fsync(fd) != 0 && errno != EINVAL) throw StoreError(std::string("fsync failed: ") + std::strerror(errno));
}

void write_all(int fd, const std::string& content, const fs::path& p) {
  std::size_t off = 0;
  while (off < content.size()) {
    auto n = ::write(fd, content.data() + off, content.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      int err = errno;
      ::close(fd);
      throw StoreError("cannot write " + p.string() + ": " + std::strerror(err));
    }
    off += static_cast<std::size_t>(n);
  }
}

void write_atomic(const fs::path& p, const std::string& content) {
  fs::path tmp = p;
  tmp += ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) throw StoreError("cannot write " + tmp.string() + ": " + std::strerror(errno));
  write_all(fd, content, tmp);
  sync_fd(fd);
  ::close(fd);
  fs::rename(tmp, p);
}

// Written and synced, not yet in place.
void write_staged(const fs::path& p, const std::string& content) {
  int fd = ::open(p.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) throw StoreError("cannot write " + p.string() + ": " + std::strerror(errno));
  write_all(fd, content, p);
  sync_fd(fd);
  ::close(fd);
}

void sync_dir(const fs::path& d) {
  int fd = ::open(d.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

void append_line(const fs::path& p, const std::string& line) {
  int fd = ::open(p.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw StoreError("cannot append to " + p.string() + ": " + std::strerror(errno));
  write_all(fd, line + "\n", p);
  sync_fd(fd);
  ::close(fd);
}

// Complete log lines; a torn trailing line is cut off.
int complete_log_lines(const fs::path& log) {
  if (!fs::exists(log)) return 0;
  std::string text = read_file(log);
  auto end = text.rfind('\n');
  std::size_t keep = end == std::string::npos ? 0 : end + 1;
  if (keep != text.size()) fs::resize_file(log, keep);
  return static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(keep), '\n'));
}

// A mutation is staged as record.ttl.new / session.json.new, then
// committed by writing commit.pending (atomically). Rolling forward puts
// the staged files in place, appends the log line unless the log already
// holds `lines` lines, and drops the marker. Every step is idempotent, so
// a crash at any point leaves either the old state (no marker) or one
// that the next access completes.
constexpr const char* kPending = "commit.pending";

void roll_forward(const fs::path& d) {
  const fs::path marker = d / kPending;
  if (!fs::exists(marker)) {
    std::error_code ec;
    for (const char* stray : {"record.ttl.new", "session.json.new", "commit.pending.tmp"}) fs::remove(d / stray, ec);
    return;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(marker));
  } catch (const nlohmann::json::exception& e) {
    throw StoreError("unreadable commit marker " + marker.string() + ": " + e.what());
  }
  if (fs::exists(d / "record.ttl.new")) fs::rename(d / "record.ttl.new", d / "record.ttl");
  if (j.at("session").get<bool>()) {
    if (fs::exists(d / "session.json.new")) fs::rename(d / "session.json.new", d / "session.json");
  } else {
    std::error_code ec;
    fs::remove(d / "session.json", ec);
  }
  sync_dir(d);
  if (complete_log_lines(d / "log.txt") < j.at("lines").get<int>())
    append_line(d / "log.txt", j.at("line").get<std::string>());
  fs::remove(marker);
  sync_dir(d);
}

// The record node: typed a FRIA and identified by `id`.
Iri find_record_iri(const rdf::Graph& g, const std::string& id) {
  std::optional<Iri> found;
  for (const auto& s : g.subjects(t::rdf::type, t::eu_aiact::FRIA)) {
    const auto* iri = std::get_if<Iri>(&s);
    if (!iri || !g.contains(rdf::Triple(*iri, t::dct::identifier, rdf::Literal(id)))) continue;
    if (found) throw StoreError("record " + id + ": more than one FRIA node carries this identifier");
    found = *iri;
  }
  if (!found) throw StoreError("record " + id + ": no FRIA node with identifier '" + id + "'");
  return *found;
}

}  // namespace

VersionConflict::VersionConflict(int expected, int actual)
    : StoreError("version conflict: expected " + std::to_string(expected) + ", record is at " +
                 std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

std::string to_line(const LogEntry& e) { return e.when + " " + e.from + " " + e.event + " " + e.to; }

LogEntry parse_log_line(std::string_view line) {
  std::vector<std::string> parts;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) parts.push_back(tok);
  if (parts.size() != 4) throw StoreError("malformed log line: '" + std::string(line) + "'");
  return LogEntry{parts[0], parts[1], parts[2], parts[3]};
}

RecordStore::RecordStore(fs::path root, const vocab::Vocabulary& v, const questionnaire::Questionnaire& q)
    : root_(std::move(root)), v_(v), q_(q) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (!fs::is_directory(root_)) throw StoreError("store path " + root_.string() + " is not a directory");
  if (::access(root_.c_str(), W_OK) != 0) throw StoreError("store path " + root_.string() + " is not writable");
}

bool RecordStore::valid_id(std::string_view id) {
  if (id.empty() || id.size() > 128 || id.front() == '.' || id.front() == '-') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_' ||
           c == '.';
  });
}

fs::path RecordStore::dir(const std::string& id) const {
  if (!valid_id(id)) throw RecordNotFound("invalid record id '" + id + "'");
  return root_ / id;
}

bool RecordStore::exists(const std::string& id) const {
  return valid_id(id) && fs::exists(root_ / id / "log.txt");
}

std::vector<std::string> RecordStore::list() const {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(root_)) {
    auto name = e.path().filename().string();
    if (e.is_directory() && exists(name)) out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StoredRecord RecordStore::create(const std::string& id, const model::FriaRecord& record,
                                 const questionnaire::Session& session, const std::string& when,
                                 const std::string& event) {
  if (!valid_id(id))
    throw InvalidRecordId("invalid record id '" + id + "' (letters, digits, '-', '_', '.'; not starting with '.' or '-')");
  fs::path d = root_ / id;
  std::error_code ec;
  if (!fs::create_directory(d, ec)) {
    if (ec) throw StoreError("cannot create " + d.string() + ": " + ec.message());
    throw RecordExists("record " + id + " already exists");
  }
  FileLock lock(d / ".lock", true);
  workflow::WorkflowState draft{workflow::states::Draft{}};
  LogEntry entry{when, "-", event, workflow::to_text(draft, v_)};
  write_unlocked(id, record, session, entry, 1);
  return read_unlocked(id);
}

StoredRecord RecordStore::load(const std::string& id) const {
  fs::path d = dir(id);
  if (!fs::is_directory(d)) throw RecordNotFound("no record " + id);
  {
    FileLock lock(d / ".lock", false);
    if (!fs::exists(d / kPending)) return read_unlocked(id);
  }
  // an interrupted commit; finish it first
  FileLock lock(d / ".lock", true);
  roll_forward(d);
  return read_unlocked(id);
}

StoredRecord RecordStore::update(const std::string& id, std::optional<int> expected_version, const std::string& when,
                                 const std::function<Change(const StoredRecord&)>& change) {
  fs::path d = dir(id);
  if (!fs::is_directory(d)) throw RecordNotFound("no record " + id);
  FileLock lock(d / ".lock", true);
  roll_forward(d);
  StoredRecord cur = read_unlocked(id);
  if (expected_version && *expected_version != cur.version) throw VersionConflict(*expected_version, cur.version);
  Change c = change(cur);
  LogEntry entry{when, workflow::to_text(cur.state, v_), c.event, workflow::to_text(c.state, v_)};
  write_unlocked(id, c.record, c.session, entry, cur.version + 1);
  return read_unlocked(id);
}

StoredRecord RecordStore::read_unlocked(const std::string& id) const {
  fs::path d = dir(id);
  if (!fs::exists(d / "log.txt")) throw RecordNotFound("no record " + id);
  std::vector<LogEntry> entries;
  std::istringstream log(read_file(d / "log.txt"));
  std::string line;
  while (std::getline(log, line))
    if (!line.empty()) entries.push_back(parse_log_line(line));
  if (entries.empty()) throw StoreError("record " + id + ": empty log");
  workflow::WorkflowState state;
  try {
    state = workflow::state_from_text(entries.back().to, v_);
  } catch (const std::invalid_argument& e) {
    throw StoreError("record " + id + ": bad state in log: " + e.what());
  }
  rdf::Graph g;
  try {
    g = rdf::parse_turtle(read_file(d / "record.ttl"));
  } catch (const rdf::ParseError& e) {
    throw StoreError("record " + id + ": record.ttl: " + e.what());
  }
  std::optional<questionnaire::Session> session;
  if (fs::exists(d / "session.json")) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(d / "session.json"));
    } catch (const nlohmann::json::parse_error& e) {
      throw StoreError("record " + id + ": session.json: " + e.what());
    }
    session = questionnaire::session_from_json(j, q_, v_);
  }
  int version = static_cast<int>(entries.size());
  return StoredRecord{id, model::from_graph(g, find_record_iri(g, id), v_), std::move(state), std::move(session),
                      version, std::move(entries)};
}

void RecordStore::write_unlocked(const std::string& id, const model::FriaRecord& record,
                                 const std::optional<questionnaire::Session>& session, const LogEntry& entry,
                                 int lines) const {
  fs::path d = dir(id);
  write_staged(d / "record.ttl.new", rdf::serialize_turtle(model::to_graph(record, v_)));
  if (session) write_staged(d / "session.json.new", questionnaire::to_json(*session).dump(2) + "\n");
  nlohmann::json marker{{"line", to_line(entry)}, {"lines", lines}, {"session", session.has_value()}};
  write_atomic(d / kPending, marker.dump() + "\n");
  roll_forward(d);
}

}  // namespace fria::store
