#include "support.h"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fria/vocab/terms.h"

#ifndef FRIA_FIXTURE_DIR
#error "FRIA_FIXTURE_DIR must be defined"
#endif

namespace fria::testing {

namespace fs = std::filesystem;

fs::path fixture_path(std::string_view name) { return fs::path(FRIA_FIXTURE_DIR) / name; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json golden_answers() { return nlohmann::json::parse(read_file(fixture_path("golden_answers.json"))); }

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto p = fs::temp_directory_path() /
             ("fria-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" + std::to_string(rd()));
    if (fs::create_directory(p)) {
      path_ = p;
      return;
    }
  }
  throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

store::EngineConfig golden_config(const fs::path& store) {
  return store::EngineConfig{store, rdf::Iri(store::kDefaultBase), {}, {}, rdf::Timestamp::parse(kGoldenDate)};
}

std::string golden_via_engine(store::Engine& engine) {
  engine.create(kGoldenId);
  engine.necessity(kGoldenId, {{"public-body", true}}, terms::fria::FRIARequired, "");
  std::vector<std::pair<std::string, nlohmann::json>> answers;
  const auto golden = golden_answers();
  for (const auto& [k, v] : golden.items()) answers.emplace_back(k, v);
  engine.answer(kGoldenId, answers);
  engine.compile(kGoldenId);
  engine.outcome(kGoldenId);
  notification::NotificationDecision d;
  d.authority = rdf::Iri(kAuthority);
  engine.notify(kGoldenId, d);
  engine.mark_sent(kGoldenId);
  return engine.export_record(kGoldenId, "ttl");
}

std::vector<std::vector<std::string>> golden_cli_steps(const fs::path& store, const fs::path& answers) {
  const std::vector<std::string> g{"--store", store.string(), "--date", kGoldenDate};
  auto step = [&](std::vector<std::string> rest) {
    std::vector<std::string> out = g;
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  };
  return {
      step({"new", kGoldenId}),
      step({"necessity", kGoldenId, "--status", "required", "--flag", "public-body=true"}),
      step({"answer", kGoldenId, "--file", answers.string()}),
      step({"compile", kGoldenId}),
      step({"validate", kGoldenId}),
      step({"outcome", kGoldenId}),
      step({"notify", kGoldenId, "--authority", kAuthority}),
      step({"notify", kGoldenId, "--mark-sent"}),
      step({"export", kGoldenId, "--format", "ttl"}),
  };
}

ProcessResult run_process(const std::vector<std::string>& argv) {
  int fds[2];
  if (::pipe(fds) != 0) throw std::runtime_error("pipe failed");
  pid_t pid = ::fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    ::dup2(fds[1], STDOUT_FILENO);
    ::close(fds[0]);
    ::close(fds[1]);
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    ::execv(args[0], args.data());
    ::_exit(127);
  }
  ::close(fds[1]);
  ProcessResult r;
  char buf[4096];
  ssize_t n;
  while ((n = ::read(fds[0], buf, sizeof buf)) > 0) r.out.append(buf, static_cast<std::size_t>(n));
  ::close(fds[0]);
  int status = 0;
  ::waitpid(pid, &status, 0);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace fria::testing
