#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fria/store/operations.h"

namespace fria::testing {

inline constexpr const char* kGoldenId = "golden";
inline constexpr const char* kGoldenDate = "2025-03-01";
inline constexpr const char* kAuthority = "https://example.com/authorities/market-surveillance";

std::filesystem::path fixture_path(std::string_view name);
std::string read_file(const std::filesystem::path& p);
nlohmann::json golden_answers();

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

store::EngineConfig golden_config(const std::filesystem::path& store);

// Drives the golden path through the engine and returns the Turtle export.
std::string golden_via_engine(store::Engine& engine);

// The golden path as `fria` argument lists (global options included).
std::vector<std::vector<std::string>> golden_cli_steps(const std::filesystem::path& store,
                                                       const std::filesystem::path& answers);

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};
// Runs argv[0] with the remaining arguments, capturing stdout.
ProcessResult run_process(const std::vector<std::string>& argv);

}  // namespace fria::testing
