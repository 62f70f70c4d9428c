#pragma once

#include <exception>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "fria/store/operations.h"

namespace fria::service {

// HTTP status and JSON error payload for an exception raised by an
// operation: {"error": {"type", "message", ...}}.
struct ErrorInfo {
  int status;
  nlohmann::json body;
};
ErrorInfo classify(std::exception_ptr e);

// A malformed request body or parameter.
class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Value for Access-Control-Allow-Origin; CORS is off when unset.
  std::optional<std::string> cors_origin;
  int threads = 8;
};

// JSON/HTTP front end over an Engine.
class Service {
 public:
  Service(store::Engine& engine, ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the socket and returns the port. Throws std::runtime_error.
  int bind();
  // Serves until stop(); bind() first.
  void run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fria::service
