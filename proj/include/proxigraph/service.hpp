#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace proxigraph {

struct HttpReply {
  int status = 200;
  std::string body;
};

/// POST /api/compute. `render` is the value of the `render` query parameter
/// ("", "svg" or "ipe"); a rendering is added to the payload under that name.
HttpReply handle_compute(std::string_view body, std::string_view render);
/// GET /api/algorithms.
HttpReply handle_catalog();
/// GET /healthz.
HttpReply handle_health();

struct ServiceOptions {
  std::string bind = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string cors_origin = "*";
};

/// Stateless HTTP front end over compute(). Each request is handled
/// independently; no state is shared between requests.
class Service {
 public:
  explicit Service(ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the socket; returns the bound port, or -1 on failure.
  int bind();
  /// Serves until stop() is called. Requires a successful bind().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace proxigraph
