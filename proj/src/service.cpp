#include "proxigraph/service.hpp"

#include <cmath>
#include <exception>

#include "httplib.h"
#include "json.hpp"
#include "proxigraph/compute.hpp"
#include "proxigraph/io.hpp"

namespace proxigraph {
namespace {

using json = nlohmann::ordered_json;

HttpReply error_reply(int status, std::string_view name, std::string_view detail) {
  json body;
  body["error"] = name;
  body["detail"] = detail;
  return {status, body.dump()};
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownAlgorithm: return 404;
    case ErrorKind::TooManyPoints: return 413;
    default: return 400;
  }
}

PointSet request_points(const json& request) {
  if (!request.contains("points") || !request["points"].is_array()) {
    throw Error(ErrorKind::ParseError, "'points' must be an array of [x, y] pairs");
  }
  const auto& list = request["points"];
  if (list.size() > kMaxRequestPoints) {
    throw Error(ErrorKind::TooManyPoints, "at most " + std::to_string(kMaxRequestPoints) +
                                              " points per request, got " +
                                              std::to_string(list.size()));
  }
  std::vector<Point2> points;
  points.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& p = list[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Error(ErrorKind::ParseError, "points[" + std::to_string(i) + "] must be [x, y]");
    }
    const double x = p[0].get<double>(), y = p[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorKind::ParseError, "points[" + std::to_string(i) + "] is not finite");
    }
    points.push_back({x, y});
  }
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points in request");
  return PointSet(std::move(points));
}

Params request_params(const json& request) {
  Params params;
  if (!request.contains("params") || request["params"].is_null()) return params;
  if (!request["params"].is_object()) throw Error(ErrorKind::ParseError, "'params' must be an object");
  for (const auto& [name, value] : request["params"].items()) {
    if (!value.is_number()) {
      throw Error(ErrorKind::ParseError, "parameter '" + name + "' must be a number");
    }
    params[name] = value.get<double>();
  }
  return params;
}

}  // namespace

HttpReply handle_compute(std::string_view body, std::string_view render) {
  try {
    if (!render.empty() && render != "svg" && render != "ipe") {
      throw Error(ErrorKind::InvalidParameter, "render must be 'svg' or 'ipe'");
    }
    json request;
    try {
      request = json::parse(body);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    if (!request.is_object()) throw Error(ErrorKind::ParseError, "request must be a JSON object");
    if (!request.contains("algorithm") || !request["algorithm"].is_string()) {
      throw Error(ErrorKind::ParseError, "'algorithm' must be a string");
    }
    const std::string algorithm = request["algorithm"].get<std::string>();
    if (!find_algorithm(algorithm)) {
      throw Error(ErrorKind::UnknownAlgorithm, "unknown algorithm '" + algorithm + "'");
    }
    const ComputeResult result = compute(request_points(request), algorithm, request_params(request));
    if (render.empty()) return {200, result.json()};

    json payload = json::parse(result.json());
    const Document doc = result.document();
    payload[std::string(render)] = render == "svg" ? write_svg(doc) : write_ipe(doc);
    return {200, payload.dump()};
  } catch (const Error& e) {
    return error_reply(status_for(e.kind()), e.name(), e.what());
  } catch (const std::exception& e) {
    return error_reply(500, "InternalError", e.what());
  }
}

HttpReply handle_catalog() { return {200, catalog_json()}; }

HttpReply handle_health() { return {200, R"({"status":"ok"})"}; }

struct Service::Impl {
  ServiceOptions options;
  httplib::Server server;
  int port = -1;
};

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto& server = impl_->server;
  const std::string origin = impl_->options.cors_origin;

  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  server.Post("/api/compute", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_compute(req.body, req.has_param("render") ? req.get_param_value("render") : ""));
  });
  server.Get("/api/algorithms",
             [send](const httplib::Request&, httplib::Response& res) { send(res, handle_catalog()); });
  server.Get("/healthz",
             [send](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.set_payload_max_length(64 * 1024 * 1024);
}

Service::~Service() { stop(); }

int Service::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(o.bind);
  } else {
    impl_->port = impl_->server.bind_to_port(o.bind, o.port) ? o.port : -1;
  }
  return impl_->port;
}

void Service::run() { impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace proxigraph
