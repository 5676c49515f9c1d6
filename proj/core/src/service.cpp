#include "konum/service.hpp"

#include <httplib.h>
#include <json.hpp>

namespace konum {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

HttpReply client_error(const std::string& message) {
  return {400, json{{"error", message}}.dump()};
}

}  // namespace

ClassificationService::ClassificationService(Detector detector, ServiceConfig config)
    : detector_(std::move(detector)), config_(std::move(config)) {}

HttpReply ClassificationService::handle_classify(std::string_view request_body) const {
  json request;
  try {
    request = json::parse(request_body);
  } catch (const json::exception&) {
    return client_error("request body must be a JSON object");
  }
  if (!request.is_object()) return client_error("request body must be a JSON object");
  const auto it = request.find("text");
  if (it == request.end() || !it->is_string()) return client_error("field \"text\" (string) is required");

  const auto& text = it->get_ref<const std::string&>();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return client_error("field \"text\" is empty");
  if (codepoint_length(text) > config_.max_chars) {
    return client_error("field \"text\" exceeds " + std::to_string(config_.max_chars) + " characters");
  }

  const Verdict v = detector_.inspect(text);
  ordered_json out;
  out["label"] = to_int(v.label);
  out["warning"] = v.label == Label::Positive ? config_.warning : std::string();
  ordered_json features = ordered_json::object();
  for (int f = 1; f <= kFeatureCount; ++f) features[feature_name(f)] = v.features[f];
  out["features"] = std::move(features);
  ordered_json path = ordered_json::array();
  for (const auto& step : v.path) path.push_back({feature_name(step.feature), step.branch ? 1 : 0});
  out["path"] = std::move(path);
  ordered_json matched = ordered_json::array();
  for (const auto& m : v.matches) matched.push_back({feature_name(m.feature), m.term});
  out["matched_terms"] = std::move(matched);
  return {200, out.dump()};
}

HttpReply ClassificationService::handle_health() const {
  const auto& model = detector_.model();
  const auto& g = detector_.gazetteers();
  ordered_json out;
  out["status"] = "ok";
  out["model"] = {{"source", config_.model_label},
                  {"leaves", model.leaf_count()},
                  {"depth", model.depth()},
                  {"training_size", model.total_reached()}};
  out["gazetteers"] = {{"cities", g.cities.size()},
                       {"special_words", g.special_words.size()},
                       {"venues", g.venues.size()},
                       {"verbs", g.verbs.size()}};
  out["warning"] = config_.warning;
  return {200, out.dump()};
}

struct HttpServer::Impl {
  const ClassificationService& service;
  httplib::Server server;

  explicit Impl(const ClassificationService& s) : service(s) {
    // httplib's default also sets SO_REUSEPORT, which would let a second
    // server share an occupied port instead of failing to bind.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    const std::string origin = service.config().cors_origin;
    server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Post("/api/classify", [this](const httplib::Request& req, httplib::Response& res) {
      const auto reply = service.handle_classify(req.body);
      res.status = reply.status;
      res.set_content(reply.body, "application/json; charset=utf-8");
    });
    server.Get("/api/health", [this](const httplib::Request&, httplib::Response& res) {
      const auto reply = service.handle_health();
      res.status = reply.status;
      res.set_content(reply.body, "application/json; charset=utf-8");
    });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }
};

HttpServer::HttpServer(const ClassificationService& service) : impl_(std::make_unique<Impl>(service)) {}
HttpServer::~HttpServer() = default;

bool HttpServer::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }
int HttpServer::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }
bool HttpServer::listen() { return impl_->server.listen_after_bind(); }
void HttpServer::stop() { impl_->server.stop(); }
void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace konum
