#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "konum/detector.hpp"

namespace konum {

inline constexpr std::string_view kWarningAscii = "Konum paylasiyor olabilirsiniz!";
inline constexpr std::string_view kWarningDiacritic = "Konum paylaşıyor olabilirsiniz!";

struct ServiceConfig {
  std::string warning{kWarningAscii};
  std::string cors_origin = "*";
  std::size_t max_chars = 2000;
  std::string model_label = "trained";  ///< reported by /api/health, e.g. "paper-tree"
};

struct HttpReply {
  int status = 200;
  std::string body;  ///< JSON
};

/// Request handling for the classification endpoints, independent of any
/// transport. Holds no mutable state after construction.
class ClassificationService {
 public:
  ClassificationService(Detector detector, ServiceConfig config);

  /// POST /api/classify with {"text": "..."}.
  HttpReply handle_classify(std::string_view request_body) const;
  /// GET /api/health.
  HttpReply handle_health() const;

  const ServiceConfig& config() const { return config_; }
  const Detector& detector() const { return detector_; }

 private:
  Detector detector_;
  ServiceConfig config_;
};

/// Binds a ClassificationService to HTTP (loopback by default).
class HttpServer {
 public:
  explicit HttpServer(const ClassificationService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// False if the address cannot be bound (e.g. port in use).
  bool bind(const std::string& host, int port);
  /// Binds an ephemeral port and returns it, or -1.
  int bind_any_port(const std::string& host);
  /// Serves until stop(); call after a successful bind.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace konum
