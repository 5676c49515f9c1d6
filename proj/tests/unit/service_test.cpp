#include <future>
#include <thread>

#include <gtest/gtest.h>

#include <httplib.h>
#include <json.hpp>

#include "konum/service.hpp"

namespace konum {
namespace {

using nlohmann::json;

const ClassificationService& service() {
  static const ClassificationService s(
      Detector(paper_reference_tree(), Gazetteers::load_directory(KONUM_GAZETTEER_DIR)), ServiceConfig{});
  return s;
}

json classify(const json& body, int expected_status) {
  const auto reply = service().handle_classify(body.dump());
  EXPECT_EQ(reply.status, expected_status) << reply.body;
  return json::parse(reply.body);
}

TEST(Classify, PositiveCarriesWarning) {
  const auto j = classify({{"text", "Eve gidiyorum"}}, 200);
  EXPECT_EQ(j["label"], 1);
  EXPECT_EQ(j["warning"], "Konum paylasiyor olabilirsiniz!");
  EXPECT_EQ(j["features"], json({{"feature1", false}, {"feature2", false}, {"feature3", true},
                                 {"feature4", false}, {"feature5", false}, {"feature6", true}}));
  EXPECT_EQ(j["path"], json::parse(R"([["feature4",0],["feature6",1]])"));
  EXPECT_EQ(j["matched_terms"], json::parse(R"([["feature3","ev"],["feature6","gidiyorum"]])"));
}

TEST(Classify, NegativeHasEmptyWarning) {
  const auto j = classify({{"text", "Bugün hava güzel"}}, 200);
  EXPECT_EQ(j["label"], 0);
  EXPECT_EQ(j["warning"], "");
  EXPECT_TRUE(j["matched_terms"].empty());
}

TEST(Classify, DiacriticWarningVariant) {
  ServiceConfig cfg;
  cfg.warning = std::string(kWarningDiacritic);
  const ClassificationService s(service().detector(), cfg);
  const auto j = json::parse(s.handle_classify(R"({"text":"Ankara'da Kentpark'tayım"})").body);
  EXPECT_EQ(j["label"], 1);
  EXPECT_EQ(j["warning"], "Konum paylaşıyor olabilirsiniz!");
}

TEST(Classify, BadRequests) {
  for (const char* body : {"", "not json", "[]", R"({"txt":"a"})", R"({"text":5})", R"({"text":""})",
                           R"({"text":"   \n"})"}) {
    const auto reply = service().handle_classify(body);
    EXPECT_EQ(reply.status, 400) << body;
    EXPECT_TRUE(json::parse(reply.body).contains("error")) << body;
  }
}

TEST(Classify, LengthLimitCountsCharacters) {
  std::string at_limit;
  for (int i = 0; i < 2000; ++i) at_limit += "ş";  // 2 bytes each
  classify({{"text", at_limit}}, 200);
  classify({{"text", at_limit + "a"}}, 400);
}

TEST(Health, ReportsModelAndLists) {
  const auto reply = service().handle_health();
  EXPECT_EQ(reply.status, 200);
  const auto j = json::parse(reply.body);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["model"]["leaves"], 6);
  EXPECT_EQ(j["model"]["training_size"], 500);
  EXPECT_EQ(j["gazetteers"]["cities"], 81);
  EXPECT_GT(j["gazetteers"]["special_words"].get<int>(), 0);
}

class LiveServer : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<HttpServer>(service());
    port_ = server_->bind_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->listen(); });
    server_->wait_until_ready();
  }
  void TearDown() override {
    server_->stop();
    if (thread_.joinable()) thread_.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

  std::unique_ptr<HttpServer> server_;
  int port_ = -1;
  std::thread thread_;
};

TEST_F(LiveServer, ClassifyOverHttp) {
  auto c = client();
  const auto res = c.Post("/api/classify", R"({"text":"Armada'ya yemeğe geldik."})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_EQ(json::parse(res->body)["label"], 1);

  const auto bad = c.Post("/api/classify", "{", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
}

TEST_F(LiveServer, HealthAndPreflight) {
  auto c = client();
  const auto health = c.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(json::parse(health->body)["gazetteers"]["cities"], 81);

  const auto pre = c.Options("/api/classify");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);
  EXPECT_FALSE(pre->get_header_value("Access-Control-Allow-Methods").empty());
}

TEST_F(LiveServer, ConcurrentIdenticalRequestsAgree) {
  const std::string body = R"({"text":"Şu anda Avlu restoranına gidiyorum"})";
  std::vector<std::future<std::string>> futures;
  for (int i = 0; i < 16; ++i) {
    futures.push_back(std::async(std::launch::async, [&] {
      auto c = client();
      const auto res = c.Post("/api/classify", body, "application/json");
      if (!res) return "failed: " + httplib::to_string(res.error());
      return res->status == 200 ? res->body : "failed: status " + std::to_string(res->status);
    }));
  }
  const auto first = futures.front().get();
  EXPECT_EQ(first.rfind("failed", 0), std::string::npos) << first;
  for (std::size_t i = 1; i < futures.size(); ++i) EXPECT_EQ(futures[i].get(), first);
}

TEST(HttpServerBind, PortInUseFails) {
  HttpServer a(service());
  const int port = a.bind_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  HttpServer b(service());
  EXPECT_FALSE(b.bind("127.0.0.1", port));
}

}  // namespace
}  // namespace konum
