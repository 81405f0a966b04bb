#include "ctd/server.hpp"

#include "httplib.h"

#include "ctd/service.hpp"

namespace ctd {

struct HttpService::Impl {
  httplib::Server server;
};

HttpService::HttpService() : impl_(std::make_unique<Impl>()) {
  auto& s = impl_->server;
  s.Post(R"(/api/([a-z_]+))", [](const httplib::Request& req, httplib::Response& res) {
    nlohmann::json body;
    nlohmann::json reply;
    try {
      body = req.body.empty() ? nlohmann::json::object() : nlohmann::json::parse(req.body);
      if (!body.is_object()) throw Error("bad-request", "request must be a JSON object");
      body["op"] = req.matches[1].str();
      reply = service::handle_request(body);
    } catch (const nlohmann::json::parse_error& e) {
      reply = service::failure("bad-request", std::string("malformed JSON: ") + e.what());
    } catch (const Error& e) {
      reply = service::failure(e.code(), e.what());
    }
    res.status = service::http_status(reply);
    res.set_content(reply.dump(), "application/json");
  });
  s.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(nlohmann::json{{"v", service::kSchemaVersion}, {"ok", true}}.dump(), "application/json");
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpService::listen() { impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace ctd
