#ifndef CTD_SERVER_HPP
#define CTD_SERVER_HPP

#include <memory>
#include <string>

namespace ctd {

// JSON-over-HTTP front end: POST /api/<op> with the request fields as the body.
class HttpService {
 public:
  HttpService();
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  void listen();  // blocks until stop()
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ctd

#endif
