#ifndef CTD_ERROR_HPP
#define CTD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ctd {

// Domain error with a short machine-readable code ("bad-vertex", "not-type-d", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace ctd

#endif
