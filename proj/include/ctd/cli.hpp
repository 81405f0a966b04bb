#ifndef CTD_CLI_HPP
#define CTD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ctd {

// Exit status: 0 ok, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctd

#endif
