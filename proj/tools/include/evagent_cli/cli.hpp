#pragma once

#include <iosfwd>

namespace evagent::cli {

// Exit codes: 0 ok, 1 usage or config error, 2 runtime failure.
int cli_main(int argc, char** argv);
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace evagent::cli
