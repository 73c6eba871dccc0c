#pragma once

#include <string>

namespace evagent::net {

struct SplitUrl {
    std::string origin;       // scheme://host[:port]
    std::string path_prefix;  // "" or "/some/prefix" without trailing slash
};

// Throws ConfigError if the URL has no scheme.
SplitUrl split_url(const std::string& base_url);

}  // namespace evagent::net
