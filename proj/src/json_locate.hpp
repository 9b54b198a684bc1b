#pragma once

// SAX front end for nlohmann::json that records the source line of every
// value, keyed by JSON pointer.

#include <json.hpp>

#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fairplan::detail {

struct located_json {
    nlohmann::json root;
    std::map<std::string, int> lines;  // JSON pointer -> 1-based line
    std::vector<std::pair<std::string, std::string>> duplicate_keys;  // (path, key)
    bool ok = false;
    std::string error;
    int error_line = 0;
};

located_json parse_located(std::string_view text);

/// Appends a JSON pointer reference token, escaping '~' and '/'.
std::string pointer_join(std::string const& parent, std::string_view token);

} // namespace fairplan::detail
