#pragma once

#include <stdexcept>
#include <string>

namespace pact {

// Model/formula text could not be parsed. `line` is 1-based, 0 if unknown.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

// A configured resource cap was exceeded. `cap_name` identifies which one.
struct resource_cap_error : std::runtime_error {
    std::string cap_name;
    resource_cap_error(std::string cap, const std::string& msg)
        : std::runtime_error(msg), cap_name(std::move(cap)) {}
};

// Formula falls outside the fragments the checker supports.
struct fragment_error : std::runtime_error {
    std::string offending;
    fragment_error(std::string sub, const std::string& msg)
        : std::runtime_error(msg), offending(std::move(sub)) {}
};

} // namespace pact
