#ifndef PLUMBLINK_PARSE_HPP
#define PLUMBLINK_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "plumblink/graph.hpp"

namespace plumblink {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason),
          line_(line),
          reason_(std::move(reason)) {}

    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// Parses the line-oriented graph format:
///
///   graph <name>
///   vertex <id> e=<int> g=<uint>
///   edge <id> <id>
///   arrow <id> m=<int> [family=f|g]
///
/// '#' starts a comment; blank lines are ignored; the graph line comes
/// first and occurs exactly once. Tokens match [A-Za-z0-9_]+. The result
/// is fully validated (connected, no loops, at least one vertex).
PlumbingMultilink parse_multilink(std::string_view text);

/// Canonical form: graph line, vertices, edges, arrows, declaration
/// order, one '\n' after each line. parse_multilink is a left inverse.
std::string serialize(const PlumbingMultilink& g);

}  // namespace plumblink

#endif
