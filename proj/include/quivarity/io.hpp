#pragma once

#include <stdexcept>
#include <string>

#include "quivarity/quiver.hpp"

namespace quivarity {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the quiver file format: a JSON document
///   { "vertices": [{"id": "a", "dim": 1}, ...],
///     "arrows":   [{"from": "a", "to": "b", "count": 2}, ...] }
/// with count defaulting to 1 and expanding to repeated arrows. Throws
/// ParseError with a line/column diagnostic on syntax errors and a
/// descriptive message on validation errors.
QuiverSetting parse_quiver_file(const std::string& text);

/// Reads and parses a file; throws ParseError when unreadable.
QuiverSetting load_quiver_file(const std::string& path);

/// Canonical serialization: vertices sorted by id, arrows grouped into
/// counts sorted by (from, to). parse(serialize(s)) == s.
std::string serialize_quiver_file(const QuiverSetting& s);

/// Graphviz export, byte-stable for a fixed input: sorted vertices labeled
/// "id/dim", parallel arrows emitted individually.
std::string to_dot(const QuiverSetting& s);

}  // namespace quivarity
