#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ehrhart/digraph.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Thrown on malformed interchange data (wrong shape, non-integers,
/// ragged rows, out-of-range indices). The CLI maps it to exit code 64.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polytope interchange: { "ambient_dim": n, "points": [[...], ...] },
/// integers only (arbitrary precision accepted as JSON strings too).
Polytope polytope_from_json(const std::string& text);
std::string polytope_to_json(const Polytope& p);

/// Digraph interchange: { "n": 14, "arcs": [[1,8], ...] }, 1-indexed.
Digraph digraph_from_json(const std::string& text);
std::string digraph_to_json(const Digraph& g);

std::string read_stream(std::istream& in);
std::string read_file(const std::string& path);

}  // namespace ehrhart
