#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "meyniel/digraph.hpp"

namespace meyniel {

/// Malformed digraph text. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Reads the text format: a header line "p <count>" followed by one "u v"
/// line per arc. Blank lines and lines starting with '#' are skipped.
Digraph parse_digraph(std::string_view text);
Digraph read_digraph_file(const std::string& path);

/// Canonical form: header, then arcs in lexicographic order, newline-terminated.
std::string serialize(const Digraph& d);

/// Stable 64-bit FNV-1a hash of the canonical serialization.
std::uint64_t digraph_hash(const Digraph& d);
std::string hash_hex(std::uint64_t h);

}  // namespace meyniel
