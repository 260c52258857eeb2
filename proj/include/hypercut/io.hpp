#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

/// Text format: header line `n <count> k <uniformity|0>`, then one edge per
/// line as whitespace-separated `<vertex>[:+|:-]` tokens with 1-based vertex
/// indices; `#` starts a comment. A header uniformity of 0 means
/// "not asserted"; a positive value is validated against every edge.
struct ParsedFile {
  OrientedHypergraph graph;
  std::optional<int> asserted_k;
};

ParsedFile parse_hypergraph(std::string_view text);

std::string write_hypergraph(const OrientedHypergraph& gamma);

/// Reads a whole file, failing with ParseError when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// FNV-1a 64-bit digest as 16 lowercase hex characters.
std::string fnv1a_digest(std::string_view bytes);

/// Nearest double with 12 significant decimal digits; reports serialize
/// numeric fields through this.
double round_significant(double value, int digits = 12);

}  // namespace hypercut
