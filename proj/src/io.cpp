#include "hypercut/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace hypercut {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  if (auto hash = body.find('#'); hash != std::string::npos) body.resize(hash);
  std::istringstream stream(body);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, int line, const std::string& what) {
  size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(token, &consumed);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer for " + what + ", got '" + token + "'");
  }
  if (consumed != token.size())
    parse_fail(line, "trailing characters after " + what + " in '" + token + "'");
  return value;
}

}  // namespace

ParsedFile parse_hypergraph(std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string line;
  int line_number = 0;

  int n = 0;
  int header_k = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<char> seen;

  while (std::getline(input, line)) {
    ++line_number;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "n" || tokens[2] != "k")
        parse_fail(line_number, "expected header 'n <count> k <uniformity|0>'");
      n = parse_int(tokens[1], line_number, "vertex count");
      header_k = parse_int(tokens[3], line_number, "uniformity");
      if (n < 1) parse_fail(line_number, "vertex count must be positive");
      if (header_k < 0) parse_fail(line_number, "uniformity must be nonnegative");
      seen.assign(n, 0);
      have_header = true;
      continue;
    }

    Edge edge;
    for (const std::string& token : tokens) {
      std::string number = token;
      int sign = +1;
      if (auto colon = token.find(':'); colon != std::string::npos) {
        number = token.substr(0, colon);
        std::string suffix = token.substr(colon + 1);
        if (suffix == "+")
          sign = +1;
        else if (suffix == "-")
          sign = -1;
        else
          parse_fail(line_number, "sign suffix must be ':+' or ':-', got '" + token + "'");
      }
      int vertex = parse_int(number, line_number, "vertex index");
      if (vertex < 1 || vertex > n)
        parse_fail(line_number, "vertex " + std::to_string(vertex) + " outside 1.." +
                                    std::to_string(n));
      if (seen[vertex - 1])
        parse_fail(line_number,
                   "vertex " + std::to_string(vertex) + " repeated within the edge");
      seen[vertex - 1] = 1;
      edge.push_back({vertex - 1, sign});
    }
    for (const Incidence& inc : edge) seen[inc.vertex] = 0;
    if (header_k > 0 && static_cast<int>(edge.size()) != header_k)
      parse_fail(line_number, "edge has " + std::to_string(edge.size()) +
                                  " vertices but the header asserts k " +
                                  std::to_string(header_k));
    edges.push_back(std::move(edge));
  }
  if (!have_header) parse_fail(line_number, "missing header line");

  ParsedFile parsed{OrientedHypergraph(n, std::move(edges)),
                    header_k > 0 ? std::optional<int>(header_k) : std::nullopt};
  return parsed;
}

std::string write_hypergraph(const OrientedHypergraph& gamma) {
  std::ostringstream out;
  out << "n " << gamma.vertex_count() << " k " << gamma.uniformity().value_or(0) << "\n";
  for (const Edge& edge : gamma.edges()) {
    bool first = true;
    for (const Incidence& inc : edge) {
      if (!first) out << ' ';
      first = false;
      out << inc.vertex + 1;
      if (inc.sign < 0) out << ":-";
    }
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream content;
  content << stream.rdbuf();
  return content.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  stream << content;
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

double round_significant(double value, int digits) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

}  // namespace hypercut
