#include "meyniel/digraph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace meyniel {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int to_int(const Token& tok, int line) {
  int value = 0;
  auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || end != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Digraph parse_digraph(std::string_view text) {
  Digraph d;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tokens = split(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!have_header) {
      if (tokens.front().text != "p") {
        throw ParseError(line_no, tokens.front().column, "expected header 'p <count>'");
      }
      if (tokens.size() != 2) throw ParseError(line_no, tokens.front().column, "header must be 'p <count>'");
      int order = to_int(tokens[1], line_no);
      if (order < 1 || order > kMaxOrder) {
        throw ParseError(line_no, tokens[1].column,
                         "vertex count must lie in [1, " + std::to_string(kMaxOrder) + "]");
      }
      d = Digraph(order);
      have_header = true;
      continue;
    }

    if (tokens.size() != 2) throw ParseError(line_no, tokens.front().column, "arc line must be 'u v'");
    int u = to_int(tokens[0], line_no);
    int v = to_int(tokens[1], line_no);
    if (u < 0 || u >= d.order()) throw ParseError(line_no, tokens[0].column, "vertex out of range");
    if (v < 0 || v >= d.order()) throw ParseError(line_no, tokens[1].column, "vertex out of range");
    if (u == v) throw ParseError(line_no, tokens[0].column, "loops are not allowed");
    if (d.has_arc(u, v)) throw ParseError(line_no, tokens[0].column, "duplicate arc");
    d.add_arc(u, v);
  }
  if (!have_header) throw ParseError(1, 1, "missing header 'p <count>'");
  return d;
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_digraph(buffer.str());
}

std::string serialize(const Digraph& d) {
  std::string out = "p " + std::to_string(d.order()) + "\n";
  for (auto [u, v] : d.arcs()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::uint64_t digraph_hash(const Digraph& d) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(d)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace meyniel
