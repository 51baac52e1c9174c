#include "switchkit/io.hpp"

#include <cctype>
#include <sstream>

#include "switchkit/errors.hpp"

namespace switchkit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw MalformedGraph6(std::string("invalid graph6 character '") + c + "'");
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw MalformedGraph6("empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw MalformedGraph6("truncated graph6 order");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw MalformedGraph6("truncated graph6 order");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n > kMaxOrder) throw TooLarge("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));

  const long long bits = n * (n - 1) / 2;
  const long long expected = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != expected) {
    throw MalformedGraph6("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                          std::to_string(expected));
  }

  Graph::Builder b(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text[i]);
  return b.build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw MalformedInput("edge list must start with 'n m'");
  if (n > kMaxOrder) throw TooLarge("edge list order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  Graph::Builder b(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw MalformedInput("edge list ended after " + std::to_string(i) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw MalformedInput("trailing data after edge list");
  return b.build();
}

std::string to_edge_list(const Graph& g) {
  const auto es = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(es.size()) + "\n";
  for (auto [u, v] : es) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace switchkit
