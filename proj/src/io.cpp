#include "lva/io.hpp"

#include <fstream>
#include <sstream>

namespace lva {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  auto p = s.find('#');
  return trim(p == std::string_view::npos ? s : s.substr(0, p));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
  if (line.empty()) throw ParseError("graph6: empty line", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: character out of range at byte " + std::to_string(i), i);
  }
  const int n = line[0] - 63;
  if (n == 63) throw ParseError("graph6: long header form (n > 62) not supported", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = 1 + (bits + 5) / 6;
  if (line.size() < need)
    throw ParseError("graph6: truncated bit vector, expected " + std::to_string(need) + " bytes", line.size());
  if (line.size() > need) throw ParseError("graph6: trailing bytes after bit vector", need);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  // Padding bits must be zero.
  for (; k % 6 != 0; ++k) {
    int byte = line[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits", 1 + k / 6);
  }
  return b.build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("emit_graph6: only n <= 62 is supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, nb = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nb == 6) {
        out += static_cast<char>(63 + acc);
        acc = nb = 0;
      }
    }
  if (nb > 0) out += static_cast<char>(63 + (acc << (6 - nb)));
  return out;
}

Graph parse_labeled(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  int n = 0;
  long m = 0, seen = 0;
  GraphBuilder b;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ss{std::string(line)};
    if (!header) {
      if (!(ss >> n >> m) || n < 0 || m < 0) throw ParseError("expected header 'n m'", lineno);
      std::string rest;
      if (ss >> rest) throw ParseError("unexpected token after header", lineno);
      b = GraphBuilder(n);
      header = true;
      continue;
    }
    if (line.rfind("label", 0) == 0 && (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
      std::string kw;
      long v;
      ss >> kw;
      if (!(ss >> v) || v < 0 || v >= n) throw ParseError("label: bad vertex id", lineno);
      std::string token;
      std::getline(ss, token);
      auto t = trim(token);
      if (t.empty()) throw ParseError("label: missing token", lineno);
      b.set_label(static_cast<Vertex>(v), std::string(t));
      continue;
    }
    long u, v;
    if (!(ss >> u >> v)) throw ParseError("expected edge 'u v'", lineno);
    std::string rest;
    if (ss >> rest) throw ParseError("unexpected token after edge", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range", lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    if (b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) throw ParseError("duplicate edge", lineno);
    if (++seen > m) throw ParseError("more edges than declared", lineno);
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!header) throw ParseError("missing header", lineno);
  if (seen != m)
    throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(seen), lineno);
  return b.build();
}

Graph parse_labeled(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_labeled(in);
}

std::string emit_labeled(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream lines(text);
  std::string raw;
  while (std::getline(lines, raw)) {
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    if (line.find(' ') == std::string_view::npos && line.find('\t') == std::string_view::npos)
      return parse_graph6(line);
    break;
  }
  return parse_labeled(std::string_view(text));
}

}  // namespace lva
