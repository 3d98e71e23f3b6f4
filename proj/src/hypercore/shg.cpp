#include "hyperlab/hypercore/shg.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

std::int64_t to_int(const Token& t) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.offset);
  return value;
}

}  // namespace

Hypergraph parse_shg(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split(line, pos);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError("missing header 's <arity> n <count>'", 0);
  const auto& header = lines.front();
  if (header.size() != 4 || header[0].text != "s" || header[2].text != "n")
    throw ParseError("header must be 's <arity> n <count>'", header.front().offset);
  const std::int64_t arity = to_int(header[1]);
  const std::int64_t n = to_int(header[3]);
  if (arity < 3) throw ParseError("arity must be at least 3", header[1].offset);
  if (n < 0) throw ParseError("vertex count must be non-negative", header[3].offset);

  std::size_t first_edge = 1;
  std::vector<Vertex> vertices;
  if (lines.size() > 1 && lines[1].front().text == "v") {
    for (std::size_t i = 1; i < lines[1].size(); ++i) vertices.push_back(to_int(lines[1][i]));
    if (static_cast<std::int64_t>(vertices.size()) != n)
      throw ParseError("vertex line lists " + std::to_string(vertices.size()) + " labels, header says " +
                           std::to_string(n),
                       lines[1].front().offset);
    first_edge = 2;
  } else {
    for (std::int64_t v = 1; v <= n; ++v) vertices.push_back(v);
  }
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t l = first_edge; l < lines.size(); ++l) {
    const auto& tokens = lines[l];
    if (static_cast<std::int64_t>(tokens.size()) != arity)
      throw ParseError("edge has " + std::to_string(tokens.size()) + " vertices, expected " +
                           std::to_string(arity),
                       tokens.front().offset);
    std::vector<Vertex> edge;
    for (const auto& t : tokens) edge.push_back(to_int(t));
    edges.push_back(std::move(edge));
  }
  try {
    Hypergraph g(static_cast<int>(arity), vertices, edges);
    if (static_cast<std::int64_t>(g.vertex_count()) != n)
      throw ParseError("duplicate vertex labels", lines.size() > 1 ? lines[1].front().offset : 0);
    return g;
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string to_shg(const Hypergraph& g) {
  std::ostringstream out;
  out << "s " << g.arity() << " n " << g.vertex_count() << "\n";
  bool standard = true;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.label(static_cast<int>(i)) != static_cast<Vertex>(i + 1)) standard = false;
  if (!standard) {
    out << "v";
    for (Vertex v : g.vertices()) out << ' ' << v;
    out << "\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto labels = g.edge_labels(e);
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
    out << "\n";
  }
  return out.str();
}

Hypergraph read_shg(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_shg(buffer.str());
}

void write_shg(const std::filesystem::path& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_shg(g);
}

}  // namespace hyperlab
