#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "coc/error.hpp"
#include "coc/instance.hpp"

namespace coc {

VertexSet Instance::free_vertices() const {
  auto in_m = modulator_mask();
  VertexSet out;
  for (Vertex v = 0; v < n(); ++v)
    if (!in_m[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

namespace {

template <typename T>
T parse_number(std::string_view token, int line) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_fields(std::string_view s, int line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(' ', pos);
    if (next == std::string_view::npos) next = s.size();
    if (next == pos) throw ParseError(line, "fields must be separated by single spaces");
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

AnnotatedInstance parse_any(std::string_view text, bool allow_annotations) {
  AnnotatedInstance out;
  bool have_header = false;
  int n = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::vector<std::pair<Edge, int>> annotations;
  VertexSet modulator;

  auto vertex = [&](std::string_view tok, int line) {
    auto v = parse_number<long long>(tok, line);
    if (v < 0 || v >= n) throw ParseError(line, "vertex id " + std::string(tok) + " out of range");
    return static_cast<Vertex>(v);
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') throw ParseError(line_no, "CR line endings are not allowed");
    if (line.empty() || line.front() == '#') continue;
    for (char c : line)
      if (static_cast<unsigned char>(c) > 127) throw ParseError(line_no, "non-ASCII character");
    auto fields = split_fields(line, line_no);
    std::string_view kind = fields[0];
    if (!have_header) {
      if (kind != "p") throw ParseError(line_no, "missing header 'p coc <n> <d> <k>'");
      if (fields.size() != 5 || fields[1] != "coc")
        throw ParseError(line_no, "malformed header, expected 'p coc <n> <d> <k>'");
      auto nn = parse_number<long long>(fields[2], line_no);
      if (nn < 0 || nn > (1LL << 30)) throw ParseError(line_no, "vertex count out of range");
      n = static_cast<int>(nn);
      auto d = parse_number<long long>(fields[3], line_no);
      if (d < 1 || d > (1LL << 30)) throw ParseError(line_no, "d must be a positive integer");
      out.base.d = static_cast<int>(d);
      out.base.k = parse_number<std::int64_t>(fields[4], line_no);
      have_header = true;
      continue;
    }
    if (kind == "p") throw ParseError(line_no, "duplicate header");
    if (kind == "m") {
      for (std::size_t i = 1; i < fields.size(); ++i) modulator.push_back(vertex(fields[i], line_no));
    } else if (kind == "e" || kind == "a") {
      if (fields.size() != 3) throw ParseError(line_no, "expected two vertex ids");
      Vertex u = vertex(fields[1], line_no);
      Vertex v = vertex(fields[2], line_no);
      if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      if (kind == "e") {
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen_edges.insert(e).second)
          throw ParseError(line_no, "duplicate edge " + std::to_string(e.first) + " " +
                                        std::to_string(e.second));
        edges.push_back(e);
      } else {
        if (!allow_annotations) throw ParseError(line_no, "annotations are not allowed here");
        annotations.push_back({{std::min(u, v), std::max(u, v)}, line_no});
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(kind) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'p coc <n> <d> <k>'");

  out.base.graph = Graph::from_edges(n, edges);
  out.base.modulator = normalized(std::move(modulator));

  auto in_m = out.base.modulator_mask();
  std::vector<Edge> ann;
  for (auto& [e, ln] : annotations) {
    if (!in_m[static_cast<std::size_t>(e.first)] || !in_m[static_cast<std::size_t>(e.second)])
      throw ParseError(ln, "annotation endpoints must be modulator vertices");
    ann.push_back(e);
  }
  std::sort(ann.begin(), ann.end());
  ann.erase(std::unique(ann.begin(), ann.end()), ann.end());
  out.annotations = std::move(ann);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Instance parse_instance(std::string_view text) { return parse_any(text, false).base; }

AnnotatedInstance parse_annotated_instance(std::string_view text) { return parse_any(text, true); }

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p coc " << inst.n() << ' ' << inst.d << ' ' << inst.k << '\n';
  if (!inst.modulator.empty()) {
    out << 'm';
    for (Vertex v : inst.modulator) out << ' ' << v;
    out << '\n';
  }
  for (auto [u, v] : inst.graph.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string write_annotated_instance(const AnnotatedInstance& inst) {
  std::string text = write_instance(inst.base);
  for (auto [u, v] : inst.annotations) text += "a " + std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return text;
}

Instance read_instance_file(const std::string& path) { return parse_instance(read_file(path)); }

AnnotatedInstance read_annotated_instance_file(const std::string& path) {
  return parse_annotated_instance(read_file(path));
}

}  // namespace coc
