#include "mstep/io.hpp"

#include <fstream>
#include <sstream>

namespace mstep {

const char* to_string(InputFormat f) {
  switch (f) {
    case InputFormat::Matrix: return "matrix";
    case InputFormat::EdgeList: return "edges";
    case InputFormat::Json: return "json";
  }
  return "?";
}

InputFormat parse_input_format(const std::string& name) {
  if (name == "matrix") return InputFormat::Matrix;
  if (name == "edges" || name == "edge-list" || name == "edgelist")
    return InputFormat::EdgeList;
  if (name == "json") return InputFormat::Json;
  throw std::invalid_argument("unknown input format '" + name + "'");
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoul(tok);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "integer out of range: '" + tok + "'");
  }
}

}  // namespace

InputFormat detect_format(const std::string& text) {
  for (const auto& line : split_lines(text)) {
    if (blank(line) || line.front() == '#') continue;
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '{') return InputFormat::Json;
    const auto toks = tokens(line);
    if (toks.size() == 1) return InputFormat::Matrix;
    if (toks.size() == 2) return InputFormat::EdgeList;
    throw ParseError(1, "cannot detect input format from first line");
  }
  throw ParseError(1, "empty input");
}

BoolMatrix parse_matrix(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const auto head = tokens(lines[0]);
  if (head.size() != 1) throw ParseError(1, "expected the dimension n");
  const std::size_t n = parse_count(head[0], 1);
  if (n == 0) throw ParseError(1, "dimension must be positive");

  std::vector<std::string> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lineno = i + 2;
    if (i + 1 >= lines.size())
      throw ParseError(lineno, "expected " + std::to_string(n) + " rows, got " +
                                   std::to_string(i));
    const std::string& row = lines[i + 1];
    if (row.size() != n)
      throw ParseError(lineno, "row has " + std::to_string(row.size()) +
                                   " characters, expected " + std::to_string(n));
    const auto bad = row.find_first_not_of("01");
    if (bad != std::string::npos)
      throw ParseError(lineno, "invalid character '" + std::string(1, row[bad]) +
                                   "' in column " + std::to_string(bad + 1));
    rows.push_back(row);
  }
  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    if (!blank(lines[i])) throw ParseError(i + 1, "unexpected content after matrix");
  }
  return BoolMatrix::from_rows(rows);
}

std::string format_matrix(const BoolMatrix& m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (const auto& row : m.to_rows()) out += row + "\n";
  return out;
}

ParsedInput parse_edge_list(const std::string& text) {
  const auto lines = split_lines(text);
  std::vector<std::pair<std::size_t, std::vector<std::string>>> content;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i]) || lines[i].front() == '#') continue;
    content.emplace_back(i + 1, tokens(lines[i]));
  }
  if (content.empty()) throw ParseError(1, "empty input");

  const auto& [head_line, head] = content[0];
  if (head.size() != 2) throw ParseError(head_line, "expected header 'n k'");
  const std::size_t n = parse_count(head[0], head_line);
  const std::size_t k = parse_count(head[1], head_line);
  if (n == 0) throw ParseError(head_line, "vertex count must be positive");
  if (content.size() < 1 + k)
    throw ParseError(lines.size(), "expected " + std::to_string(k) + " partite set lines");

  auto vertex = [&](const std::string& tok, std::size_t line) {
    const std::size_t v = parse_count(tok, line);
    if (v >= n)
      throw ParseError(line, "vertex " + tok + " out of range 0.." + std::to_string(n - 1));
    return v;
  };

  ParsedInput out{BoolMatrix(n), std::vector<VertexSet>{}};
  for (std::size_t p = 0; p < k; ++p) {
    const auto& [line, toks] = content[1 + p];
    VertexSet part;
    for (const auto& tok : toks) part.push_back(vertex(tok, line));
    out.parts->push_back(std::move(part));
  }
  for (std::size_t i = 1 + k; i < content.size(); ++i) {
    const auto& [line, toks] = content[i];
    if (toks.size() != 2) throw ParseError(line, "expected an arc 'u v'");
    out.arcs.set(vertex(toks[0], line), vertex(toks[1], line));
  }
  return out;
}

std::string format_edge_list(const Tournament& t) {
  std::ostringstream out;
  out << t.size() << ' ' << t.part_count() << '\n';
  for (const auto& part : t.parts()) {
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i];
    out << '\n';
  }
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = 0; v < t.size(); ++v)
      if (t.has_arc(u, v)) out << u << ' ' << v << '\n';
  return out.str();
}

nlohmann::json tournament_to_json(const Tournament& t) {
  nlohmann::json arcs = nlohmann::json::array();
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = 0; v < t.size(); ++v)
      if (t.has_arc(u, v)) arcs.push_back({u, v});
  return {{"n", t.size()}, {"parts", t.parts()}, {"arcs", arcs}};
}

ParsedInput parse_tournament_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0) throw ParseError(1, "vertex count must be positive");
    ParsedInput out{BoolMatrix(n), j.at("parts").get<std::vector<VertexSet>>()};
    for (const auto& part : *out.parts)
      for (Vertex v : part)
        if (v >= n) throw ParseError(1, "vertex " + std::to_string(v) + " out of range");
    for (const auto& arc : j.at("arcs")) {
      const auto pair = arc.get<std::vector<Vertex>>();
      if (pair.size() != 2 || pair[0] >= n || pair[1] >= n)
        throw ParseError(1, "malformed arc " + arc.dump());
      out.arcs.set(pair[0], pair[1]);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("bad tournament JSON: ") + e.what());
  }
}

ParsedInput parse_input(const std::string& text, InputFormat format) {
  switch (format) {
    case InputFormat::Matrix: return {parse_matrix(text), std::nullopt};
    case InputFormat::EdgeList: return parse_edge_list(text);
    case InputFormat::Json: return parse_tournament_json(text);
  }
  throw std::logic_error("parse_input: unknown format");
}

Tournament load_tournament(const std::string& text, InputFormat format) {
  ParsedInput in = parse_input(text, format);
  auto parts = in.parts ? std::move(*in.parts) : infer_partition(in.arcs);
  return validate(std::move(in.arcs), std::move(parts));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mstep
