#pragma once

// Text and JSON formats for matrices and tournaments.
//
// Dense matrix:  first line n, then n lines of n characters from {0,1}.
// Edge list:     "n k", then k lines of space-separated vertex ids (one line
//                per partite set), then one "u v" line per arc.  Vertex ids
//                are 0-based.  Blank lines and lines starting with '#' are
//                ignored.
// JSON:          {"n": n, "parts": [[...], ...], "arcs": [[u, v], ...]}.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mstep/boolmat.hpp"
#include "mstep/digraph.hpp"

namespace mstep {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class InputFormat { Matrix, EdgeList, Json };

const char* to_string(InputFormat f);
InputFormat parse_input_format(const std::string& name);

/// Guesses the format from the first non-blank line: '{' means JSON, one
/// integer means matrix, two integers mean edge list.
InputFormat detect_format(const std::string& text);

BoolMatrix parse_matrix(const std::string& text);
std::string format_matrix(const BoolMatrix& m);

/// Arcs plus the partition when the format carries one.
struct ParsedInput {
  BoolMatrix arcs{1};
  std::optional<std::vector<VertexSet>> parts;
};

ParsedInput parse_edge_list(const std::string& text);
std::string format_edge_list(const Tournament& t);

nlohmann::json tournament_to_json(const Tournament& t);
ParsedInput parse_tournament_json(const std::string& text);

ParsedInput parse_input(const std::string& text, InputFormat format);

/// Parses and validates; a matrix input gets its partition inferred.
Tournament load_tournament(const std::string& text, InputFormat format);

std::string read_file(const std::string& path);

}  // namespace mstep
