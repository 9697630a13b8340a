#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstep/boolmat.hpp"

namespace mstep {

using Vertex = std::size_t;
// Vertex sets are kept sorted ascending without duplicates.
using VertexSet = std::vector<Vertex>;

class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    BadPartition,
    Loop,
    SamePartArc,
    MissingCrossArc,
    DoubleCrossArc,
    NotMultipartite,
  };

  ValidationError(Kind kind, Vertex u, Vertex v, const std::string& what)
      : std::runtime_error(what), kind_(kind), u_(u), v_(v) {}

  Kind kind() const { return kind_; }
  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

 private:
  Kind kind_;
  Vertex u_;
  Vertex v_;
};

const char* to_string(ValidationError::Kind kind);

/// Orientation of a complete k-partite graph, k >= 2, with its partition.
/// Only validate() constructs one, so every instance satisfies the
/// multipartite tournament conditions.
class Tournament {
 public:
  std::size_t size() const { return arcs_.size(); }
  const BoolMatrix& arcs() const { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const { return arcs_.get(u, v); }

  const std::vector<VertexSet>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  std::size_t part_of(Vertex v) const { return part_of_[v]; }

  friend Tournament validate(BoolMatrix arcs, std::vector<VertexSet> parts);
  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Tournament(BoolMatrix arcs, std::vector<VertexSet> parts,
             std::vector<std::size_t> part_of)
      : arcs_(std::move(arcs)),
        parts_(std::move(parts)),
        part_of_(std::move(part_of)) {}

  BoolMatrix arcs_;
  std::vector<VertexSet> parts_;
  std::vector<std::size_t> part_of_;
};

/// Checks the partition and the block conditions and returns the tournament.
/// Each violation throws ValidationError naming the offending pair; parts are
/// sorted internally but keep their given order.
Tournament validate(BoolMatrix arcs, std::vector<VertexSet> parts);

/// Partite sets recovered as the connected components of the complement of
/// the underlying undirected graph, ordered by smallest member.
std::vector<VertexSet> infer_partition(const BoolMatrix& arcs);

VertexSet sinks(const Tournament& t);

/// Strong components Q_1..Q_s, in an order where every arc between distinct
/// components goes from a lower to a higher index.  Ties between valid
/// orders are broken by the smallest vertex in each component.
struct ComponentStructure {
  std::vector<VertexSet> components;
  std::vector<std::size_t> component_of;
  // successors[i]: components reachable from Q_i by a single arc, ascending.
  std::vector<std::vector<std::size_t>> successors;
  // The condensation has more than one sink (only possible with sinks in D).
  bool multiple_sinks = false;

  std::size_t size() const { return components.size(); }
  const VertexSet& last() const { return components.back(); }
  bool is_trivial(std::size_t i) const { return components[i].size() == 1; }
};

ComponentStructure ordered_components(const Tournament& t);

}  // namespace mstep
