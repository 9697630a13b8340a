#pragma once

// Structural construction of the limit of the m-step competition graphs of a
// sink-free multipartite tournament, and its cross-check against the matrix
// power oracle.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mstep/boolmat.hpp"
#include "mstep/digraph.hpp"
#include "mstep/imprimitivity.hpp"

namespace mstep {

enum class LimitLabel { Complete, G1, G2, G3 };

const char* to_string(LimitLabel label);

/// Number of clique slots K^(1).. used by each label (1, 3, 7, 7).
std::size_t slot_count(LimitLabel label);

/// Slot adjacency of the limit shapes: joined(label, i, j) for 0-based slots
/// says whether every vertex of K^(i+1) is adjacent to every vertex of
/// K^(j+1).  Diagonal entries are true.
bool slots_joined(LimitLabel label, std::size_t i, std::size_t j);

/// Which constructor case produced a report.
enum class Branch : std::size_t {
  Primitive,               // kappa(Q_s) = 1
  StrongKappa2,            // s = 1
  StrongKappa3,
  StrongKappa4,
  Kappa2,                  // s >= 2, bipartite-type assembly
  Kappa4,
  Kappa3Unusual,           // Q_(s-1), Q_s unusual
  Kappa3Usual,             // Q_(s-1) nontrivial, not unusual
  Kappa3AllUnrelated,      // Q_(s-1) trivial, t = s - 1
  Kappa3SinglePart,        // Q_(s-1) trivial, Q_(t+1)..Q_(s-1) in one part
  Kappa3LastRunNontrivial, // Q_(t_1) nontrivial
  Kappa3LastRunThirdPart,  // Q_(t_1) trivial, in the part of U_3
  Kappa3LastRunFirstPart,  // Q_(t_1) trivial, in the part of U_1, t_2 = t
  Kappa3LastRunDeep,       // as above with t_2 > t
  kCount,
};

const char* to_string(Branch branch);

struct ConstructionTrace {
  Branch branch = Branch::Primitive;
  std::size_t kappa = 1;
  std::size_t s = 1;
  // Component indices are 1-based like Q_1..Q_s; 0 means "none".
  std::optional<std::size_t> t;
  std::optional<std::size_t> t1;
  std::optional<std::size_t> t2;
  // Partite labelling used internally: part_order[i] plays V_(i+1).
  std::vector<std::size_t> part_order;
  // Rotation r applied to Q_s's sets so the trivial Q_(s-1) sits in V_2.
  std::size_t rotation = 0;
};

struct LimitReport {
  LimitLabel label = LimitLabel::Complete;
  // cliques[i] is K^(i+1); empty means the slot is absent.  Only the first
  // slot_count(label) entries are used.
  std::array<VertexSet, 7> cliques;
  // Adjacency of the limit graph, zero diagonal.
  BoolMatrix edges{1};
  std::optional<std::size_t> cindex;
  std::optional<std::size_t> cperiod;
  ConstructionTrace trace;
};

/// Raised when the tournament has sinks, so Q_s is trivial and no limit
/// construction applies.
class SinkError : public std::runtime_error {
 public:
  explicit SinkError(VertexSet sinks);
  const VertexSet& sinks() const { return sinks_; }

 private:
  VertexSet sinks_;
};

/// Builds the limit graph from the component structure.  Throws SinkError
/// when t has sinks, std::logic_error on an internal inconsistency.
LimitReport construct_limit(const Tournament& t);

// Helpers for the two multi-component cases.  Both expect the structure of t
// and the aligned imprimitivity data of its last component.
LimitReport assemble_bipartite_type(const Tournament& t,
                                    const ComponentStructure& structure,
                                    const AlignedImprimitivity& aligned);
LimitReport assemble_kappa3(const Tournament& t,
                            const ComponentStructure& structure,
                            const AlignedImprimitivity& aligned);

/// Edge set implied by a slot assignment: cliques on each slot plus the
/// joins of the label's shape.
BoolMatrix edges_from_slots(std::size_t n, LimitLabel label,
                            const std::array<VertexSet, 7>& cliques);

struct BlockForm {
  std::vector<Vertex> permutation;  // vertices listed slot by slot
  LimitLabel label = LimitLabel::Complete;
  std::string template_name;        // "M1", "M2", "M3" or "J"
  std::vector<std::size_t> block_sizes;  // per slot, 0 = absent
};

/// Reorders (edges + I) slot by slot and checks it matches the label's block
/// template exactly; std::logic_error on mismatch.
BlockForm block_form(const LimitReport& report);

/// Applies a simultaneous row/column permutation: result(i, j) =
/// m(perm[i], perm[j]).
BoolMatrix permute(const BoolMatrix& m, const std::vector<Vertex>& perm);

/// Expanded block template for the given label and slot sizes.
BoolMatrix block_template(LimitLabel label,
                          const std::vector<std::size_t>& block_sizes);

struct Verdict {
  enum class Kind {
    Equal,             // sink-free, constructor matches the oracle
    Mismatch,          // sink-free, edge sets differ or no limit
    RefusedWithSinks,  // sinks present, constructor refused
    Inconsistent,      // sinks present but constructor did not refuse
  };
  Kind kind = Kind::Equal;
  CompetitionProfile profile;
  std::optional<LimitReport> report;
  // Pairs (u < v) in the oracle limit but not the construction, and vice
  // versa.
  std::vector<std::pair<Vertex, Vertex>> missing;
  std::vector<std::pair<Vertex, Vertex>> extra;

  bool ok() const {
    return kind == Kind::Equal || kind == Kind::RefusedWithSinks;
  }
};

const char* to_string(Verdict::Kind kind);

Verdict verify_against_oracle(const Tournament& t);

using BranchCounters = std::array<std::size_t, static_cast<std::size_t>(Branch::kCount)>;

}  // namespace mstep
