#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mstep/digraph.hpp"

namespace mstep {

/// Index of imprimitivity of a strong component and its sets of
/// imprimitivity U_1..U_kappa (sets[0] is U_1).  Every arc inside the
/// component goes from sets[i] to sets[(i + 1) % kappa].
struct ImprimitivityData {
  std::size_t kappa = 1;
  std::vector<VertexSet> sets;

  // Position i of the set containing v, or nullopt if v is not covered.
  std::optional<std::size_t> index_of(Vertex v) const;
  // The same data with U_(1+r) relabelled as U_1.
  ImprimitivityData rotated(std::size_t r) const;
};

class ComponentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// BFS levels from the smallest vertex; kappa is the gcd of
/// level(u) + 1 - level(v) over internal arcs.  The root lands in U_1.
/// Throws ComponentError if the set is trivial or not strongly connected.
ImprimitivityData kappa_and_sets(const Tournament& t, const VertexSet& component);

/// Imprimitivity data tied to a labelling of the partite sets.
/// part_order[i] is the index into t.parts() of the set playing V_(i+1):
///   kappa 2, 3: V_i meets the component exactly in U_i;
///   kappa 4:    V_i meets it in U_i and U_(i+2).
/// Remaining partite sets follow in their original order.
struct AlignedImprimitivity {
  ImprimitivityData data;
  std::vector<std::size_t> part_order;
};

/// Throws std::logic_error when the sets cannot be aligned, which a strong
/// multipartite tournament never produces.
AlignedImprimitivity align_to_partition(const ImprimitivityData& data,
                                        const Tournament& t);

/// Whether x and y lie in the same partite set of t.  Each of x, y must be
/// nonempty and inside a single partite set (std::invalid_argument otherwise).
bool partite_related(const Tournament& t, const VertexSet& x, const VertexSet& y);

/// The partite set of t containing all of x; throws if x straddles sets.
std::size_t common_part(const Tournament& t, const VertexSet& x);

/// Shift j in {0,1,2} with U_i(prev) and U_(i+j)(last) partite-related for
/// every i, when both components have kappa 3.
std::optional<std::size_t> unusual_shift(const Tournament& t,
                                         const ImprimitivityData& prev,
                                         const ImprimitivityData& last);

/// The pair (q_prev, q_last) of consecutive components induces an unusual
/// digraph.  False whenever either component is trivial or has kappa != 3.
bool is_unusual(const Tournament& t, const VertexSet& q_prev,
                const VertexSet& q_last);

}  // namespace mstep
