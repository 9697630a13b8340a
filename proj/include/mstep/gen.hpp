#pragma once

// Seeded generators of multipartite tournaments.
//
// All randomness comes from std::mt19937_64, whose output sequence is fixed
// by the C++ standard.  Coins are the top bit of one 64-bit draw, so outputs
// do not depend on the standard library's distribution implementations.
// Changing either choice invalidates the golden files under tests/golden.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstep/digraph.hpp"

namespace mstep {

enum class Constraint { None, SinkFree, Strong, LastKappa, UnusualPair };

const char* to_string(Constraint c);
// Accepts "none", "sink_free", "strong", "last_kappa(v)" / "last_kappa:v"
// and "unusual_pair".  Sets kappa for last_kappa.
Constraint parse_constraint(const std::string& text, std::size_t& kappa);

struct GenSpec {
  std::vector<std::size_t> part_sizes;
  std::uint64_t seed = 0;
  Constraint constraint = Constraint::None;
  std::size_t kappa = 0;  // target kappa(Q_s) for LastKappa
  // Vertices are spread over this many layers; arcs between layers always
  // point to the later layer, coins decide the rest.  1 gives a uniformly
  // random orientation.
  std::size_t layers = 1;
};

class GenerationFailure : public std::runtime_error {
 public:
  GenerationFailure(std::size_t tries, std::size_t with_sinks,
                    std::size_t not_strong, std::size_t wrong_kappa);
  std::size_t tries() const { return tries_; }
  std::size_t with_sinks() const { return with_sinks_; }
  std::size_t not_strong() const { return not_strong_; }
  std::size_t wrong_kappa() const { return wrong_kappa_; }

 private:
  std::size_t tries_, with_sinks_, not_strong_, wrong_kappa_;
};

/// The partition lists vertices consecutively: part 0 is 0..sizes[0]-1 and
/// so on.
std::vector<VertexSet> consecutive_parts(const std::vector<std::size_t>& sizes);

/// One orientation drawn with a generator seeded by spec.seed.  The
/// constraint field is ignored, except that UnusualPair defers to
/// make_unusual_pair with part_sizes read as two triples.
Tournament random_tournament(const GenSpec& spec);

/// Draws from random_tournament's stream until the constraint holds.
/// Throws GenerationFailure with per-reason counts after max_tries.
Tournament random_constrained(const GenSpec& spec, std::size_t max_tries);

/// Two kappa-3 blow-ups of a directed triangle, Q_1 before Q_2.  U_i of Q_1
/// has prev_sizes[i] vertices in partite set i; U_i of Q_2 has
/// last_sizes[i] vertices in partite set last_parts[i].  Cross pairs in
/// different partite sets point from Q_1 to Q_2.  Vertex ids are shuffled
/// with the seed.
Tournament make_kappa3_pair(const std::array<std::size_t, 3>& prev_sizes,
                            const std::array<std::size_t, 3>& last_sizes,
                            const std::array<std::size_t, 3>& last_parts,
                            std::uint64_t seed);

/// make_kappa3_pair with aligned partite sets, so the pair is unusual.
Tournament make_unusual_pair(const std::array<std::size_t, 3>& prev_sizes,
                             const std::array<std::size_t, 3>& last_sizes,
                             std::uint64_t seed);

/// The six-vertex tripartite example with parts {v1}, {v2,v3,v4}, {v5,v6}
/// (vertex vi has id i-1).
Tournament figure1();

/// SplitMix64 step; used to derive independent per-instance seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace mstep
