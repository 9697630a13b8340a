#include "mstep/gen.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mstep/imprimitivity.hpp"

namespace mstep {

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::None: return "none";
    case Constraint::SinkFree: return "sink_free";
    case Constraint::Strong: return "strong";
    case Constraint::LastKappa: return "last_kappa";
    case Constraint::UnusualPair: return "unusual_pair";
  }
  return "?";
}

Constraint parse_constraint(const std::string& text, std::size_t& kappa) {
  if (text == "none") return Constraint::None;
  if (text == "sink_free") return Constraint::SinkFree;
  if (text == "strong") return Constraint::Strong;
  if (text == "unusual_pair") return Constraint::UnusualPair;
  const std::string prefix = "last_kappa";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    std::string rest = text.substr(prefix.size());
    if (rest.front() == '(' && rest.back() == ')')
      rest = rest.substr(1, rest.size() - 2);
    else if (rest.front() == ':' || rest.front() == '=')
      rest = rest.substr(1);
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), ::isdigit)) {
      kappa = std::stoul(rest);
      return Constraint::LastKappa;
    }
  }
  throw std::invalid_argument("unknown constraint '" + text + "'");
}

GenerationFailure::GenerationFailure(std::size_t tries, std::size_t with_sinks,
                                     std::size_t not_strong,
                                     std::size_t wrong_kappa)
    : std::runtime_error("constraint not met after " + std::to_string(tries) +
                         " tries (sinks: " + std::to_string(with_sinks) +
                         ", not strong: " + std::to_string(not_strong) +
                         ", wrong kappa: " + std::to_string(wrong_kappa) + ")"),
      tries_(tries),
      with_sinks_(with_sinks),
      not_strong_(not_strong),
      wrong_kappa_(wrong_kappa) {}

std::vector<VertexSet> consecutive_parts(const std::vector<std::size_t>& sizes) {
  std::vector<VertexSet> parts;
  Vertex next = 0;
  for (std::size_t size : sizes) {
    VertexSet part(size);
    std::iota(part.begin(), part.end(), next);
    next += size;
    parts.push_back(std::move(part));
  }
  return parts;
}

namespace {

bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

void check_sizes(const std::vector<std::size_t>& sizes) {
  if (sizes.size() < 2)
    throw std::invalid_argument("generator: need at least two partite sets");
  for (std::size_t s : sizes)
    if (s == 0) throw std::invalid_argument("generator: partite sets must be nonempty");
}

Tournament draw(const GenSpec& spec, std::mt19937_64& rng) {
  const auto parts = consecutive_parts(spec.part_sizes);
  const std::size_t n = std::accumulate(spec.part_sizes.begin(),
                                        spec.part_sizes.end(), std::size_t{0});
  std::vector<std::size_t> part_of(n);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (Vertex v : parts[p]) part_of[v] = p;

  std::vector<std::size_t> layer(n, 0);
  if (spec.layers > 1)
    for (Vertex v = 0; v < n; ++v) layer[v] = rng() % spec.layers;

  BoolMatrix arcs(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] == part_of[v]) continue;
      bool forward;
      if (layer[u] != layer[v])
        forward = layer[u] < layer[v];
      else
        forward = coin(rng);
      if (forward)
        arcs.set(u, v);
      else
        arcs.set(v, u);
    }
  }
  return validate(std::move(arcs), parts);
}

}  // namespace

Tournament random_tournament(const GenSpec& spec) {
  if (spec.constraint == Constraint::UnusualPair) {
    if (spec.part_sizes.size() != 6)
      throw std::invalid_argument("unusual_pair: expected six sizes");
    return make_unusual_pair({spec.part_sizes[0], spec.part_sizes[1], spec.part_sizes[2]},
                             {spec.part_sizes[3], spec.part_sizes[4], spec.part_sizes[5]},
                             spec.seed);
  }
  check_sizes(spec.part_sizes);
  std::mt19937_64 rng(spec.seed);
  return draw(spec, rng);
}

Tournament random_constrained(const GenSpec& spec, std::size_t max_tries) {
  if (spec.constraint == Constraint::None || spec.constraint == Constraint::UnusualPair)
    return random_tournament(spec);
  check_sizes(spec.part_sizes);

  std::mt19937_64 rng(spec.seed);
  std::size_t with_sinks = 0, not_strong = 0, wrong_kappa = 0;
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Tournament t = draw(spec, rng);
    if (!sinks(t).empty()) {
      ++with_sinks;
      continue;
    }
    if (spec.constraint == Constraint::SinkFree) return t;
    const auto cs = ordered_components(t);
    if (spec.constraint == Constraint::Strong) {
      if (cs.size() == 1) return t;
      ++not_strong;
      continue;
    }
    if (kappa_and_sets(t, cs.last()).kappa == spec.kappa) return t;
    ++wrong_kappa;
  }
  throw GenerationFailure(max_tries, with_sinks, not_strong, wrong_kappa);
}

Tournament make_kappa3_pair(const std::array<std::size_t, 3>& prev_sizes,
                            const std::array<std::size_t, 3>& last_sizes,
                            const std::array<std::size_t, 3>& last_parts,
                            std::uint64_t seed) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (prev_sizes[i] == 0 || last_sizes[i] == 0)
      throw std::invalid_argument("make_kappa3_pair: sizes must be positive");
    if (last_parts[i] > 2)
      throw std::invalid_argument("make_kappa3_pair: partite set index must be 0..2");
  }
  {
    auto sorted = last_parts;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<std::size_t, 3>{0, 1, 2})
      throw std::invalid_argument("make_kappa3_pair: last_parts must be a permutation");
  }

  // Abstract vertices: component, position i of the set U_i, partite set.
  struct Slot {
    std::size_t component, set, part;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < prev_sizes[i]; ++c) slots.push_back({0, i, i});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < last_sizes[i]; ++c) slots.push_back({1, i, last_parts[i]});
  const std::size_t n = slots.size();

  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  // Fisher-Yates with raw draws, independent of std::shuffle's algorithm.
  for (std::size_t i = n - 1; i > 0; --i) std::swap(id[i], id[rng() % (i + 1)]);

  BoolMatrix arcs(n);
  std::vector<VertexSet> parts(3);
  for (std::size_t a = 0; a < n; ++a) {
    parts[slots[a].part].push_back(id[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (slots[a].part == slots[b].part) continue;
      bool arc;
      if (slots[a].component == slots[b].component)
        arc = slots[b].set == (slots[a].set + 1) % 3;
      else
        arc = slots[a].component < slots[b].component;
      if (arc) arcs.set(id[a], id[b]);
    }
  }
  return validate(std::move(arcs), std::move(parts));
}

Tournament make_unusual_pair(const std::array<std::size_t, 3>& prev_sizes,
                             const std::array<std::size_t, 3>& last_sizes,
                             std::uint64_t seed) {
  return make_kappa3_pair(prev_sizes, last_sizes, {0, 1, 2}, seed);
}

Tournament figure1() {
  BoolMatrix a = BoolMatrix::from_rows({
      "011111",
      "000001",
      "000001",
      "000010",
      "011000",
      "000100",
  });
  return validate(std::move(a), {{0}, {1, 2, 3}, {4, 5}});
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace mstep
