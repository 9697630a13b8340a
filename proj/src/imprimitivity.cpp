#include "mstep/imprimitivity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mstep {

std::optional<std::size_t> ImprimitivityData::index_of(Vertex v) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (std::binary_search(sets[i].begin(), sets[i].end(), v)) return i;
  return std::nullopt;
}

ImprimitivityData ImprimitivityData::rotated(std::size_t r) const {
  ImprimitivityData out;
  out.kappa = kappa;
  out.sets.resize(kappa);
  for (std::size_t i = 0; i < kappa; ++i) out.sets[i] = sets[(i + r) % kappa];
  return out;
}

namespace {

// Breadth-first levels inside the component, following arcs forwards or
// backwards.  Unreached members keep level npos.
std::vector<std::size_t> bfs_levels(const Tournament& t,
                                    const VertexSet& component,
                                    const std::vector<bool>& member,
                                    bool forward) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(t.size(), npos);
  std::vector<Vertex> queue{component.front()};
  level[component.front()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : component) {
      if (level[v] != npos) continue;
      const bool arc = forward ? t.has_arc(u, v) : t.has_arc(v, u);
      if (arc && member[v]) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level;
}

}  // namespace

ImprimitivityData kappa_and_sets(const Tournament& t, const VertexSet& component) {
  if (component.size() < 2)
    throw ComponentError("kappa_and_sets: component is trivial");
  std::vector<bool> member(t.size(), false);
  for (Vertex v : component) {
    if (v >= t.size())
      throw ComponentError("kappa_and_sets: vertex out of range");
    member[v] = true;
  }

  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const auto level = bfs_levels(t, component, member, true);
  const auto back = bfs_levels(t, component, member, false);
  for (Vertex v : component) {
    if (level[v] == npos || back[v] == npos)
      throw ComponentError("kappa_and_sets: component is not strongly connected");
  }

  std::size_t g = 0;
  for (Vertex u : component) {
    for (Vertex v : component) {
      if (!t.has_arc(u, v)) continue;
      const auto lu = static_cast<long long>(level[u]);
      const auto lv = static_cast<long long>(level[v]);
      const auto diff = static_cast<std::size_t>(std::llabs(lu + 1 - lv));
      g = std::gcd(g, diff);
    }
  }

  ImprimitivityData out;
  out.kappa = g;
  out.sets.resize(g);
  for (Vertex v : component) out.sets[level[v] % g].push_back(v);
  return out;
}

std::size_t common_part(const Tournament& t, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("common_part: empty vertex set");
  const std::size_t p = t.part_of(x.front());
  for (Vertex v : x) {
    if (t.part_of(v) != p) {
      throw std::invalid_argument("vertex set straddles partite sets " +
                                  std::to_string(p) + " and " +
                                  std::to_string(t.part_of(v)));
    }
  }
  return p;
}

bool partite_related(const Tournament& t, const VertexSet& x, const VertexSet& y) {
  return common_part(t, x) == common_part(t, y);
}

AlignedImprimitivity align_to_partition(const ImprimitivityData& data,
                                        const Tournament& t) {
  AlignedImprimitivity out{data, {}};
  std::vector<std::size_t> leading;
  auto part_containing = [&](const VertexSet& a, const VertexSet* b) {
    VertexSet merged = a;
    if (b != nullptr) merged.insert(merged.end(), b->begin(), b->end());
    try {
      return common_part(t, merged);
    } catch (const std::invalid_argument&) {
      throw std::logic_error(
          "align_to_partition: sets of imprimitivity straddle partite sets");
    }
  };

  switch (data.kappa) {
    case 1:
      break;
    case 2:
    case 3:
      for (const auto& u : data.sets) leading.push_back(part_containing(u, nullptr));
      break;
    case 4:
      // sets[0] holds the smallest vertex because the BFS root lands there.
      leading.push_back(part_containing(data.sets[0], &data.sets[2]));
      leading.push_back(part_containing(data.sets[1], &data.sets[3]));
      break;
    default:
      throw std::logic_error("align_to_partition: kappa " +
                             std::to_string(data.kappa) +
                             " does not occur in a multipartite tournament");
  }

  std::vector<bool> used(t.part_count(), false);
  for (std::size_t p : leading) {
    if (used[p])
      throw std::logic_error("align_to_partition: two sets share a partite set");
    used[p] = true;
    out.part_order.push_back(p);
  }
  for (std::size_t p = 0; p < t.part_count(); ++p)
    if (!used[p]) out.part_order.push_back(p);
  return out;
}

std::optional<std::size_t> unusual_shift(const Tournament& t,
                                         const ImprimitivityData& prev,
                                         const ImprimitivityData& last) {
  if (prev.kappa != 3 || last.kappa != 3) return std::nullopt;
  std::size_t prev_parts[3];
  std::size_t last_parts[3];
  for (std::size_t i = 0; i < 3; ++i) {
    prev_parts[i] = common_part(t, prev.sets[i]);
    last_parts[i] = common_part(t, last.sets[i]);
  }
  for (std::size_t j = 0; j < 3; ++j) {
    bool all = true;
    for (std::size_t i = 0; i < 3 && all; ++i)
      all = prev_parts[i] == last_parts[(i + j) % 3];
    if (all) return j;
  }
  return std::nullopt;
}

bool is_unusual(const Tournament& t, const VertexSet& q_prev,
                const VertexSet& q_last) {
  if (q_prev.size() < 2 || q_last.size() < 2) return false;
  const auto prev = kappa_and_sets(t, q_prev);
  const auto last = kappa_and_sets(t, q_last);
  return unusual_shift(t, prev, last).has_value();
}

}  // namespace mstep
