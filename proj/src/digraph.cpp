#include "mstep/digraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>

namespace mstep {

const char* to_string(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::BadPartition: return "bad partition";
    case ValidationError::Kind::Loop: return "loop";
    case ValidationError::Kind::SamePartArc: return "same-part arc";
    case ValidationError::Kind::MissingCrossArc: return "missing cross arc";
    case ValidationError::Kind::DoubleCrossArc: return "double cross arc";
    case ValidationError::Kind::NotMultipartite:
      return "not complete multipartite";
  }
  return "unknown";
}

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

[[noreturn]] void fail(ValidationError::Kind kind, Vertex u, Vertex v,
                       const std::string& detail) {
  throw ValidationError(kind, u, v,
                        std::string(to_string(kind)) + ": " + detail);
}

template <class Fn>
void for_each_bit(std::span<const BoolMatrix::Word> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    BoolMatrix::Word bits = row[w];
    while (bits != 0) {
      fn(w * BoolMatrix::kWordBits +
         static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

}  // namespace

Tournament validate(BoolMatrix arcs, std::vector<VertexSet> parts) {
  const std::size_t n = arcs.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  if (parts.size() < 2) {
    fail(ValidationError::Kind::BadPartition, 0, 0,
         "need at least two partite sets, got " +
             std::to_string(parts.size()));
  }
  std::vector<std::size_t> part_of(n, kNone);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto& part = parts[p];
    if (part.empty()) {
      fail(ValidationError::Kind::BadPartition, p, p,
           "partite set " + std::to_string(p) + " is empty");
    }
    std::sort(part.begin(), part.end());
    for (Vertex v : part) {
      if (v >= n) {
        fail(ValidationError::Kind::BadPartition, v, v,
             "vertex " + std::to_string(v) + " out of range");
      }
      if (part_of[v] != kNone) {
        fail(ValidationError::Kind::BadPartition, v, v,
             "vertex " + std::to_string(v) + " listed twice");
      }
      part_of[v] = p;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[v] == kNone) {
      fail(ValidationError::Kind::BadPartition, v, v,
           "vertex " + std::to_string(v) + " not covered");
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (arcs.get(v, v))
      fail(ValidationError::Kind::Loop, v, v, pair_text(v, v));
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool forward = arcs.get(u, v);
      const bool backward = arcs.get(v, u);
      if (part_of[u] == part_of[v]) {
        if (forward) fail(ValidationError::Kind::SamePartArc, u, v, pair_text(u, v));
        if (backward) fail(ValidationError::Kind::SamePartArc, v, u, pair_text(v, u));
      } else if (!forward && !backward) {
        fail(ValidationError::Kind::MissingCrossArc, u, v, pair_text(u, v));
      } else if (forward && backward) {
        fail(ValidationError::Kind::DoubleCrossArc, u, v, pair_text(u, v));
      }
    }
  }
  return Tournament(std::move(arcs), std::move(parts), std::move(part_of));
}

std::vector<VertexSet> infer_partition(const BoolMatrix& arcs) {
  const std::size_t n = arcs.size();
  for (Vertex v = 0; v < n; ++v) {
    if (arcs.get(v, v))
      fail(ValidationError::Kind::Loop, v, v, pair_text(v, v));
  }
  auto adjacent = [&](Vertex u, Vertex v) {
    return arcs.get(u, v) || arcs.get(v, u);
  };

  // Components of the complement graph, found by flood fill.
  std::vector<std::size_t> label(n, n);
  std::vector<VertexSet> parts;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] != n) continue;
    const std::size_t id = parts.size();
    VertexSet members{root};
    label[root] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Vertex u = members[head];
      for (Vertex v = 0; v < n; ++v) {
        if (v != u && label[v] == n && !adjacent(u, v)) {
          label[v] = id;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    parts.push_back(std::move(members));
  }

  // Complete multipartite iff every complement component is a clique of the
  // complement, i.e. independent in the underlying graph.
  for (const auto& part : parts) {
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (adjacent(part[a], part[b])) {
          fail(ValidationError::Kind::NotMultipartite, part[a], part[b],
               "vertices " + std::to_string(part[a]) + " and " +
                   std::to_string(part[b]) +
                   " fall in one complement component but are adjacent");
        }
      }
    }
  }
  if (parts.size() < 2) {
    fail(ValidationError::Kind::NotMultipartite, 0, 0,
         "underlying graph has no edges, so there is only one partite set");
  }
  return parts;
}

VertexSet sinks(const Tournament& t) {
  VertexSet out;
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.arcs().row_is_zero(v)) out.push_back(v);
  return out;
}

ComponentStructure ordered_components(const Tournament& t) {
  const std::size_t n = t.size();
  const BoolMatrix& arcs = t.arcs();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

  // Iterative Tarjan.
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> successors(n);
  for (Vertex v = 0; v < n; ++v)
    for_each_bit(arcs.row(v), [&](std::size_t w) { successors[v].push_back(w); });

  std::vector<VertexSet> raw;
  std::size_t next_index = 0;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < successors[f.v].size()) {
        const Vertex w = successors[f.v][f.next++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty())
        lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
      if (lowlink[v] == index[v]) {
        VertexSet comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        raw.push_back(std::move(comp));
      }
    }
  }

  const std::size_t s = raw.size();
  std::vector<std::size_t> raw_of(n);
  for (std::size_t c = 0; c < s; ++c)
    for (Vertex v : raw[c]) raw_of[v] = c;

  std::vector<std::vector<std::size_t>> raw_succ(s);
  std::vector<std::size_t> indegree(s, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : successors[v]) {
      if (raw_of[v] != raw_of[w]) raw_succ[raw_of[v]].push_back(raw_of[w]);
    }
  }
  for (auto& list : raw_succ) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t c : list) ++indegree[c];
  }

  // Kahn's algorithm, always taking the ready component with the smallest
  // member vertex.
  using Entry = std::pair<Vertex, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < s; ++c)
    if (indegree[c] == 0) ready.emplace(raw[c].front(), c);
  std::vector<std::size_t> order;
  order.reserve(s);
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    order.push_back(c);
    for (std::size_t d : raw_succ[c])
      if (--indegree[d] == 0) ready.emplace(raw[d].front(), d);
  }

  std::vector<std::size_t> position(s);
  for (std::size_t i = 0; i < s; ++i) position[order[i]] = i;

  ComponentStructure out;
  out.components.resize(s);
  out.successors.resize(s);
  out.component_of.resize(n);
  std::size_t sink_count = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t c = order[i];
    out.components[i] = raw[c];
    for (std::size_t d : raw_succ[c]) out.successors[i].push_back(position[d]);
    std::sort(out.successors[i].begin(), out.successors[i].end());
    if (raw_succ[c].empty()) ++sink_count;
  }
  for (Vertex v = 0; v < n; ++v) out.component_of[v] = position[raw_of[v]];
  out.multiple_sinks = sink_count > 1;
  return out;
}

}  // namespace mstep
