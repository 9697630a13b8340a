#include "mstep/limits.hpp"

#include <algorithm>

namespace mstep {

const char* to_string(LimitLabel label) {
  switch (label) {
    case LimitLabel::Complete: return "Complete";
    case LimitLabel::G1: return "G1";
    case LimitLabel::G2: return "G2";
    case LimitLabel::G3: return "G3";
  }
  return "?";
}

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::Primitive: return "primitive";
    case Branch::StrongKappa2: return "strong-kappa2";
    case Branch::StrongKappa3: return "strong-kappa3";
    case Branch::StrongKappa4: return "strong-kappa4";
    case Branch::Kappa2: return "kappa2";
    case Branch::Kappa4: return "kappa4";
    case Branch::Kappa3Unusual: return "kappa3-unusual";
    case Branch::Kappa3Usual: return "kappa3-nontrivial-usual";
    case Branch::Kappa3AllUnrelated: return "kappa3-trivial-t=s-1";
    case Branch::Kappa3SinglePart: return "kappa3-trivial-one-part";
    case Branch::Kappa3LastRunNontrivial: return "kappa3-trivial-t1-nontrivial";
    case Branch::Kappa3LastRunThirdPart: return "kappa3-trivial-t1-in-V3";
    case Branch::Kappa3LastRunFirstPart: return "kappa3-trivial-t1-in-V1-t2=t";
    case Branch::Kappa3LastRunDeep: return "kappa3-trivial-t1-in-V1-t2>t";
    case Branch::kCount: break;
  }
  return "?";
}

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Equal: return "equal";
    case Verdict::Kind::Mismatch: return "mismatch";
    case Verdict::Kind::RefusedWithSinks: return "refused-with-sinks";
    case Verdict::Kind::Inconsistent: return "inconsistent";
  }
  return "?";
}

std::size_t slot_count(LimitLabel label) {
  switch (label) {
    case LimitLabel::Complete: return 1;
    case LimitLabel::G1: return 3;
    case LimitLabel::G2:
    case LimitLabel::G3: return 7;
  }
  return 0;
}

namespace {

// Slot adjacency of the shapes G1, G2, G3; row and column i stand for
// K^(i+1).
constexpr bool kG1[3][3] = {
    {1, 1, 1},
    {1, 1, 0},
    {1, 0, 1},
};
constexpr bool kG2[7][7] = {
    {1, 1, 1, 1, 1, 1, 1},
    {1, 1, 0, 1, 1, 0, 0},
    {1, 0, 1, 0, 0, 1, 1},
    {1, 1, 0, 1, 0, 0, 0},
    {1, 1, 0, 0, 1, 0, 0},
    {1, 0, 1, 0, 0, 1, 0},
    {1, 0, 1, 0, 0, 0, 1},
};
constexpr bool kG3[7][7] = {
    {1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 0, 1},
    {1, 1, 1, 1, 0, 1, 1},
    {1, 1, 1, 0, 1, 0, 0},
    {1, 1, 0, 1, 0, 1, 0},
    {1, 0, 1, 1, 0, 0, 1},
};

VertexSet merge(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// V(Q_first) u ... u V(Q_last), 1-based and inclusive; empty if first > last.
VertexSet components_range(const ComponentStructure& cs, std::size_t first,
                           std::size_t last) {
  VertexSet out;
  for (std::size_t i = first; i <= last && i >= 1; ++i)
    out = merge(out, cs.components[i - 1]);
  return out;
}

VertexSet all_vertices(std::size_t n) {
  VertexSet out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = v;
  return out;
}

void finish(LimitReport& report, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (std::size_t i = slot_count(report.label); i < report.cliques.size(); ++i) {
    if (!report.cliques[i].empty())
      throw std::logic_error("limit construction: slot beyond label used");
  }
  for (const auto& slot : report.cliques)
    for (Vertex v : slot) ++seen[v];
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] != 1) {
      throw std::logic_error("limit construction: vertex " + std::to_string(v) +
                             " assigned to " + std::to_string(seen[v]) +
                             " slots");
    }
  }
  report.edges = edges_from_slots(n, report.label, report.cliques);
}

}  // namespace

bool slots_joined(LimitLabel label, std::size_t i, std::size_t j) {
  switch (label) {
    case LimitLabel::Complete: return true;
    case LimitLabel::G1: return kG1[i][j];
    case LimitLabel::G2: return kG2[i][j];
    case LimitLabel::G3: return kG3[i][j];
  }
  return false;
}

BoolMatrix edges_from_slots(std::size_t n, LimitLabel label,
                            const std::array<VertexSet, 7>& cliques) {
  BoolMatrix edges(n);
  const std::size_t slots = slot_count(label);
  for (std::size_t i = 0; i < slots; ++i) {
    for (std::size_t j = 0; j < slots; ++j) {
      if (!slots_joined(label, i, j)) continue;
      for (Vertex u : cliques[i])
        for (Vertex v : cliques[j])
          if (u != v) edges.set(u, v);
    }
  }
  return edges;
}

SinkError::SinkError(VertexSet sinks)
    : std::runtime_error([&] {
        std::string msg = "tournament has sinks {";
        for (std::size_t i = 0; i < sinks.size(); ++i)
          msg += (i ? "," : "") + std::to_string(sinks[i]);
        return msg + "}; the last strong component is trivial";
      }()),
      sinks_(std::move(sinks)) {}

LimitReport assemble_bipartite_type(const Tournament& t,
                                    const ComponentStructure& structure,
                                    const AlignedImprimitivity& aligned) {
  const std::size_t s = structure.size();
  const std::size_t kappa = aligned.data.kappa;
  if (s < 2 || (kappa != 2 && kappa != 4))
    throw std::logic_error("assemble_bipartite_type: hypotheses not met");

  const auto& sets = aligned.data.sets;
  const VertexSet& v1 = t.parts()[aligned.part_order[0]];
  const VertexSet& v2 = t.parts()[aligned.part_order[1]];
  const VertexSet both = merge(v1, v2);
  const VertexSet& last = structure.last();

  // t: the largest component index with a vertex outside V_1 u V_2, i.e. a
  // partite set not related to either partite set of Q_s.
  std::size_t cut = 0;
  for (std::size_t i = s - 1; i >= 1; --i) {
    if (!subset(structure.components[i - 1], both)) {
      cut = i;
      break;
    }
  }

  LimitReport report;
  report.trace.kappa = kappa;
  report.trace.s = s;
  report.trace.t = cut;
  report.trace.part_order = aligned.part_order;

  const VertexSet tail = components_range(structure, cut + 1, s);
  const VertexSet a1 = intersect(v1, tail);
  const VertexSet a2 = intersect(v2, tail);
  report.cliques[0] = components_range(structure, 1, cut);
  if (kappa == 2) {
    report.label = LimitLabel::G1;
    report.trace.branch = Branch::Kappa2;
    report.cliques[1] = a1;
    report.cliques[2] = a2;
  } else {
    report.label = LimitLabel::G2;
    report.trace.branch = Branch::Kappa4;
    report.cliques[1] = minus(a1, last);
    report.cliques[2] = minus(a2, last);
    report.cliques[3] = sets[0];
    report.cliques[4] = sets[2];
    report.cliques[5] = sets[1];
    report.cliques[6] = sets[3];
  }
  finish(report, t.size());
  return report;
}

LimitReport assemble_kappa3(const Tournament& t,
                            const ComponentStructure& structure,
                            const AlignedImprimitivity& aligned) {
  const std::size_t s = structure.size();
  if (s < 2 || aligned.data.kappa != 3)
    throw std::logic_error("assemble_kappa3: hypotheses not met");

  const std::size_t n = t.size();
  const VertexSet& last = structure.last();
  const VertexSet& prev = structure.components[s - 2];

  LimitReport report;
  report.label = LimitLabel::G3;
  report.trace.kappa = 3;
  report.trace.s = s;
  report.trace.part_order = aligned.part_order;

  ImprimitivityData last_sets = aligned.data;
  auto place_last = [&](std::size_t first, std::size_t second, std::size_t third) {
    report.cliques[4] = last_sets.sets[first];
    report.cliques[5] = last_sets.sets[second];
    report.cliques[6] = last_sets.sets[third];
  };

  if (prev.size() > 1) {
    const auto prev_sets = kappa_and_sets(t, prev);
    if (const auto shift = unusual_shift(t, prev_sets, last_sets)) {
      // Rotate Q_(s-1) so its U_i shares a partite set with U_i of Q_s.
      const auto p = prev_sets.rotated((3 - *shift) % 3);
      report.trace.branch = Branch::Kappa3Unusual;
      report.cliques[0] = components_range(structure, 1, s - 2);
      report.cliques[1] = p.sets[0];
      report.cliques[2] = p.sets[2];
      report.cliques[3] = p.sets[1];
    } else {
      report.trace.branch = Branch::Kappa3Usual;
      report.cliques[0] = minus(all_vertices(n), last);
    }
    place_last(0, 1, 2);
    finish(report, n);
    return report;
  }

  // Q_(s-1) = {v_(s-1)} is trivial.
  VertexSet related;  // X_1 u X_2 u X_3
  for (std::size_t i = 0; i < 3; ++i)
    related = merge(related, t.parts()[aligned.part_order[i]]);

  std::size_t cut = 0;
  for (std::size_t i = s - 1; i >= 1; --i) {
    if (!subset(structure.components[i - 1], related)) {
      cut = i;
      break;
    }
  }
  report.trace.t = cut;

  if (cut == s - 1) {
    report.trace.branch = Branch::Kappa3AllUnrelated;
    report.cliques[0] = minus(all_vertices(n), last);
    place_last(0, 1, 2);
    finish(report, n);
    return report;
  }

  // Relabel cyclically so that v_(s-1) lies in X_2, the partite set of U_2.
  const Vertex v_prev = prev.front();
  const std::size_t prev_part = t.part_of(v_prev);
  std::size_t j = 0;
  while (j < 3 && aligned.part_order[j] != prev_part) ++j;
  if (j == 3) throw std::logic_error("assemble_kappa3: v_(s-1) outside X_1..X_3");
  const std::size_t rotation = (j + 3 - 1) % 3;
  last_sets = aligned.data.rotated(rotation);
  report.trace.rotation = rotation;
  for (std::size_t i = 0; i < 3; ++i)
    report.trace.part_order[i] = aligned.part_order[(i + rotation) % 3];

  std::array<std::size_t, 3> x_part{};
  for (std::size_t i = 0; i < 3; ++i) x_part[i] = report.trace.part_order[i];
  auto inside = [&](const VertexSet& set, std::size_t i) {
    for (Vertex v : set)
      if (t.part_of(v) != x_part[i]) return false;
    return true;
  };

  const VertexSet run = components_range(structure, cut + 1, s - 1);
  if (inside(run, 1)) {
    report.trace.branch = Branch::Kappa3SinglePart;
    report.cliques[0] = components_range(structure, 1, cut);
    report.cliques[3] = run;
    place_last(0, 1, 2);
    finish(report, n);
    return report;
  }

  std::size_t t1 = 0;
  for (std::size_t i = s - 1; i > cut; --i) {
    if (!inside(structure.components[i - 1], 1)) {
      t1 = i;
      break;
    }
  }
  if (t1 == 0 || t1 == s - 1)
    throw std::logic_error("assemble_kappa3: inconsistent t_1");
  report.trace.t1 = t1;

  const VertexSet& q_t1 = structure.components[t1 - 1];
  if (q_t1.size() > 1 || inside(q_t1, 2)) {
    report.trace.branch = q_t1.size() > 1 ? Branch::Kappa3LastRunNontrivial
                                          : Branch::Kappa3LastRunThirdPart;
    report.cliques[0] = components_range(structure, 1, t1);
    report.cliques[3] = components_range(structure, t1 + 1, s - 1);
    place_last(0, 1, 2);
    finish(report, n);
    return report;
  }
  if (!inside(q_t1, 0))
    throw std::logic_error("assemble_kappa3: v_(t_1) outside X_1 and X_3");

  // t_2: smallest value below t_1 with Q_(t_2+1) .. Q_(t_1) inside X_1.
  std::size_t t2 = t1 - 1;
  while (t2 > 0 && inside(structure.components[t2 - 1], 0)) --t2;
  if (t2 < cut) throw std::logic_error("assemble_kappa3: t_2 below t");
  report.trace.t2 = t2;
  report.trace.branch =
      t2 == cut ? Branch::Kappa3LastRunFirstPart : Branch::Kappa3LastRunDeep;
  report.cliques[0] = components_range(structure, 1, t2);
  report.cliques[2] = components_range(structure, t2 + 1, t1);
  report.cliques[3] = components_range(structure, t1 + 1, s - 1);
  // The X_1 run meets U_1 and U_2 but not U_3, and the X_2 run meets U_2
  // and U_3 but not U_1; in the G3 shape that puts U_2 in the slot joined to
  // both runs.
  place_last(0, 2, 1);
  finish(report, n);
  return report;
}

LimitReport construct_limit(const Tournament& t) {
  if (auto s = sinks(t); !s.empty()) throw SinkError(std::move(s));

  const auto structure = ordered_components(t);
  if (structure.multiple_sinks)
    throw std::logic_error("construct_limit: condensation has several sinks");
  const VertexSet& last = structure.last();
  const auto aligned = align_to_partition(kappa_and_sets(t, last), t);
  const std::size_t kappa = aligned.data.kappa;
  const std::size_t s = structure.size();
  const auto& sets = aligned.data.sets;

  if (kappa == 1) {
    LimitReport report;
    report.label = LimitLabel::Complete;
    report.cliques[0] = all_vertices(t.size());
    report.trace.branch = Branch::Primitive;
    report.trace.s = s;
    report.trace.part_order = aligned.part_order;
    finish(report, t.size());
    return report;
  }

  if (s > 1) {
    return kappa == 3 ? assemble_kappa3(t, structure, aligned)
                      : assemble_bipartite_type(t, structure, aligned);
  }

  // Strongly connected: disjoint cliques on the sets of imprimitivity.
  LimitReport report;
  report.trace.kappa = kappa;
  report.trace.s = 1;
  report.trace.part_order = aligned.part_order;
  switch (kappa) {
    case 2:
      report.label = LimitLabel::G1;
      report.trace.branch = Branch::StrongKappa2;
      report.cliques[1] = sets[0];
      report.cliques[2] = sets[1];
      break;
    case 3:
      report.label = LimitLabel::G3;
      report.trace.branch = Branch::StrongKappa3;
      report.cliques[4] = sets[0];
      report.cliques[5] = sets[1];
      report.cliques[6] = sets[2];
      break;
    case 4:
      report.label = LimitLabel::G2;
      report.trace.branch = Branch::StrongKappa4;
      report.cliques[3] = sets[0];
      report.cliques[4] = sets[2];
      report.cliques[5] = sets[1];
      report.cliques[6] = sets[3];
      break;
    default:
      throw std::logic_error("construct_limit: unexpected kappa " +
                             std::to_string(kappa));
  }
  finish(report, t.size());
  return report;
}

BoolMatrix permute(const BoolMatrix& m, const std::vector<Vertex>& perm) {
  if (perm.size() != m.size())
    throw DimensionError("permute: permutation size mismatch");
  BoolMatrix out(m.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j)
      if (m.get(perm[i], perm[j])) out.set(i, j);
  return out;
}

BoolMatrix block_template(LimitLabel label,
                          const std::vector<std::size_t>& block_sizes) {
  std::vector<std::size_t> slot_at;
  for (std::size_t b = 0; b < block_sizes.size(); ++b)
    slot_at.insert(slot_at.end(), block_sizes[b], b);
  BoolMatrix out(slot_at.size());
  for (std::size_t i = 0; i < slot_at.size(); ++i)
    for (std::size_t j = 0; j < slot_at.size(); ++j)
      if (slots_joined(label, slot_at[i], slot_at[j])) out.set(i, j);
  return out;
}

BlockForm block_form(const LimitReport& report) {
  BlockForm form;
  form.label = report.label;
  switch (report.label) {
    case LimitLabel::Complete: form.template_name = "J"; break;
    case LimitLabel::G1: form.template_name = "M1"; break;
    case LimitLabel::G2: form.template_name = "M2"; break;
    case LimitLabel::G3: form.template_name = "M3"; break;
  }
  const std::size_t slots = slot_count(report.label);
  for (std::size_t i = 0; i < slots; ++i) {
    form.block_sizes.push_back(report.cliques[i].size());
    form.permutation.insert(form.permutation.end(), report.cliques[i].begin(),
                            report.cliques[i].end());
  }
  const std::size_t n = report.edges.size();
  if (form.permutation.size() != n)
    throw std::logic_error("block_form: slots do not cover the vertex set");

  BoolMatrix with_loops = report.edges;
  for (std::size_t i = 0; i < n; ++i) with_loops.set(i, i);
  if (permute(with_loops, form.permutation) !=
      block_template(report.label, form.block_sizes)) {
    throw std::logic_error("block_form: edges do not match template " +
                           form.template_name);
  }
  return form;
}

Verdict verify_against_oracle(const Tournament& t) {
  Verdict verdict;
  verdict.profile = competition_profile(t.arcs());

  if (!sinks(t).empty()) {
    try {
      (void)construct_limit(t);
      verdict.kind = Verdict::Kind::Inconsistent;
    } catch (const SinkError&) {
      verdict.kind = Verdict::Kind::RefusedWithSinks;
    }
    return verdict;
  }

  LimitReport report = construct_limit(t);
  report.cindex = verdict.profile.cindex;
  report.cperiod = verdict.profile.cperiod;
  verdict.kind = Verdict::Kind::Equal;
  if (!verdict.profile.limit) {
    verdict.kind = Verdict::Kind::Mismatch;
  } else {
    const BoolMatrix oracle = zero_diagonal(*verdict.profile.limit);
    for (Vertex u = 0; u < t.size(); ++u) {
      for (Vertex v = u + 1; v < t.size(); ++v) {
        const bool want = oracle.get(u, v);
        const bool got = report.edges.get(u, v);
        if (want && !got) verdict.missing.emplace_back(u, v);
        if (got && !want) verdict.extra.emplace_back(u, v);
      }
    }
    if (!verdict.missing.empty() || !verdict.extra.empty() ||
        oracle != report.edges)
      verdict.kind = Verdict::Kind::Mismatch;
  }
  verdict.report = std::move(report);
  return verdict;
}

}  // namespace mstep
