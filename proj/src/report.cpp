#include "mstep/report.hpp"

#include <sstream>

namespace mstep {

Analysis analyze(const Tournament& t) {
  Analysis a;
  a.n = t.size();
  a.parts = t.parts();
  a.sinks = sinks(t);
  const auto cs = ordered_components(t);
  a.components = cs.components;
  a.multiple_sinks = cs.multiple_sinks;
  if (!cs.is_trivial(cs.size() - 1)) a.last = kappa_and_sets(t, cs.last());
  a.profile = competition_profile(t.arcs());
  return a;
}

std::string format_set(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i)
    out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

nlohmann::json profile_json(const CompetitionProfile& p) {
  nlohmann::json j = {{"kind", "profile"},
                      {"cindex", p.cindex},
                      {"cperiod", p.cperiod},
                      {"power_index", p.powers.index},
                      {"power_period", p.powers.period},
                      {"limit_exists", p.limit.has_value()}};
  if (p.limit) j["limit"] = p.limit->to_rows();
  return j;
}

std::string profile_text(const CompetitionProfile& p) {
  std::ostringstream out;
  out << "cindex: " << p.cindex << "\n"
      << "cperiod: " << p.cperiod << "\n"
      << "power cycle: index " << p.powers.index << ", period "
      << p.powers.period << "\n";
  if (p.limit) {
    out << "limit (B_q):\n";
    for (const auto& row : p.limit->to_rows()) out << "  " << row << "\n";
  } else {
    out << "limit: none (period " << p.cperiod << ")\n";
  }
  return out.str();
}

nlohmann::json analysis_json(const Analysis& a) {
  nlohmann::json j = {{"kind", "analysis"},
                      {"n", a.n},
                      {"parts", a.parts},
                      {"sinks", a.sinks},
                      {"components", a.components},
                      {"s", a.components.size()},
                      {"multiple_sinks", a.multiple_sinks},
                      {"cindex", a.profile.cindex},
                      {"cperiod", a.profile.cperiod},
                      {"limit_exists", a.profile.limit.has_value()}};
  if (a.last) {
    j["kappa"] = a.last->kappa;
    j["u_sets"] = a.last->sets;
  } else {
    j["kappa"] = nullptr;
    j["u_sets"] = nlohmann::json::array();
  }
  return j;
}

std::string analysis_text(const Analysis& a) {
  std::ostringstream out;
  out << "vertices: " << a.n << "\n";
  out << "partite sets (" << a.parts.size() << "):";
  for (const auto& p : a.parts) out << " " << format_set(p);
  out << "\n";
  out << "sinks: " << (a.sinks.empty() ? "none" : format_set(a.sinks)) << "\n";
  out << "strong components (s = " << a.components.size() << "):\n";
  for (std::size_t i = 0; i < a.components.size(); ++i)
    out << "  Q" << i + 1 << " " << format_set(a.components[i]) << "\n";
  if (a.multiple_sinks) out << "  (several sink components; order among them is by smallest id)\n";
  if (a.last) {
    out << "kappa(Q_s): " << a.last->kappa << "\n";
    for (std::size_t i = 0; i < a.last->sets.size(); ++i)
      out << "  U" << i + 1 << " " << format_set(a.last->sets[i]) << "\n";
  } else {
    out << "kappa(Q_s): undefined (Q_s is trivial)\n";
  }
  out << profile_text(a.profile);
  return out.str();
}

std::string slot_name(std::size_t i) { return "K" + std::to_string(i + 1); }

nlohmann::json trace_json(const ConstructionTrace& trace) {
  auto opt = [](const std::optional<std::size_t>& x) -> nlohmann::json {
    if (x) return *x;
    return nullptr;
  };
  return {{"branch", to_string(trace.branch)},
          {"kappa", trace.kappa},
          {"s", trace.s},
          {"t", opt(trace.t)},
          {"t1", opt(trace.t1)},
          {"t2", opt(trace.t2)},
          {"part_order", trace.part_order},
          {"rotation", trace.rotation}};
}

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const BoolMatrix& edges) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < edges.size(); ++u)
    for (Vertex v = u + 1; v < edges.size(); ++v)
      if (edges.get(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace

nlohmann::json limit_json(const LimitReport& report, const BlockForm& form,
                          const std::optional<BoolMatrix>& limit, bool trace) {
  nlohmann::json cliques = nlohmann::json::object();
  for (std::size_t i = 0; i < slot_count(report.label); ++i)
    if (!report.cliques[i].empty()) cliques[slot_name(i)] = report.cliques[i];
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : edge_pairs(report.edges)) edges.push_back({u, v});

  nlohmann::json j = {{"kind", "limit"},
                      {"n", report.edges.size()},
                      {"label", to_string(report.label)},
                      {"cliques", cliques},
                      {"edges", edges},
                      {"permutation", form.permutation},
                      {"template", form.template_name},
                      {"block_sizes", form.block_sizes}};
  j["cindex"] = report.cindex ? nlohmann::json(*report.cindex) : nlohmann::json(nullptr);
  j["cperiod"] = report.cperiod ? nlohmann::json(*report.cperiod) : nlohmann::json(nullptr);
  if (limit) j["limit"] = limit->to_rows();
  if (trace) j["trace"] = trace_json(report.trace);
  return j;
}

std::string limit_text(const LimitReport& report, const BlockForm& form,
                       const std::optional<BoolMatrix>& limit, bool trace) {
  std::ostringstream out;
  out << "label: " << to_string(report.label) << "\n";
  out << "template: " << form.template_name << "\n";
  out << "slots:\n";
  for (std::size_t i = 0; i < slot_count(report.label); ++i) {
    out << "  " << slot_name(i) << ": ";
    if (report.cliques[i].empty())
      out << "absent";
    else
      out << format_set(report.cliques[i]);
    out << "\n";
  }
  if (report.cindex) out << "cindex: " << *report.cindex << "\n";
  if (report.cperiod) out << "cperiod: " << *report.cperiod << "\n";
  const auto pairs = edge_pairs(report.edges);
  out << "edges (" << pairs.size() << "):";
  for (const auto& [u, v] : pairs) out << " " << u << "-" << v;
  out << "\n";
  out << "vertex order:";
  for (Vertex v : form.permutation) out << " " << v;
  out << "\n";
  if (limit) {
    out << "limit (B_q):\n";
    for (const auto& row : limit->to_rows()) out << "  " << row << "\n";
  }
  if (trace) {
    const auto& tr = report.trace;
    auto opt = [](const std::optional<std::size_t>& x) {
      return x ? std::to_string(*x) : std::string("-");
    };
    out << "trace: branch " << to_string(tr.branch) << ", kappa " << tr.kappa
        << ", s " << tr.s << ", t " << opt(tr.t) << ", t1 " << opt(tr.t1)
        << ", t2 " << opt(tr.t2) << ", rotation " << tr.rotation
        << ", part order";
    for (std::size_t p : tr.part_order) out << " " << p;
    out << "\n";
  }
  return out.str();
}

std::string limit_dot(const LimitReport& report) {
  std::ostringstream out;
  out << "graph limit {\n";
  out << "  label=\"" << to_string(report.label) << "\";\n";
  for (std::size_t i = 0; i < slot_count(report.label); ++i) {
    if (report.cliques[i].empty()) continue;
    out << "  subgraph cluster_" << slot_name(i) << " {\n";
    out << "    label=\"" << slot_name(i) << "\";\n";
    for (Vertex v : report.cliques[i]) out << "    v" << v << " [label=\"" << v << "\"];\n";
    out << "  }\n";
  }
  for (const auto& [u, v] : edge_pairs(report.edges))
    out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mstep
