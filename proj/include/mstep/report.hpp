#pragma once

// Text, JSON and DOT renderings of analysis and limit reports.  Every JSON
// object carries a "kind" field; docs/report.schema.json describes them all.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mstep/boolmat.hpp"
#include "mstep/digraph.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/limits.hpp"

namespace mstep {

/// The structural quantities of a tournament that precede any limit.
struct Analysis {
  std::size_t n = 0;
  std::vector<VertexSet> parts;
  VertexSet sinks;
  std::vector<VertexSet> components;  // Q_1..Q_s
  bool multiple_sinks = false;
  // Present when Q_s is nontrivial.
  std::optional<ImprimitivityData> last;
  CompetitionProfile profile;
};

Analysis analyze(const Tournament& t);

nlohmann::json analysis_json(const Analysis& a);
std::string analysis_text(const Analysis& a);

nlohmann::json profile_json(const CompetitionProfile& p);
std::string profile_text(const CompetitionProfile& p);

/// Slot name for the 0-based index i: "K1".."K7".
std::string slot_name(std::size_t i);

/// JSON for a limit report and its block form.  limit, when given, is the
/// oracle's B_q written as rows of '0'/'1'.
nlohmann::json limit_json(const LimitReport& report, const BlockForm& form,
                          const std::optional<BoolMatrix>& limit, bool trace);
std::string limit_text(const LimitReport& report, const BlockForm& form,
                       const std::optional<BoolMatrix>& limit, bool trace);
/// Undirected limit graph with one cluster per present slot.
std::string limit_dot(const LimitReport& report);

nlohmann::json trace_json(const ConstructionTrace& trace);

std::string format_set(const VertexSet& set);

}  // namespace mstep
