#pragma once

// Command-line front end and the seeded verification campaigns it runs.
//
// Exit codes: 0 success, 1 usage or parse error, 2 validation error,
// 3 refusal because the tournament has sinks, 4 verification mismatch.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mstep/gen.hpp"
#include "mstep/limits.hpp"

namespace mstep {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitSinks = 3,
  kExitMismatch = 4,
};

/// A seeded family of instances.  Instance i is a pure function of the
/// config and i, so campaigns can be split across threads.
struct GridConfig {
  std::size_t count = 10000;
  std::uint64_t seed = 1;
  // Fixed partition sizes; empty draws a random shape per instance.
  std::vector<std::size_t> sizes;
  std::size_t k_min = 2;
  std::size_t k_max = 5;
  std::size_t max_n = 12;
  std::size_t max_layers = 3;
  Constraint constraint = Constraint::SinkFree;
  std::size_t kappa = 0;
  // Mix in two-component kappa-3 blow-ups (about one instance in sixteen)
  // so the unusual and usual kappa-3 branches are exercised.
  bool structured = true;
  std::size_t max_tries = 200;
};

struct GridInstance {
  GenSpec spec;
  std::string origin;  // "random" or "kappa3-pair"
  std::optional<Tournament> tournament;  // empty if generation failed
  std::string failure;
};

GridInstance grid_instance(const GridConfig& config, std::size_t index);

struct InstanceResult {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string origin;
  bool generated = false;
  Verdict::Kind kind = Verdict::Kind::Equal;
  std::size_t cindex = 0;
  std::size_t cperiod = 0;
  std::optional<Branch> branch;
  std::string error;  // resource limit or internal error
};

struct CampaignSummary {
  std::size_t total = 0;
  std::size_t equal = 0;
  std::size_t mismatch = 0;
  std::size_t refused = 0;
  std::size_t inconsistent = 0;
  std::size_t errors = 0;
  std::size_t gen_failures = 0;
  std::size_t max_cperiod = 0;
  std::size_t max_cperiod_bipartite = 0;
  // Expected bound: cperiod <= 3, and <= 2 for k = 2.
  std::size_t period_violations = 0;
  std::vector<std::size_t> cperiod_histogram;  // index = cperiod
  BranchCounters branches{};
  std::optional<std::size_t> first_failure;

  bool ok() const {
    return mismatch == 0 && inconsistent == 0 && errors == 0 &&
           period_violations == 0;
  }
};

struct Campaign {
  std::vector<InstanceResult> results;  // by instance index
  CampaignSummary summary;
  double seconds = 0;
};

/// Runs verify_against_oracle over the grid with a pool of worker threads
/// (0 selects the hardware concurrency).  Deterministic apart from timing.
Campaign run_campaign(const GridConfig& config, std::size_t threads = 0);

nlohmann::json campaign_json(const GridConfig& config, const Campaign& c);

/// Parses "2,3,2" (commas or spaces).
std::vector<std::size_t> parse_sizes(const std::string& text);

/// Entry point used by the executable and the tests.  args excludes the
/// program name.  "-" as an input path reads from in.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace mstep
