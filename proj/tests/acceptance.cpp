// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "mstep/boolmat.hpp"
#include "mstep/cli.hpp"
#include "mstep/gen.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/limits.hpp"

using namespace mstep;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool equivalence_holds(const BoolMatrix& a) {
  const PowerSequence seq(a, 0);
  const std::size_t top = seq.cycle().index + seq.cycle().period;
  std::vector<BoolMatrix> b;
  for (std::size_t m = 1; m <= top; ++m) b.push_back(seq.competition(m));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if ((zero_diagonal(b[i]) == zero_diagonal(b[j])) != (b[i] == b[j])) return false;
  return true;
}

Tournament strong_sample(std::size_t k, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < k; ++i) sizes.push_back(k == 2 ? 2 + rng() % 4 : 1 + rng() % 3);
    try {
      return random_constrained({sizes, rng(), Constraint::Strong, 0, 1}, 2000);
    } catch (const GenerationFailure&) {
    }
  }
}

Outcome figure1_reproduction() {
  const auto t0 = Clock::now();
  Outcome o;
  const Tournament t = figure1();
  const BoolMatrix printed = BoolMatrix::from_rows(
      {"111111", "111000", "111000", "100100", "100010", "100001"});
  std::size_t bad_m = 0;
  for (std::size_t m = 1; m <= 8; ++m)
    if (competition_matrix(t.arcs(), m) != printed) ++bad_m;

  const ImprimitivityData d = kappa_and_sets(t, ordered_components(t).last());
  const std::vector<VertexSet> listed{{1, 2}, {5}, {3}, {4}};
  bool sets_ok = false;
  for (std::size_t r = 0; r < d.kappa && d.kappa == 4; ++r)
    sets_ok = sets_ok || d.rotated(r).sets == listed;

  const LimitReport report = construct_limit(t);
  const BlockForm form = block_form(report);
  const bool form_ok = form.template_name == "M2" && form.block_sizes.size() == 7 &&
                       form.block_sizes[1] == 0 && form.block_sizes[2] == 0 &&
                       form.block_sizes[0] == 1 && form.block_sizes[3] == 2;
  const double secs = seconds_since(t0);
  o.pass = bad_m == 0 && sets_ok && form_ok && secs < 1.0;
  std::ostringstream s;
  s << "B_m = printed matrix for m=1..8: " << (bad_m == 0 ? "yes" : "no")
    << "; kappa(Q_2)=" << d.kappa << " sets " << (sets_ok ? "match" : "differ")
    << "; block form " << form.template_name << (form_ok ? " with J2,J3 absent" : " (wrong)")
    << "; " << secs << " s";
  o.detail = s.str();
  return o;
}

Outcome oracle_equivalence() {
  GridConfig grid;
  grid.count = 10000;
  grid.seed = 1;
  const Campaign c = run_campaign(grid);
  const auto& s = c.summary;
  std::size_t max_n = 0;
  bool k_ok = true;
  for (const auto& r : c.results) {
    max_n = std::max(max_n, r.n);
    k_ok = k_ok && r.k >= 2 && r.k <= 5;
  }
  std::size_t unfired = 0;
  std::ostringstream cov;
  for (std::size_t b = 0; b < s.branches.size(); ++b) {
    if (s.branches[b] == 0) ++unfired;
    cov << (b ? " " : "") << to_string(static_cast<Branch>(b)) << "=" << s.branches[b];
  }
  Outcome o;
  o.pass = s.equal == grid.count && s.ok() && unfired == 0 && max_n <= 12 && k_ok &&
           c.seconds < 60.0;
  std::ostringstream d;
  d << s.equal << "/" << grid.count << " equal, " << s.mismatch << " mismatches, max n "
    << max_n << ", " << unfired << " branches never fired, " << c.seconds << " s\n"
    << "      coverage: " << cov.str();
  o.detail = d.str();
  return o;
}

Outcome period_bound() {
  GridConfig grid;
  grid.count = 10000;
  grid.seed = 3;
  grid.constraint = Constraint::None;
  const Campaign c = run_campaign(grid);
  const auto& s = c.summary;
  std::size_t bad = 0, bipartite = 0;
  for (const auto& r : c.results) {
    if (!r.generated || !r.error.empty()) ++bad;
    if (r.cperiod > 3 || (r.k == 2 && r.cperiod > 2)) ++bad;
    if (r.k == 2) ++bipartite;
  }
  Outcome o;
  o.pass = bad == 0 && s.total == grid.count;
  std::ostringstream d;
  d << s.total << " instances (" << s.refused << " with sinks, " << bipartite
    << " bipartite): max cperiod " << s.max_cperiod << ", bipartite max "
    << s.max_cperiod_bipartite << ", violations " << bad;
  o.detail = d.str();
  return o;
}

Outcome kappa_table() {
  std::mt19937_64 rng(4);
  std::size_t bad = 0;
  std::ostringstream d;
  for (std::size_t k = 2; k <= 5; ++k) {
    std::array<std::size_t, 5> seen{};
    for (int rep = 0; rep < 1000; ++rep) {
      const Tournament t = strong_sample(k, rng);
      const std::size_t kappa = kappa_and_sets(t, ordered_components(t).last()).kappa;
      if (kappa < seen.size()) ++seen[kappa];
      const bool ok = k == 2 ? (kappa == 2 || kappa == 4)
                    : k == 3 ? (kappa == 1 || kappa == 3)
                             : kappa == 1;
      if (!ok) ++bad;
    }
    d << "k=" << k << ":";
    for (std::size_t v = 1; v < seen.size(); ++v)
      if (seen[v]) d << " kappa" << v << "x" << seen[v];
    d << "; ";
  }
  d << "exceptions " << bad;
  return {bad == 0, d.str()};
}

Outcome sinks_and_monotonicity() {
  GridConfig grid;
  grid.constraint = Constraint::None;
  grid.seed = 5;
  std::size_t sink_bad = 0, mono_bad = 0, sink_free = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const Tournament t = *grid_instance(grid, i).tournament;
    const ComponentStructure s = ordered_components(t);
    const bool no_sinks = sinks(t).empty();
    if (no_sinks != !s.is_trivial(s.size() - 1)) ++sink_bad;
    if (!no_sinks) continue;
    ++sink_free;
    const PowerSequence seq(t.arcs(), 0);
    const std::size_t top = seq.cycle().index + seq.cycle().period;
    for (std::size_t m = 1; m < top; ++m)
      if (!zero_diagonal(seq.competition(m)).is_subset_of(zero_diagonal(seq.competition(m + 1)))) {
        ++mono_bad;
        break;
      }
  }
  std::ostringstream d;
  d << "1000 instances: sinks-vs-trivial-Q_s disagreements " << sink_bad << "; "
    << sink_free << " sink-free, non-monotone " << mono_bad;
  return {sink_bad == 0 && mono_bad == 0, d.str()};
}

Outcome eq1_equivalence(std::string& supplement) {
  GridConfig grid;
  grid.constraint = Constraint::None;
  grid.seed = 6;
  std::size_t bad = 0, bad_sinks = 0, with_sinks = 0, sink_free_bad = 0, sink_free = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const Tournament t = *grid_instance(grid, i).tournament;
    const bool has_sinks = !sinks(t).empty();
    with_sinks += has_sinks;
    const bool ok = equivalence_holds(t.arcs());
    if (!ok) {
      ++bad;
      bad_sinks += has_sinks;
    }
  }
  // The same statement restricted to sink-free tournaments.
  GridConfig sf;
  sf.seed = 6;
  for (std::size_t i = 0; i < 500; ++i) {
    const Tournament t = *grid_instance(sf, i).tournament;
    ++sink_free;
    if (!equivalence_holds(t.arcs())) ++sink_free_bad;
  }
  std::ostringstream d;
  d << "500 generated tournaments (" << with_sinks << " with sinks): " << bad
    << " violate it, " << bad_sinks << " of them with sinks";
  std::ostringstream sup;
  sup << "sink-free only: " << sink_free << " instances, " << sink_free_bad << " violations";
  supplement = sup.str();
  return {bad == 0, d.str()};
}

Outcome strong_limits() {
  std::mt19937_64 rng(7);
  std::size_t bad = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const Tournament t = strong_sample(2 + rng() % 4, rng);
    std::vector<Vertex> all(t.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    const ImprimitivityData d = kappa_and_sets(t, all);
    BoolMatrix cliques(t.size());
    for (Vertex u : all)
      for (Vertex v : all)
        if (u != v && d.index_of(u) == d.index_of(v)) cliques.set(u, v);
    const CompetitionProfile p = competition_profile(t.arcs());
    const LimitReport r = construct_limit(t);
    if (!p.limit || zero_diagonal(*p.limit) != cliques || r.edges != cliques) ++bad;
  }
  std::ostringstream d;
  d << "500 strong samples, k=2..5: " << bad << " differ from the cliques on U_1..U_kappa";
  return {bad == 0, d.str()};
}

Outcome kernel() {
  std::mt19937_64 rng(8);
  std::size_t bad = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 1 + rng() % 64;
    const unsigned density = 5 + rng() % 90;
    BoolMatrix a(n), b(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() % 100 < density) a.set(i, j);
        if (rng() % 100 < density) b.set(i, j);
      }
    if (multiply(a, b) != multiply_naive(a, b)) ++bad;
  }
  return {bad == 0, "1000 random pairs, n=1..64: " + std::to_string(bad) + " differ"};
}

}  // namespace

int main() {
  std::size_t failures = 0;
  auto report = [&](const char* id, const char* name, const std::function<Outcome()>& f) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s  %s (%.2f s)\n      %s\n", id, o.pass ? "PASS" : "FAIL", name,
                seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  };

  std::string supplement;
  report("AC1", "six-vertex example", figure1_reproduction);
  report("AC2", "oracle-constructor equivalence", oracle_equivalence);
  report("AC3", "competition period bound", period_bound);
  report("AC4", "kappa by number of partite sets", kappa_table);
  report("AC5", "sinks vs trivial Q_s, monotone B_m", sinks_and_monotonicity);
  report("AC6", "zero-diagonal equivalence", [&] { return eq1_equivalence(supplement); });
  std::printf("      %s\n", supplement.c_str());
  report("AC7", "strong limits are cliques on U-sets", strong_limits);
  report("AC8", "bit-parallel kernel", kernel);

  std::printf("%zu of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
