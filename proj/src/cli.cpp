#include "mstep/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mstep/io.hpp"
#include "mstep/report.hpp"

namespace mstep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t below(std::mt19937_64& rng, std::size_t bound) { return rng() % bound; }

bool pairs_allowed(const GridConfig& c) {
  return c.structured && c.sizes.empty() && c.k_min <= 3 && 3 <= c.k_max &&
         c.max_n >= 6 &&
         (c.constraint == Constraint::None || c.constraint == Constraint::SinkFree);
}

}  // namespace

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::istringstream words(tok);
    std::string w;
    while (words >> w) {
      if (w.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad size '" + w + "'");
      sizes.push_back(std::stoul(w));
    }
  }
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  return sizes;
}

GridInstance grid_instance(const GridConfig& c, std::size_t index) {
  GridInstance g;
  std::mt19937_64 rng(derive_seed(c.seed, index));
  const std::size_t k_max = std::min(c.k_max, c.max_n);
  if (c.sizes.empty() && (c.k_min < 2 || c.k_min > k_max))
    throw std::invalid_argument("grid: no admissible number of partite sets");

  for (int attempt = 0; attempt < 64; ++attempt) {
    if (pairs_allowed(c) && below(rng, 16) == 0) {
      std::array<std::size_t, 3> prev{}, last{};
      for (auto& x : prev) x = 1 + below(rng, 2);
      for (auto& x : last) x = 1 + below(rng, 2);
      std::array<std::size_t, 3> perm{0, 1, 2};
      for (std::size_t r = below(rng, 6); r > 0; --r)
        std::next_permutation(perm.begin(), perm.end());
      const std::uint64_t seed = rng();
      g.spec = GenSpec{{prev[0], prev[1], prev[2], last[0], last[1], last[2]},
                       seed, c.constraint, 0, 1};
      g.origin = "kappa3-pair";
      g.tournament = make_kappa3_pair(prev, last, perm, seed);
      g.failure.clear();
      return g;
    }

    std::vector<std::size_t> sizes = c.sizes;
    if (sizes.empty()) {
      const std::size_t k = c.k_min + below(rng, k_max - c.k_min + 1);
      const std::size_t n = k + below(rng, c.max_n - k + 1);
      sizes.assign(k, 1);
      for (std::size_t extra = n - k; extra > 0; --extra) ++sizes[below(rng, k)];
    }
    const std::size_t layers = 1 + below(rng, std::max<std::size_t>(c.max_layers, 1));
    g.spec = GenSpec{sizes, rng(), c.constraint, c.kappa, layers};
    g.origin = "random";
    try {
      if (c.constraint == Constraint::None)
        g.tournament = random_tournament(g.spec);
      else
        g.tournament = random_constrained(g.spec, c.max_tries);
      g.failure.clear();
      return g;
    } catch (const GenerationFailure& e) {
      g.failure = e.what();
    }
  }
  return g;
}

Campaign run_campaign(const GridConfig& config, std::size_t threads) {
  const auto start = Clock::now();
  Campaign campaign;
  campaign.results.resize(config.count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(config.count, 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) {
      InstanceResult r;
      r.index = i;
      try {
        GridInstance g = grid_instance(config, i);
        r.origin = g.origin;
        r.k = g.origin == "kappa3-pair" ? 3 : g.spec.part_sizes.size();
        if (!g.tournament) {
          r.error = g.failure;
        } else {
          r.generated = true;
          r.n = g.tournament->size();
          r.k = g.tournament->part_count();
          const Verdict v = verify_against_oracle(*g.tournament);
          r.kind = v.kind;
          r.cindex = v.profile.cindex;
          r.cperiod = v.profile.cperiod;
          if (v.report) r.branch = v.report->trace.branch;
        }
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      campaign.results[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  auto& s = campaign.summary;
  for (const auto& r : campaign.results) {
    ++s.total;
    bool failed = false;
    if (!r.generated) {
      if (r.error.empty() || r.origin.empty()) {
        ++s.errors;
        failed = true;
      } else {
        ++s.gen_failures;
      }
    } else if (!r.error.empty()) {
      ++s.errors;
      failed = true;
    } else {
      switch (r.kind) {
        case Verdict::Kind::Equal: ++s.equal; break;
        case Verdict::Kind::RefusedWithSinks: ++s.refused; break;
        case Verdict::Kind::Mismatch: ++s.mismatch; failed = true; break;
        case Verdict::Kind::Inconsistent: ++s.inconsistent; failed = true; break;
      }
      if (r.branch) ++s.branches[static_cast<std::size_t>(*r.branch)];
      if (s.cperiod_histogram.size() <= r.cperiod) s.cperiod_histogram.resize(r.cperiod + 1);
      ++s.cperiod_histogram[r.cperiod];
      s.max_cperiod = std::max(s.max_cperiod, r.cperiod);
      if (r.k == 2) s.max_cperiod_bipartite = std::max(s.max_cperiod_bipartite, r.cperiod);
      if (r.cperiod > 3 || (r.k == 2 && r.cperiod > 2)) {
        ++s.period_violations;
        failed = true;
      }
    }
    if (failed && !s.first_failure) s.first_failure = r.index;
  }
  campaign.seconds = seconds_since(start);
  return campaign;
}

nlohmann::json campaign_json(const GridConfig& config, const Campaign& c) {
  const auto& s = c.summary;
  nlohmann::json branches = nlohmann::json::object();
  for (std::size_t b = 0; b < s.branches.size(); ++b)
    branches[to_string(static_cast<Branch>(b))] = s.branches[b];
  nlohmann::json j = {
      {"kind", "verify"},
      {"count", config.count},
      {"seed", config.seed},
      {"constraint", to_string(config.constraint)},
      {"max_n", config.max_n},
      {"k_min", config.k_min},
      {"k_max", config.k_max},
      {"equal", s.equal},
      {"mismatch", s.mismatch},
      {"refused_with_sinks", s.refused},
      {"inconsistent", s.inconsistent},
      {"errors", s.errors},
      {"generation_failures", s.gen_failures},
      {"max_cperiod", s.max_cperiod},
      {"max_cperiod_bipartite", s.max_cperiod_bipartite},
      {"period_violations", s.period_violations},
      {"cperiod_histogram", s.cperiod_histogram},
      {"branches", branches},
      {"ok", s.ok()},
      {"seconds", c.seconds}};
  if (!config.sizes.empty()) j["sizes"] = config.sizes;
  j["first_failure"] = s.first_failure ? nlohmann::json(*s.first_failure) : nlohmann::json(nullptr);
  return j;
}

namespace {

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

Tournament read_tournament(const InputOptions& o, std::istream& in) {
  std::string text;
  if (o.path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = read_file(o.path);
  }
  const InputFormat f = o.format == "auto" ? detect_format(text) : parse_input_format(o.format);
  return load_tournament(text, f);
}

void add_input(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("input", o.path, "Input file, or - for stdin")->required();
  cmd->add_option("--input-format", o.format, "Input format")
      ->check(CLI::IsMember({"auto", "matrix", "edges", "json"}));
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

int cmd_analyze(const InputOptions& input, const std::string& format,
                std::istream& in, std::ostream& out) {
  const Tournament t = read_tournament(input, in);
  const Analysis a = analyze(t);
  if (format == "json")
    print_json(out, analysis_json(a));
  else
    out << analysis_text(a);
  return kExitOk;
}

int cmd_limit(const InputOptions& input, const std::string& format,
              bool oracle_only, bool trace, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const Tournament t = read_tournament(input, in);
  if (oracle_only) {
    if (format == "dot") {
      err << "error: --format dot needs the structural constructor\n";
      return kExitUsage;
    }
    const CompetitionProfile p = competition_profile(t.arcs());
    if (format == "json")
      print_json(out, profile_json(p));
    else
      out << profile_text(p);
    return kExitOk;
  }

  const Verdict v = verify_against_oracle(t);
  if (v.kind == Verdict::Kind::RefusedWithSinks) {
    err << "refused: the tournament has sinks " << format_set(sinks(t))
        << ", so its competition graphs need not converge; oracle profile follows\n";
    if (format == "json") {
      auto j = profile_json(v.profile);
      j["refused"] = true;
      j["sinks"] = sinks(t);
      print_json(out, j);
    } else {
      out << profile_text(v.profile);
    }
    return kExitSinks;
  }
  if (v.kind != Verdict::Kind::Equal) {
    err << "mismatch: constructor and oracle disagree (" << to_string(v.kind) << ")";
    for (const auto& [a, b] : v.missing) err << " missing " << a << "-" << b;
    for (const auto& [a, b] : v.extra) err << " extra " << a << "-" << b;
    err << "\n";
    return kExitMismatch;
  }

  const LimitReport& report = *v.report;
  BlockForm form;
  try {
    form = block_form(report);
  } catch (const std::logic_error& e) {
    err << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  }
  if (format == "json")
    print_json(out, limit_json(report, form, v.profile.limit, trace));
  else if (format == "dot")
    out << limit_dot(report);
  else
    out << limit_text(report, form, v.profile.limit, trace);
  return kExitOk;
}

void dump_instance(const GridConfig& config, std::size_t index, const Campaign& c,
                   const std::string& path, std::ostream& err) {
  const GridInstance g = grid_instance(config, index);
  std::ofstream file(path);
  if (!file) {
    err << "warning: cannot write " << path << "\n";
    return;
  }
  const auto& r = c.results[index];
  file << "# instance " << index << " (" << g.origin << "), seed " << g.spec.seed << "\n";
  file << "# verdict " << to_string(r.kind) << ", cperiod " << r.cperiod;
  if (!r.error.empty()) file << ", error: " << r.error;
  file << "\n";
  if (g.tournament) file << format_edge_list(*g.tournament);
  err << "first counterexample written to " << path << "\n";
}

int cmd_verify(const GridConfig& config, std::size_t threads, const std::string& format,
               bool trace, const std::string& dump, std::ostream& out,
               std::ostream& err) {
  const Campaign c = run_campaign(config, threads);
  const auto& s = c.summary;
  if (format == "json") {
    print_json(out, campaign_json(config, c));
  } else {
    out << "instances: " << s.total << " (constraint " << to_string(config.constraint) << ")\n";
    out << "equal: " << s.equal << "\n";
    out << "mismatch: " << s.mismatch << "\n";
    out << "refused (sinks): " << s.refused << "\n";
    out << "inconsistent: " << s.inconsistent << "\n";
    out << "errors: " << s.errors << "\n";
    out << "generation failures: " << s.gen_failures << "\n";
    out << "max cperiod: " << s.max_cperiod << " (bipartite: " << s.max_cperiod_bipartite << ")\n";
    out << "period bound violations: " << s.period_violations << "\n";
    out << "cperiod histogram:";
    for (std::size_t p = 1; p < s.cperiod_histogram.size(); ++p)
      out << " " << p << ":" << s.cperiod_histogram[p];
    out << "\n";
    if (trace) {
      out << "branch counters:\n";
      for (std::size_t b = 0; b < s.branches.size(); ++b)
        out << "  " << std::left << std::setw(32) << to_string(static_cast<Branch>(b))
            << s.branches[b] << "\n";
    }
    out << std::fixed << std::setprecision(2) << "time: " << c.seconds << " s\n";
    out << (s.ok() ? "PASS" : "FAIL") << "\n";
  }
  if (s.first_failure && !dump.empty()) dump_instance(config, *s.first_failure, c, dump, err);
  return s.ok() ? kExitOk : kExitMismatch;
}

int cmd_gen(const GenSpec& spec, std::size_t max_tries, const std::string& format,
            std::ostream& out) {
  const Tournament t = spec.constraint == Constraint::None
                           ? random_tournament(spec)
                           : random_constrained(spec, max_tries);
  if (format == "json") {
    auto j = tournament_to_json(t);
    j["kind"] = "tournament";
    print_json(out, j);
  } else if (format == "matrix") {
    out << format_matrix(t.arcs());
  } else {
    out << format_edge_list(t);
  }
  return kExitOk;
}

BoolMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() >> 63) m.set(i, j);
  return m;
}

int cmd_bench(const std::vector<std::size_t>& mult_sizes,
              const std::vector<std::size_t>& limit_sizes, std::size_t count,
              std::size_t reps, std::uint64_t seed, const std::string& format,
              std::ostream& out) {
  nlohmann::json mult = nlohmann::json::array();
  for (std::size_t n : mult_sizes) {
    std::mt19937_64 rng(derive_seed(seed, n));
    const BoolMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
    BoolMatrix fast(n), slow(n);
    auto t0 = Clock::now();
    for (std::size_t r = 0; r < reps; ++r) fast = multiply(a, b);
    const double fast_s = seconds_since(t0);
    t0 = Clock::now();
    for (std::size_t r = 0; r < reps; ++r) slow = multiply_naive(a, b);
    const double slow_s = seconds_since(t0);
    mult.push_back({{"n", n},
                    {"reps", reps},
                    {"bitparallel_ms", 1000 * fast_s / reps},
                    {"naive_ms", 1000 * slow_s / reps},
                    {"speedup", fast_s > 0 ? slow_s / fast_s : 0.0},
                    {"agree", fast == slow}});
  }

  nlohmann::json lim = nlohmann::json::array();
  for (std::size_t n : limit_sizes) {
    const std::size_t k = n >= 8 ? 4 : 2;
    std::vector<std::size_t> sizes(k, n / k);
    for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
    double ctor_s = 0, oracle_s = 0;
    std::size_t agree = 0, used = 0;
    for (std::size_t i = 0; i < count; ++i) {
      GenSpec spec{sizes, derive_seed(seed ^ n, i), Constraint::SinkFree, 0, 1};
      std::optional<Tournament> t;
      try {
        t = random_constrained(spec, 1000);
      } catch (const GenerationFailure&) {
        continue;
      }
      ++used;
      auto t0 = Clock::now();
      const LimitReport report = construct_limit(*t);
      ctor_s += seconds_since(t0);
      t0 = Clock::now();
      const CompetitionProfile p = competition_profile(t->arcs());
      oracle_s += seconds_since(t0);
      if (p.limit && zero_diagonal(*p.limit) == report.edges) ++agree;
    }
    lim.push_back({{"n", n},
                   {"k", k},
                   {"instances", used},
                   {"constructor_ms", used ? 1000 * ctor_s / used : 0.0},
                   {"oracle_ms", used ? 1000 * oracle_s / used : 0.0},
                   {"oracle_over_constructor", ctor_s > 0 ? oracle_s / ctor_s : 0.0},
                   {"agree", agree}});
  }

  if (format == "json") {
    print_json(out, {{"kind", "bench"}, {"seed", seed}, {"multiply", mult}, {"limit", lim}});
    return kExitOk;
  }
  out << std::fixed << std::setprecision(3);
  out << "multiply (ms per product)\n";
  out << std::setw(6) << "n" << std::setw(14) << "bit-parallel" << std::setw(12) << "naive"
      << std::setw(10) << "speedup" << std::setw(7) << "agree" << "\n";
  for (const auto& row : mult)
    out << std::setw(6) << row["n"].get<std::size_t>() << std::setw(14)
        << row["bitparallel_ms"].get<double>() << std::setw(12) << row["naive_ms"].get<double>()
        << std::setw(10) << row["speedup"].get<double>() << std::setw(7)
        << (row["agree"].get<bool>() ? "yes" : "no") << "\n";
  out << "limit (ms per instance)\n";
  out << std::setw(6) << "n" << std::setw(4) << "k" << std::setw(11) << "instances"
      << std::setw(14) << "constructor" << std::setw(12) << "oracle" << std::setw(10) << "ratio"
      << std::setw(7) << "agree" << "\n";
  for (const auto& row : lim)
    out << std::setw(6) << row["n"].get<std::size_t>() << std::setw(4)
        << row["k"].get<std::size_t>() << std::setw(11) << row["instances"].get<std::size_t>()
        << std::setw(14) << row["constructor_ms"].get<double>() << std::setw(12)
        << row["oracle_ms"].get<double>() << std::setw(10)
        << row["oracle_over_constructor"].get<double>() << std::setw(7)
        << row["agree"].get<std::size_t>() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Limits of m-step competition graphs of multipartite tournaments", "mstep"};
  app.require_subcommand(1);

  InputOptions input;
  std::string format = "text";
  bool oracle_only = false, trace = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Partition, sinks, components, kappa and competition profile");
  add_input(analyze_cmd, input);
  analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* limit_cmd = app.add_subcommand("limit", "Construct the limit graph and check it against the oracle");
  add_input(limit_cmd, input);
  limit_cmd->add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  limit_cmd->add_flag("--oracle-only", oracle_only, "Only run the matrix-power oracle");
  limit_cmd->add_flag("--trace", trace, "Include the construction trace");

  GridConfig grid;
  std::string sizes_text, constraint_text = "sink_free", dump = "verify-counterexample.txt";
  std::size_t threads = 0;
  bool no_structured = false;
  auto* verify_cmd = app.add_subcommand("verify", "Compare constructor and oracle over a seeded grid");
  verify_cmd->add_option("--count", grid.count, "Number of instances");
  verify_cmd->add_option("--seed", grid.seed, "Base seed");
  verify_cmd->add_option("--sizes", sizes_text, "Fixed partite set sizes, e.g. 2,3,2");
  verify_cmd->add_option("--k-min", grid.k_min, "Smallest number of partite sets");
  verify_cmd->add_option("--k-max", grid.k_max, "Largest number of partite sets");
  verify_cmd->add_option("--max-n", grid.max_n, "Largest number of vertices");
  verify_cmd->add_option("--max-layers", grid.max_layers, "Largest layer count for generation");
  verify_cmd->add_option("--constraint", constraint_text, "none, sink_free, strong, last_kappa(v)");
  verify_cmd->add_flag("--no-structured", no_structured, "Random orientations only");
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--trace", trace, "Print branch counters");
  verify_cmd->add_option("--dump", dump, "File for the first counterexample (empty disables)");

  GenSpec gen_spec;
  std::size_t max_tries = 10000;
  std::string gen_format = "text", gen_constraint = "none";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded multipartite tournament");
  gen_cmd->add_option("--sizes", sizes_text, "Partite set sizes, e.g. 2,3,2")->required();
  gen_cmd->add_option("--seed", gen_spec.seed, "Seed");
  gen_cmd->add_option("--constraint", gen_constraint, "none, sink_free, strong, last_kappa(v), unusual_pair");
  gen_cmd->add_option("--layers", gen_spec.layers, "Layer count (1 = uniform)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--max-tries", max_tries, "Rejection sampling budget");
  gen_cmd->add_option("--format", gen_format, "text (edge list), matrix or json")
      ->check(CLI::IsMember({"text", "matrix", "json"}));

  std::string mult_text = "64,128,256", limit_text_sizes = "8,16,32,64,128";
  std::size_t bench_count = 20, reps = 5;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the kernels and the two limit computations");
  bench_cmd->add_option("--sizes", mult_text, "Matrix sizes for the multiply benchmark");
  bench_cmd->add_option("--limit-sizes", limit_text_sizes, "Vertex counts for constructor vs oracle");
  bench_cmd->add_option("--count", bench_count, "Instances per vertex count");
  bench_cmd->add_option("--reps", reps, "Repetitions per multiply")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "Seed");
  bench_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(input, format, in, out);
    if (limit_cmd->parsed())
      return cmd_limit(input, format, oracle_only, trace, in, out, err);
    if (verify_cmd->parsed()) {
      if (!sizes_text.empty()) grid.sizes = parse_sizes(sizes_text);
      grid.constraint = parse_constraint(constraint_text, grid.kappa);
      if (grid.constraint == Constraint::UnusualPair)
        throw std::invalid_argument("verify: unusual_pair is not a grid constraint");
      grid.structured = !no_structured;
      return cmd_verify(grid, threads, format, trace, dump, out, err);
    }
    if (gen_cmd->parsed()) {
      gen_spec.part_sizes = parse_sizes(sizes_text);
      gen_spec.constraint = parse_constraint(gen_constraint, gen_spec.kappa);
      return cmd_gen(gen_spec, max_tries, gen_format, out);
    }
    if (bench_cmd->parsed())
      return cmd_bench(parse_sizes(mult_text), parse_sizes(limit_text_sizes), bench_count,
                       reps, bench_seed, format, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const GenerationFailure& e) {
    err << "generation failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mstep
