#pragma once

// Deliberately simple reference implementations.  Nothing here uses the
// library's algorithms beyond BoolMatrix as a container at the edges.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "mstep/boolmat.hpp"
#include "mstep/digraph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<bool>>;

inline Dense dense(const mstep::BoolMatrix& m) {
  Dense d(m.size(), std::vector<bool>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m.get(i, j);
  return d;
}

inline mstep::BoolMatrix packed(const Dense& d) {
  mstep::BoolMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[i][j]) m.set(i, j);
  return m;
}

inline Dense identity(std::size_t n) {
  Dense d(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = true;
  return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n && !c[i][j]; ++t) c[i][j] = a[i][t] && b[t][j];
  return c;
}

inline Dense transpose(const Dense& a) {
  const std::size_t n = a.size();
  Dense t(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

inline Dense pow(const Dense& a, std::size_t m) {
  Dense r = identity(a.size());
  for (std::size_t i = 0; i < m; ++i) r = mul(r, a);
  return r;
}

/// B_1..B_horizon from m-step prey sets: B_m(u, v) iff some w is reached
/// from both u and v by walks of length exactly m.
inline std::vector<Dense> competition_sequence(const Dense& a, std::size_t horizon) {
  const std::size_t n = a.size();
  std::vector<Dense> out;
  Dense reach = identity(n);
  for (std::size_t m = 1; m <= horizon; ++m) {
    reach = mul(reach, a);
    Dense b(n, std::vector<bool>(n));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n && !b[u][v]; ++w) b[u][v] = reach[u][w] && reach[v][w];
    out.push_back(std::move(b));
  }
  return out;
}

struct Eventual {
  std::size_t index = 0;
  std::size_t period = 0;
};

/// Smallest (q, p) with seq[q+i] = seq[q+p+i] for every i the horizon can
/// check; 1-based like B_m.  The horizon must be long enough that the tail
/// region is genuinely periodic, which callers arrange by choosing it well
/// past the point where the sequence repeats.
inline std::optional<Eventual> eventual_period(const std::vector<Dense>& seq,
                                               std::size_t max_period) {
  const std::size_t h = seq.size();
  for (std::size_t q = 1; q <= h; ++q) {
    for (std::size_t p = 1; p <= max_period; ++p) {
      if (q + 2 * p > h) break;
      bool ok = true;
      for (std::size_t m = q; m + p <= h && ok; ++m) ok = seq[m - 1] == seq[m + p - 1];
      if (ok) return Eventual{q, p};
    }
  }
  return std::nullopt;
}

/// SCC membership from the reflexive transitive closure.
inline std::vector<std::vector<std::size_t>> closure_components(const mstep::BoolMatrix& m) {
  const std::size_t n = m.size();
  Dense r = dense(m);
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> done(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j] && r[j][i]) {
        c.push_back(j);
        done[j] = true;
      }
    comps.push_back(c);
  }
  return comps;
}

/// gcd of the lengths m <= n of closed walks inside the vertex set.
inline std::size_t closed_walk_gcd(const mstep::BoolMatrix& m,
                                   const std::vector<std::size_t>& set) {
  const std::size_t k = set.size();
  Dense a(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = m.get(set[i], set[j]);
  std::size_t g = 0;
  Dense p = identity(k);
  for (std::size_t len = 1; len <= k; ++len) {
    p = mul(p, a);
    for (std::size_t i = 0; i < k; ++i)
      if (p[i][i]) {
        g = std::gcd(g, len);
        break;
      }
  }
  return g;
}

/// Limit of the competition graphs of a sink-free digraph by brute force:
/// zero-diagonal B_m for m far past the transient.
inline std::optional<Dense> limit_graph(const mstep::BoolMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t horizon = 2 * n * n + 24;
  const auto seq = competition_sequence(dense(m), horizon);
  const auto ev = eventual_period(seq, 12);
  if (!ev || ev->period != 1) return std::nullopt;
  Dense g = seq.back();
  for (std::size_t i = 0; i < n; ++i) g[i][i] = false;
  return g;
}

inline mstep::BoolMatrix random_matrix(std::size_t n, std::mt19937_64& rng,
                                       unsigned density_percent = 50) {
  mstep::BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 100 < density_percent) m.set(i, j);
  return m;
}

}  // namespace oracle
