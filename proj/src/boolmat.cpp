#include "mstep/boolmat.hpp"

#include <bit>
#include <unordered_map>

namespace mstep {

namespace {

std::size_t words_for(std::size_t n) {
  return (n + BoolMatrix::kWordBits - 1) / BoolMatrix::kWordBits;
}

void require_same_size(const BoolMatrix& a, const BoolMatrix& b,
                       const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}

}  // namespace

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
  if (n == 0) throw DimensionError("BoolMatrix: dimension must be positive");
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::ones(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j);
  return m;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::string>& rows) {
  BoolMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw DimensionError("row " + std::to_string(i) + " has length " +
                           std::to_string(rows[i].size()) + ", expected " +
                           std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw std::invalid_argument("row " + std::to_string(i) +
                                    ": invalid character '" +
                                    std::string(1, c) + "'");
      }
      if (c == '1') m.set(i, j);
    }
  }
  return m;
}

bool BoolMatrix::row_is_zero(std::size_t i) const {
  for (Word w : row(i))
    if (w != 0) return false;
  return true;
}

std::size_t BoolMatrix::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (Word w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BoolMatrix::count() const {
  std::size_t c = 0;
  for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BoolMatrix::is_subset_of(const BoolMatrix& other) const {
  require_same_size(*this, other, "is_subset_of");
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

std::size_t BoolMatrix::hash() const {
  // 64-bit FNV-1a over the packed words, mixed once more at the end.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ n_;
  for (Word w : bits_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  h ^= h >> 32;
  return static_cast<std::size_t>(h);
}

std::vector<std::string> BoolMatrix::to_rows() const {
  std::vector<std::string> rows(n_, std::string(n_, '0'));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) rows[i][j] = '1';
  return rows;
}

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b) {
  require_same_size(a, b, "multiply");
  const std::size_t n = a.size();
  const std::size_t words = a.words_per_row();
  BoolMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto dst = out.row(i);
    const auto src = a.row(i);
    for (std::size_t w = 0; w < words; ++w) {
      BoolMatrix::Word bits = src[w];
      while (bits != 0) {
        const std::size_t t =
            w * BoolMatrix::kWordBits +
            static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto brow = b.row(t);
        for (std::size_t k = 0; k < words; ++k) dst[k] |= brow[k];
      }
    }
  }
  return out;
}

BoolMatrix multiply_naive(const BoolMatrix& a, const BoolMatrix& b) {
  require_same_size(a, b, "multiply_naive");
  const std::size_t n = a.size();
  BoolMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool v = false;
      for (std::size_t t = 0; t < n; ++t) v = v || (a.get(i, t) && b.get(t, j));
      if (v) out.set(i, j);
    }
  }
  return out;
}

BoolMatrix transpose(const BoolMatrix& a) {
  const std::size_t n = a.size();
  BoolMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = a.row(i);
    for (std::size_t w = 0; w < src.size(); ++w) {
      BoolMatrix::Word bits = src[w];
      while (bits != 0) {
        const std::size_t j =
            w * BoolMatrix::kWordBits +
            static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        out.set(j, i);
      }
    }
  }
  return out;
}

BoolMatrix power(const BoolMatrix& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("power: exponent must be >= 1");
  BoolMatrix result = a;
  BoolMatrix base = a;
  --m;
  while (m > 0) {
    if (m & 1u) result = multiply(result, base);
    m >>= 1u;
    if (m > 0) base = multiply(base, base);
  }
  return result;
}

BoolMatrix zero_diagonal(const BoolMatrix& a) {
  BoolMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, i, false);
  return out;
}

BoolMatrix competition_matrix(const BoolMatrix& a, std::size_t m) {
  if (m == 0)
    throw std::invalid_argument("competition_matrix: m must be >= 1");
  const BoolMatrix p = power(a, m);
  return multiply(p, transpose(p));
}

std::size_t default_power_cap(std::size_t n) { return 10 * n * n; }

PowerSequence::PowerSequence(const BoolMatrix& a, std::size_t max_stored) {
  if (max_stored == 0) max_stored = default_power_cap(a.size());
  // hash -> exponents m with that hash; collisions are resolved by a full
  // comparison, never by the hash alone.
  std::unordered_multimap<std::size_t, std::size_t> seen;
  BoolMatrix current = a;
  for (std::size_t m = 1;; ++m) {
    const std::size_t h = current.hash();
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (powers_[it->second - 1] == current) {
        cycle_.index = it->second;
        cycle_.period = m - it->second;
        return;
      }
    }
    if (powers_.size() >= max_stored) {
      throw ResourceLimitError("power cycle not found within " +
                               std::to_string(max_stored) +
                               " stored powers");
    }
    seen.emplace(h, m);
    powers_.push_back(current);
    current = multiply(current, a);
  }
}

std::size_t PowerSequence::reduce(std::size_t m) const {
  if (m == 0) throw std::invalid_argument("PowerSequence: m must be >= 1");
  const std::size_t q = cycle_.index;
  const std::size_t p = cycle_.period;
  if (m < q + p) return m;
  return q + (m - q) % p;
}

const BoolMatrix& PowerSequence::at(std::size_t m) const {
  return powers_[reduce(m) - 1];
}

BoolMatrix PowerSequence::competition(std::size_t m) const {
  const BoolMatrix& p = at(m);
  return multiply(p, transpose(p));
}

PowerCycle power_cycle(const BoolMatrix& a, std::size_t max_stored) {
  return PowerSequence(a, max_stored).cycle();
}

CompetitionProfile competition_profile(const PowerSequence& seq) {
  const std::size_t q = seq.cycle().index;
  const std::size_t p = seq.cycle().period;

  // For m >= q the sequence B_m repeats with period p, so its eventual
  // period is the least divisor d of p with B_m = B_(m+d) across one cycle.
  std::vector<BoolMatrix> window;
  window.reserve(2 * p);
  for (std::size_t m = q; m < q + 2 * p; ++m)
    window.push_back(seq.competition(m));

  CompetitionProfile out;
  out.powers = seq.cycle();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < p && periodic; ++i)
      periodic = window[i] == window[i + d];
    if (periodic) {
      out.cperiod = d;
      break;
    }
  }

  // The tail from q is d-periodic; extend it backwards while the earlier
  // term still matches its counterpart one period later.
  std::size_t c = q;
  while (c > 1 && seq.competition(c - 1) == seq.competition(c - 1 + out.cperiod))
    --c;
  out.cindex = c;
  if (out.cperiod == 1) out.limit = window.front();
  return out;
}

CompetitionProfile competition_profile(const BoolMatrix& a,
                                       std::size_t max_stored) {
  return competition_profile(PowerSequence(a, max_stored));
}

}  // namespace mstep
