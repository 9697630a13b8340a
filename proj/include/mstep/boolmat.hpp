#pragma once

// Bit-packed square Boolean matrices and the power / competition sequences
// built from them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstep {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when the power-cycle search would store more matrices than allowed.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square 0/1 matrix over the Boolean semiring (OR as sum, AND as product).
///
/// Rows are packed into 64-bit words, row-major.  Bit j of row i is entry
/// (i, j).  Bits past column n-1 in the last word of each row are always
/// zero, so equality and hashing can work on whole words.
class BoolMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  explicit BoolMatrix(std::size_t n);

  static BoolMatrix zeros(std::size_t n) { return BoolMatrix(n); }
  static BoolMatrix identity(std::size_t n);
  static BoolMatrix ones(std::size_t n);
  // Each string is one row of '0'/'1' characters; all rows must have length
  // rows.size().
  static BoolMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    Word& w = bits_[i * words_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::span<Word> row(std::size_t i) {
    return {bits_.data() + i * words_, words_};
  }
  std::span<const Word> words() const { return bits_; }

  bool row_is_zero(std::size_t i) const;
  std::size_t row_count(std::size_t i) const;
  // Number of set entries.
  std::size_t count() const;
  // Every set entry of *this is also set in other.
  bool is_subset_of(const BoolMatrix& other) const;

  std::size_t hash() const;
  std::vector<std::string> to_rows() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

/// Boolean product, row by row: result row i is the OR of the rows of b
/// selected by the set bits of row i of a.
BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b);

/// Straightforward triple loop.  Kept as a reference for tests and benchmarks.
BoolMatrix multiply_naive(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix transpose(const BoolMatrix& a);

/// a^m by repeated squaring; m >= 1.
BoolMatrix power(const BoolMatrix& a, std::size_t m);

BoolMatrix zero_diagonal(const BoolMatrix& a);

/// B_m = a^m (a^T)^m, computed as P P^T with P = a^m.
BoolMatrix competition_matrix(const BoolMatrix& a, std::size_t m);

/// Cycle structure of {a^m}: a^index = a^(index + period), index minimal and
/// period minimal for that index.
struct PowerCycle {
  std::size_t index = 1;
  std::size_t period = 1;
  friend bool operator==(const PowerCycle&, const PowerCycle&) = default;
};

/// Default cap on distinct stored powers: 10 n^2.
std::size_t default_power_cap(std::size_t n);

/// The distinct powers a^1 .. a^(index + period - 1) together with their
/// cycle structure.  Any power a^m, m >= 1, is available through at().
class PowerSequence {
 public:
  PowerSequence(const BoolMatrix& a, std::size_t max_stored);

  const PowerCycle& cycle() const { return cycle_; }
  // a^m for m >= 1.
  const BoolMatrix& at(std::size_t m) const;
  // B_m = a^m (a^T)^m for m >= 1.
  BoolMatrix competition(std::size_t m) const;

 private:
  std::size_t reduce(std::size_t m) const;

  PowerCycle cycle_;
  std::vector<BoolMatrix> powers_;  // powers_[k] = a^(k+1)
};

/// Throws ResourceLimitError when more than max_stored distinct powers occur
/// before the first repeat.  max_stored = 0 selects default_power_cap().
PowerCycle power_cycle(const BoolMatrix& a, std::size_t max_stored = 0);

/// Competition index and period of a, and the limit of {B_m} when the
/// eventual period is 1.
struct CompetitionProfile {
  std::size_t cindex = 1;
  std::size_t cperiod = 1;
  PowerCycle powers;
  std::optional<BoolMatrix> limit;
};

CompetitionProfile competition_profile(const BoolMatrix& a,
                                       std::size_t max_stored = 0);
CompetitionProfile competition_profile(const PowerSequence& seq);

}  // namespace mstep

template <>
struct std::hash<mstep::BoolMatrix> {
  std::size_t operator()(const mstep::BoolMatrix& m) const noexcept {
    return m.hash();
  }
};
