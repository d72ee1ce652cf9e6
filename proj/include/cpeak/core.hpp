#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpeak {

using BigInt = boost::multiprecision::cpp_int;

/// Bitmask over values 1..63; bit v set means value v is a member.
using SetMask = std::uint64_t;

inline constexpr int kMaxMaskValue = 63;

/// Raised when a request exceeds a configured computation limit
/// (oracle order, DP order, generating-function order).
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of [n] in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `values` is a bijection of [n], n >= 1.
  explicit Permutation(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int position) const { return values_[position - 1]; }  // 1-based
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// An order n together with a strictly increasing subset of [n].
class PeakSet {
 public:
  PeakSet() = default;
  /// Sorts and validates; throws std::invalid_argument on duplicates, values < 1,
  /// or n < 1. Elements above n are rejected unless `allow_above_n` is set.
  PeakSet(int n, std::vector<int> elements, bool allow_above_n = false);

  int n() const { return n_; }
  const std::vector<int>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  int size() const { return static_cast<int>(elements_.size()); }
  int max() const { return elements_.empty() ? 0 : elements_.back(); }

  /// Same element set, different ambient order.
  PeakSet at_order(int n) const;

  SetMask mask() const;

  bool operator==(const PeakSet&) const = default;

 private:
  int n_ = 1;
  std::vector<int> elements_;
};

struct Run {
  int max;     // largest element of the run
  int length;  // number of consecutive elements, >= 1

  int min() const { return max - length + 1; }
  bool operator==(const Run&) const = default;
};

/// Maximal consecutive runs of a set, in increasing order.
struct RunDecomposition {
  std::vector<Run> runs;

  std::vector<int> expand() const;
  bool operator==(const RunDecomposition&) const = default;
};

/// Values at interior positions that exceed both neighbours. No wraparound.
PeakSet circular_peak_set(const Permutation& p);

/// Same statistic over a raw one-line word, as a bitmask (word values <= 63).
SetMask circular_peak_mask(std::span<const int> word);

/// The j-th smallest element is at least 2j+1 and no element exceeds n.
bool is_feasible(const PeakSet& s);
bool is_feasible(std::span<const int> sorted_elements, int n);

RunDecomposition run_decomposition(std::span<const int> sorted_elements);
inline RunDecomposition run_decomposition(const PeakSet& s) {
  return run_decomposition(s.elements());
}

/// Relabels the values at `positions` (1-based, strictly increasing)
/// order-isomorphically onto [k].
Permutation reduce_subsequence(const Permutation& p, std::span<const int> positions);

// Mask helpers.
SetMask to_mask(std::span<const int> elements);
std::vector<int> from_mask(SetMask mask);
int mask_size(SetMask mask);

/// Orders sets by cardinality, then lexicographically; the appendix table layout.
bool table_order_less(SetMask a, SetMask b);

// Text forms: permutations as space- or comma-separated one-line notation,
// sets as comma-separated integers (empty string for the empty set).
Permutation parse_permutation(std::string_view text);
std::vector<int> parse_set(std::string_view text);
std::string format_set(std::span<const int> elements);  // "4,5"
std::string format_set_braced(std::span<const int> elements);  // "{4, 5}"
std::string format_permutation(const Permutation& p);  // "14253" or "1 10 2 ..." if n > 9

BigInt pow2(int exponent);
BigInt factorial(int n);

}  // namespace cpeak
