#pragma once

#include <map>
#include <vector>

#include "cpeak/core.hpp"

namespace cpeak {

/// Counts cp_n(S) keyed by the element set of S. Absent keys count zero.
class CountTable {
 public:
  explicit CountTable(int n) : n_(n) {}

  int n() const { return n_; }

  BigInt at(SetMask key) const;
  BigInt at(std::span<const int> elements) const { return at(to_mask(elements)); }

  void set(SetMask key, BigInt count);
  void add(SetMask key, const BigInt& count);

  /// Sum of all entries; n! for a complete table.
  BigInt total() const;

  /// Non-zero entries in appendix-table order (cardinality, then lexicographic).
  std::vector<std::pair<SetMask, BigInt>> sorted_entries() const;

  std::size_t size() const { return entries_.size(); }
  const std::map<SetMask, BigInt>& entries() const { return entries_; }

  bool operator==(const CountTable&) const = default;

 private:
  int n_;
  std::map<SetMask, BigInt> entries_;
};

}  // namespace cpeak
