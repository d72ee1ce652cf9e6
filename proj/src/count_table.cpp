#include "cpeak/count_table.hpp"

#include <algorithm>

namespace cpeak {

BigInt CountTable::at(SetMask key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void CountTable::set(SetMask key, BigInt count) {
  if (count == 0) {
    entries_.erase(key);
  } else {
    entries_[key] = std::move(count);
  }
}

void CountTable::add(SetMask key, const BigInt& count) {
  if (count == 0) return;
  BigInt& slot = entries_[key];
  slot += count;
  if (slot == 0) entries_.erase(key);
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [key, count] : entries_) sum += count;
  return sum;
}

std::vector<std::pair<SetMask, BigInt>> CountTable::sorted_entries() const {
  std::vector<std::pair<SetMask, BigInt>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return table_order_less(a.first, b.first); });
  return out;
}

}  // namespace cpeak
