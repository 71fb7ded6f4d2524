#pragma once

#include <cassert>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

#include "rex/weyl.hpp"

namespace rex {

// Write-once cache keyed by element pairs. Concurrent fills are benign:
// every key always receives the same value, so a lost race just recomputes.
template <typename Value>
class PairMemo {
 public:
  std::optional<Value> find(const GroupElement& v, const GroupElement& w) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find({v, w});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const GroupElement& v, const GroupElement& w, Value value) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = table_.emplace(std::make_pair(v, w), std::move(value));
    assert(inserted || it->second == value);
    (void)it;
    (void)inserted;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::pair<GroupElement, GroupElement>, Value, PairHash> table_;
};

}  // namespace rex
