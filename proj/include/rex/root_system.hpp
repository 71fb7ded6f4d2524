#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rex/cartan.hpp"

namespace rex {

// Coordinates of a root in the simple-root basis.
using RootVec = std::vector<std::int64_t>;
using RootIndex = int;

struct RootVecHash {
  std::size_t operator()(const RootVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// The finite set of roots generated from a Cartan matrix by closing the
// simple roots under the simple reflections
//   s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
// Roots are indexed in a fixed order: ascending (height, coordinates), so
// all negative roots precede all positive ones. Immutable once built.
class RootSystem {
 public:
  // Throws MalformedCartan on invalid input and NonFiniteType when the
  // closure exceeds root_cap (the matrix is not of finite type).
  explicit RootSystem(CartanDatum datum, int root_cap = 500);

  const CartanDatum& cartan() const { return datum_; }
  int rank() const { return datum_.rank; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return root_count() / 2; }

  const RootVec& root(RootIndex r) const { return roots_[r]; }
  RootIndex index_of(const RootVec& coords) const;
  // Positive roots occupy the upper half of the index range.
  bool is_positive(RootIndex r) const { return r >= positive_count(); }
  RootIndex first_positive() const { return positive_count(); }
  RootIndex negative_of(RootIndex r) const { return negative_[r]; }
  RootIndex simple_root(int i) const { return simple_index_[i]; }

  // The permutation of root indices realized by the reflection s_i.
  RootIndex reflect(int i, RootIndex r) const { return simple_action_[i][r]; }

  // s_i applied to arbitrary coordinates.
  RootVec reflect_coords(int i, const RootVec& coords) const;

 private:
  CartanDatum datum_;
  std::vector<RootVec> roots_;
  std::unordered_map<RootVec, RootIndex, RootVecHash> index_;
  std::vector<RootIndex> negative_;
  std::vector<RootIndex> simple_index_;
  std::vector<std::vector<RootIndex>> simple_action_;
};

}  // namespace rex
