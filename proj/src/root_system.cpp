#include "rex/root_system.hpp"

#include <algorithm>
#include <numeric>

#include "rex/checked.hpp"
#include "rex/errors.hpp"

namespace rex {

RootVec RootSystem::reflect_coords(int i, const RootVec& coords) const {
  std::int64_t pairing = 0;
  const auto& row = datum_.matrix[i];
  for (int j = 0; j < rank(); ++j)
    pairing = checked_add(pairing, checked_mul(row[j], coords[j]));
  RootVec out(coords);
  out[i] = checked_sub(out[i], pairing);
  return out;
}

RootSystem::RootSystem(CartanDatum datum, int root_cap) : datum_(std::move(datum)) {
  validate_cartan(datum_);
  const int n = rank();

  std::vector<RootVec> found;
  std::unordered_map<RootVec, int, RootVecHash> seen;
  for (int i = 0; i < n; ++i) {
    RootVec alpha(n, 0);
    alpha[i] = 1;
    seen.emplace(alpha, static_cast<int>(found.size()));
    found.push_back(std::move(alpha));
  }

  // Breadth-first closure under the simple reflections. Coordinate overflow
  // can only happen for non-finite input, so it maps to the same error.
  try {
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (int i = 0; i < n; ++i) {
        RootVec image = reflect_coords(i, found[head]);
        if (seen.emplace(image, static_cast<int>(found.size())).second) {
          found.push_back(std::move(image));
          if (static_cast<int>(found.size()) > root_cap)
            throw NonFiniteType("root closure exceeds cap; Cartan matrix is not of finite type");
        }
      }
    }
  } catch (const OverflowError&) {
    throw NonFiniteType("root coordinates overflow; Cartan matrix is not of finite type");
  }

  // Every root must be a nonnegative or nonpositive combination of simple
  // roots. Anything else means the input was not a genuine Cartan matrix.
  for (const auto& r : found) {
    bool has_pos = false, has_neg = false;
    for (auto c : r) {
      has_pos |= c > 0;
      has_neg |= c < 0;
    }
    if (has_pos && has_neg)
      throw MalformedCartan("generated a mixed-sign root; input is not a Cartan matrix");
  }

  auto height = [](const RootVec& r) {
    return std::accumulate(r.begin(), r.end(), std::int64_t{0});
  };
  std::sort(found.begin(), found.end(), [&](const RootVec& a, const RootVec& b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  roots_ = std::move(found);
  for (int r = 0; r < root_count(); ++r) index_.emplace(roots_[r], r);

  negative_.resize(root_count());
  for (int r = 0; r < root_count(); ++r) {
    RootVec neg(roots_[r]);
    for (auto& c : neg) c = -c;
    negative_[r] = index_.at(neg);
  }

  simple_index_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootVec alpha(n, 0);
    alpha[i] = 1;
    simple_index_[i] = index_.at(alpha);
  }

  simple_action_.assign(n, std::vector<RootIndex>(root_count()));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < root_count(); ++r)
      simple_action_[i][r] = index_.at(reflect_coords(i, roots_[r]));
}

RootIndex RootSystem::index_of(const RootVec& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) throw BadIndex("coordinates do not name a root");
  return it->second;
}

}  // namespace rex
