#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rex/root_system.hpp"

namespace rex {

// A Weyl group element, represented by the indices of w(alpha_i) for each
// simple root alpha_i. The images tuple is the canonical key: it determines
// the element, and equality and hashing work directly on it.
struct GroupElement {
  std::vector<RootIndex> images;
  bool operator==(const GroupElement&) const = default;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.images) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct PairHash {
  std::size_t operator()(const std::pair<GroupElement, GroupElement>& p) const {
    ElementHash h;
    return h(p.first) * 0x9e3779b97f4a7c15ull + h(p.second);
  }
};

// The Weyl group of a root system. Elements are plain values; all structure
// queries go through this context, which owns the root data and a memo for
// the Bruhat order. Immutable apart from that idempotent cache, and safe to
// share across threads.
class WeylGroup {
 public:
  explicit WeylGroup(CartanDatum datum, int root_cap = 500);

  const RootSystem& roots() const { return *roots_; }
  int rank() const { return roots_->rank(); }
  const std::string& label() const { return roots_->cartan().label; }

  GroupElement identity() const;
  // i is 0-based here and throughout the library; the CLI word syntax is
  // 1-based.
  GroupElement simple(int i) const;

  bool is_identity(const GroupElement& w) const;
  // Number of positive roots sent to negative roots.
  int length(const GroupElement& w) const;
  // True iff l(w s_i) < l(w), i.e. w(alpha_i) is negative.
  bool right_descent(const GroupElement& w, int i) const;
  // Smallest i with right_descent(w, i); throws BadIndex on the identity.
  int first_right_descent(const GroupElement& w) const;
  bool left_descent(const GroupElement& w, int i) const;

  GroupElement mult_simple_right(const GroupElement& w, int i) const;
  GroupElement mult_simple_left(int i, const GroupElement& w) const;
  GroupElement multiply(const GroupElement& w, const GroupElement& v) const;
  GroupElement inverse(const GroupElement& w) const;

  // Image of an arbitrary root index under w, by linearity over the
  // simple-root coordinates.
  RootIndex act_on_root(const GroupElement& w, RootIndex r) const;

  // The unique element sending every positive root to a negative one.
  const GroupElement& longest_element() const;

  // Bruhat order, decided by the descent recursion and memoized.
  bool bruhat_leq(const GroupElement& v, const GroupElement& w) const;

  // All group elements, ordered by (length, images); breadth-first closure
  // under the generators. Finite by construction of the root system.
  std::vector<GroupElement> enumerate() const;

  // |W| via the exponents: the dual partition of the distribution of
  // positive roots by height gives the exponents m_i, and |W| is the
  // product of the m_i + 1. Exact, and cheap even for large groups.
  std::int64_t order() const;

  // Word syntax: "e" for the identity, else whitespace or comma separated
  // 1-based generator indices ("1 2 1"). For irreducible type A, "p:2314"
  // gives one-line permutation images. Throws BadIndex / BadSyntax.
  GroupElement parse(std::string_view text) const;
  // Lexicographically smallest reduced word, by repeated extraction of the
  // smallest left descent. 1-based letters.
  std::vector<int> reduced_word(const GroupElement& w) const;
  // reduced_word rendered in the CLI syntax ("e" for the identity).
  std::string format(const GroupElement& w) const;

 private:
  std::shared_ptr<const RootSystem> roots_;
  GroupElement identity_;
  mutable GroupElement longest_;
  mutable std::once_flag longest_once_;
  mutable std::unordered_map<std::pair<GroupElement, GroupElement>, bool, PairHash>
      bruhat_memo_;
  mutable std::mutex bruhat_mutex_;

  bool bruhat_leq_impl(const GroupElement& v, const GroupElement& w) const;
};

// Identification of an irreducible type A_{n-1} group with the symmetric
// group S_n: generator i maps to the adjacent transposition (i, i+1) and
// products compose as functions, (uv)(k) = u(v(k)). Permutations use
// 1-based one-line notation. Throws TypeUnsupported unless the Cartan
// datum is a single type A block.
bool is_type_a(const RootSystem& system);
std::vector<int> permutation_from_element(const WeylGroup& group, const GroupElement& w);
GroupElement element_from_permutation(const WeylGroup& group, const std::vector<int>& perm);

}  // namespace rex
