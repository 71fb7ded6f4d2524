#include "rex/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "rex/checked.hpp"
#include "rex/errors.hpp"

namespace rex {

WeylGroup::WeylGroup(CartanDatum datum, int root_cap)
    : roots_(std::make_shared<const RootSystem>(std::move(datum), root_cap)) {
  identity_.images.resize(rank());
  for (int i = 0; i < rank(); ++i) identity_.images[i] = roots_->simple_root(i);
}

GroupElement WeylGroup::identity() const { return identity_; }

GroupElement WeylGroup::simple(int i) const {
  return mult_simple_right(identity_, i);
}

bool WeylGroup::is_identity(const GroupElement& w) const {
  return w.images == identity_.images;
}

RootIndex WeylGroup::act_on_root(const GroupElement& w, RootIndex r) const {
  const RootSystem& rs = *roots_;
  const RootVec& coords = rs.root(r);
  RootVec image(rank(), 0);
  for (int j = 0; j < rank(); ++j) {
    std::int64_t c = coords[j];
    if (c == 0) continue;
    const RootVec& wj = rs.root(w.images[j]);
    for (int k = 0; k < rank(); ++k) image[k] += c * wj[k];
  }
  return rs.index_of(image);
}

int WeylGroup::length(const GroupElement& w) const {
  const RootSystem& rs = *roots_;
  int inversions = 0;
  for (RootIndex r = rs.first_positive(); r < rs.root_count(); ++r)
    if (!rs.is_positive(act_on_root(w, r))) ++inversions;
  return inversions;
}

bool WeylGroup::right_descent(const GroupElement& w, int i) const {
  if (i < 0 || i >= rank()) throw BadIndex("generator index out of range");
  return !roots_->is_positive(w.images[i]);
}

int WeylGroup::first_right_descent(const GroupElement& w) const {
  for (int i = 0; i < rank(); ++i)
    if (!roots_->is_positive(w.images[i])) return i;
  throw BadIndex("identity element has no descent");
}

bool WeylGroup::left_descent(const GroupElement& w, int i) const {
  return right_descent(inverse(w), i);
}

GroupElement WeylGroup::mult_simple_right(const GroupElement& w, int i) const {
  if (i < 0 || i >= rank()) throw BadIndex("generator index out of range");
  const RootSystem& rs = *roots_;
  // (w s_i)(alpha_j) = w(alpha_j - a(i,j) alpha_i) = w(alpha_j) - a(i,j) w(alpha_i)
  const RootVec& wi = rs.root(w.images[i]);
  const auto& row = rs.cartan().matrix[i];
  GroupElement out;
  out.images.resize(rank());
  for (int j = 0; j < rank(); ++j) {
    if (j == i) {
      out.images[j] = rs.negative_of(w.images[i]);
      continue;
    }
    if (row[j] == 0) {
      out.images[j] = w.images[j];
      continue;
    }
    RootVec coords(rs.root(w.images[j]));
    for (int k = 0; k < rank(); ++k) coords[k] -= row[j] * wi[k];
    out.images[j] = rs.index_of(coords);
  }
  return out;
}

GroupElement WeylGroup::mult_simple_left(int i, const GroupElement& w) const {
  if (i < 0 || i >= rank()) throw BadIndex("generator index out of range");
  GroupElement out;
  out.images.resize(rank());
  for (int j = 0; j < rank(); ++j) out.images[j] = roots_->reflect(i, w.images[j]);
  return out;
}

GroupElement WeylGroup::multiply(const GroupElement& w, const GroupElement& v) const {
  GroupElement out;
  out.images.resize(rank());
  for (int j = 0; j < rank(); ++j) out.images[j] = act_on_root(w, v.images[j]);
  return out;
}

GroupElement WeylGroup::inverse(const GroupElement& w) const {
  // Invert the action on simple roots: find r with w(r) = alpha_j.
  const RootSystem& rs = *roots_;
  std::vector<RootIndex> inverse_images(rs.root_count(), -1);
  for (RootIndex r = 0; r < rs.root_count(); ++r)
    inverse_images[act_on_root(w, r)] = r;
  GroupElement out;
  out.images.resize(rank());
  for (int j = 0; j < rank(); ++j) out.images[j] = inverse_images[rs.simple_root(j)];
  return out;
}

const GroupElement& WeylGroup::longest_element() const {
  std::call_once(longest_once_, [this] {
    GroupElement w = identity_;
    // Greedy ascent: multiply by the smallest non-descent until every
    // simple image is negative.
    for (;;) {
      int ascent = -1;
      for (int i = 0; i < rank(); ++i)
        if (roots_->is_positive(w.images[i])) {
          ascent = i;
          break;
        }
      if (ascent < 0) break;
      w = mult_simple_right(w, ascent);
    }
    longest_ = std::move(w);
  });
  return longest_;
}

bool WeylGroup::bruhat_leq(const GroupElement& v, const GroupElement& w) const {
  if (is_identity(v)) return true;
  if (v == w) return true;
  auto key = std::make_pair(v, w);
  {
    std::lock_guard<std::mutex> lock(bruhat_mutex_);
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end()) return it->second;
  }
  bool result = bruhat_leq_impl(v, w);
  std::lock_guard<std::mutex> lock(bruhat_mutex_);
  bruhat_memo_.emplace(std::move(key), result);
  return result;
}

bool WeylGroup::bruhat_leq_impl(const GroupElement& v, const GroupElement& w) const {
  if (length(v) > length(w)) return false;
  // Lifting recursion: with s a right descent of w,
  //   v <= w  iff  vs <= ws (when vs < v)  or  v <= ws (when vs > v).
  int s = first_right_descent(w);
  GroupElement ws = mult_simple_right(w, s);
  if (right_descent(v, s)) return bruhat_leq(mult_simple_right(v, s), ws);
  return bruhat_leq(v, ws);
}

std::vector<GroupElement> WeylGroup::enumerate() const {
  std::vector<GroupElement> out;
  std::unordered_map<GroupElement, bool, ElementHash> seen;
  out.push_back(identity_);
  seen.emplace(identity_, true);
  for (std::size_t head = 0; head < out.size(); ++head) {
    GroupElement w = out[head];
    for (int i = 0; i < rank(); ++i) {
      GroupElement next = mult_simple_right(w, i);
      if (seen.emplace(next, true).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), [this](const GroupElement& a, const GroupElement& b) {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a.images < b.images;
  });
  return out;
}

std::int64_t WeylGroup::order() const {
  const RootSystem& rs = *roots_;
  std::map<std::int64_t, int> by_height;
  for (RootIndex r = rs.first_positive(); r < rs.root_count(); ++r) {
    std::int64_t h = 0;
    for (auto c : rs.root(r)) h += c;
    ++by_height[h];
  }
  // Dual partition of the height distribution = the exponents.
  std::int64_t result = 1;
  int level = 1;
  for (;; ++level) {
    int exponent = 0;
    for (const auto& [h, count] : by_height)
      if (count >= level) ++exponent;
    if (exponent == 0) break;
    result = checked_mul(result, exponent + 1);
  }
  return result;
}

GroupElement WeylGroup::parse(std::string_view text) const {
  std::string s(text);
  // trim
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  if (s.empty()) throw BadSyntax("empty element word");
  if (s == "e") return identity_;

  if (s.rfind("p:", 0) == 0) {
    std::vector<int> perm;
    for (std::size_t k = 2; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw BadSyntax("permutation form expects digits, as in p:2314");
      perm.push_back(s[k] - '0');
    }
    return element_from_permutation(*this, perm);
  }

  for (auto& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  GroupElement w = identity_;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw BadSyntax("bad generator token \"" + token + "\"");
    }
    if (used != token.size()) throw BadSyntax("bad generator token \"" + token + "\"");
    if (i < 1 || i > rank())
      throw BadIndex("generator " + std::to_string(i) + " out of range 1.." +
                     std::to_string(rank()));
    w = mult_simple_right(w, i - 1);
  }
  return w;
}

std::vector<int> WeylGroup::reduced_word(const GroupElement& w) const {
  std::vector<int> word;
  GroupElement u = w;
  while (!is_identity(u)) {
    GroupElement u_inv = inverse(u);
    int i = first_right_descent(u_inv);  // smallest left descent of u
    word.push_back(i + 1);
    u = mult_simple_left(i, u);
  }
  return word;
}

std::string WeylGroup::format(const GroupElement& w) const {
  auto word = reduced_word(w);
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << word[k];
  }
  return os.str();
}

bool is_type_a(const RootSystem& system) {
  const auto& m = system.cartan().matrix;
  int n = system.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int expected = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (m[i][j] != expected) return false;
    }
  return true;
}

std::vector<int> permutation_from_element(const WeylGroup& group, const GroupElement& w) {
  if (!is_type_a(group.roots()))
    throw TypeUnsupported("permutation model requires irreducible type A");
  int n = group.rank() + 1;
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  // Products compose as functions, (uv)(k) = u(v(k)), so a word maps to
  // perm = T_{i_1} o ... o T_{i_k}, built up left to right.
  auto word = group.reduced_word(w);
  for (int i : word) {  // 1-based
    std::vector<int> next(n);
    for (int k = 1; k <= n; ++k) {
      int x = k == i ? i + 1 : (k == i + 1 ? i : k);
      next[k - 1] = perm[x - 1];
    }
    perm = std::move(next);
  }
  return perm;
}

GroupElement element_from_permutation(const WeylGroup& group, const std::vector<int>& perm) {
  if (!is_type_a(group.roots()))
    throw TypeUnsupported("permutation model requires irreducible type A");
  int n = group.rank() + 1;
  if (static_cast<int>(perm.size()) != n)
    throw BadSyntax("permutation has " + std::to_string(perm.size()) +
                    " entries, expected " + std::to_string(n));
  std::vector<bool> hit(n, false);
  for (int x : perm) {
    if (x < 1 || x > n || hit[x - 1])
      throw BadSyntax("not a permutation of 1.." + std::to_string(n));
    hit[x - 1] = true;
  }
  // Strip descents off the right: u = (u s_i) s_i with one inversion fewer.
  std::vector<int> u(perm);
  std::vector<int> word;
  for (;;) {
    int i = -1;
    for (int k = 0; k + 1 < n; ++k)
      if (u[k] > u[k + 1]) {
        i = k;
        break;
      }
    if (i < 0) break;
    word.push_back(i);  // 0-based
    std::swap(u[i], u[i + 1]);
  }
  std::reverse(word.begin(), word.end());
  GroupElement w = group.identity();
  for (int i : word) w = group.mult_simple_right(w, i);
  return w;
}

}  // namespace rex
