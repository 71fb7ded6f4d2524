#include "rex/ext.hpp"

namespace rex {

int hom_dim(const WeylGroup& group, const GroupElement& v, const GroupElement& w) {
  return group.bruhat_leq(v, w) ? 1 : 0;
}

int ext1_dim(const WeylGroup& group, const GroupElement& v, const GroupElement& w,
             ExtMemo& memo) {
  if (v == w) return 0;
  if (!group.bruhat_leq(v, w)) return 0;
  if (auto hit = memo.find(v, w)) return *hit;
  int value = ext1_dim_via_descent(group, v, w, group.first_right_descent(w), memo);
  memo.insert(v, w, value);
  return value;
}

int ext1_dim_via_descent(const WeylGroup& group, const GroupElement& v,
                         const GroupElement& w, int s, ExtMemo& memo) {
  GroupElement ws = group.mult_simple_right(w, s);
  if (group.right_descent(v, s))
    return ext1_dim(group, group.mult_simple_right(v, s), ws, memo);
  GroupElement vs = group.mult_simple_right(v, s);
  if (!group.bruhat_leq(vs, ws)) return 1 + ext1_dim(group, v, ws, memo);
  return ext1_dim(group, v, ws, memo);
}

std::vector<PairRow<int>> ext1_table(const WeylGroup& group) {
  auto elements = group.enumerate();
  ExtMemo memo;
  std::vector<PairRow<int>> rows;
  for (const auto& v : elements)
    for (const auto& w : elements)
      if (group.bruhat_leq(v, w))
        rows.push_back({v, w, ext1_dim(group, v, w, memo)});
  return rows;
}

}  // namespace rex
