#include "rex/rpoly.hpp"

namespace rex {

IntPolynomial r_polynomial(const WeylGroup& group, const GroupElement& v,
                           const GroupElement& w, RMemo& memo) {
  if (v == w) return IntPolynomial::constant(1);
  if (!group.bruhat_leq(v, w)) return IntPolynomial::zero();
  if (auto hit = memo.find(v, w)) return *hit;

  int s = group.first_right_descent(w);
  GroupElement ws = group.mult_simple_right(w, s);
  IntPolynomial value;
  if (group.right_descent(v, s)) {
    value = r_polynomial(group, group.mult_simple_right(v, s), ws, memo);
  } else {
    GroupElement vs = group.mult_simple_right(v, s);
    IntPolynomial open_part = IntPolynomial::q_minus_one() *
                              r_polynomial(group, v, ws, memo);
    if (group.bruhat_leq(vs, ws)) {
      // closed piece (C^{vs} n C_{ws}) x C plus its open complement
      value = r_polynomial(group, vs, ws, memo).shifted(1) + open_part;
    } else {
      value = open_part;
    }
  }
  memo.insert(v, w, value);
  return value;
}

std::vector<PairRow<IntPolynomial>> r_table(const WeylGroup& group) {
  auto elements = group.enumerate();
  RMemo memo;
  std::vector<PairRow<IntPolynomial>> rows;
  for (const auto& v : elements)
    for (const auto& w : elements)
      if (group.bruhat_leq(v, w))
        rows.push_back({v, w, r_polynomial(group, v, w, memo)});
  return rows;
}

}  // namespace rex
