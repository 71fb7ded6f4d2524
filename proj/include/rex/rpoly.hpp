#pragma once

#include <vector>

#include "rex/ext.hpp"
#include "rex/memo.hpp"
#include "rex/poly.hpp"
#include "rex/weyl.hpp"

namespace rex {

using RMemo = PairMemo<IntPolynomial>;

// The Kazhdan-Lusztig R-polynomial R_{v,w}(q), defined here as the number
// of points of the open Richardson variety C^v n C_w over a field with q
// elements. The descent recursion mirrors the cell decomposition: with s
// the smallest right descent of w,
//   vs < v                 ->  R_{vs,ws}
//   vs > v, vs not <= ws   ->  (q - 1) R_{v,ws}        (a C* factor)
//   vs > v, vs <= ws       ->  q R_{vs,ws} + (q - 1) R_{v,ws}
// with R = 1 on the diagonal and R = 0 off the Bruhat order.
IntPolynomial r_polynomial(const WeylGroup& group, const GroupElement& v,
                           const GroupElement& w, RMemo& memo);

// R for every Bruhat-comparable ordered pair, rows sorted by
// (length, images) of v then of w.
std::vector<PairRow<IntPolynomial>> r_table(const WeylGroup& group);

}  // namespace rex
