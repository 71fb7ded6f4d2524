#pragma once

#include <vector>

#include "rex/memo.hpp"
#include "rex/weyl.hpp"

namespace rex {

using ExtMemo = PairMemo<int>;

// dim Hom(Delta_v, Delta_w): 1 if v <= w in Bruhat order, else 0.
int hom_dim(const WeylGroup& group, const GroupElement& v, const GroupElement& w);

// dim Ext^1(Delta_v, Delta_w), computed by descent recursion on w. With s
// the smallest right descent of w:
//   vs < v                 ->  ext1(vs, ws)
//   vs > v, vs not <= ws   ->  1 + ext1(v, ws)
//   vs > v, vs <= ws       ->  ext1(v, ws)
// and ext1 = 0 when v = w or v is not below w. The value is independent of
// which descent is chosen; the verification harness checks that.
int ext1_dim(const WeylGroup& group, const GroupElement& v, const GroupElement& w,
             ExtMemo& memo);

// One top-level step of the recursion with a forced descent s of w.
// Recursive calls go through the canonical smallest-descent path.
int ext1_dim_via_descent(const WeylGroup& group, const GroupElement& v,
                         const GroupElement& w, int s, ExtMemo& memo);

template <typename Value>
struct PairRow {
  GroupElement v, w;
  Value value;
};

// ext1 for every Bruhat-comparable ordered pair, rows sorted by
// (length, images) of v then of w.
std::vector<PairRow<int>> ext1_table(const WeylGroup& group);

}  // namespace rex
