#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rex/poly.hpp"
#include "rex/weyl.hpp"

namespace rex {

// Arithmetic in the prime field F_p for the small primes the oracle
// supports. Values are canonical representatives 0..p-1.
struct PrimeField {
  int p;
  explicit PrimeField(int modulus);

  int normalize(std::int64_t x) const {
    int r = static_cast<int>(x % p);
    return r < 0 ? r + p : r;
  }
  int add(int a, int b) const { return (a + b) % p; }
  int sub(int a, int b) const { return (a - b + p) % p; }
  int mul(int a, int b) const { return (a * b) % p; }
  int inv(int a) const;
};

// Row vectors over F_p.
using FqMatrix = std::vector<std::vector<int>>;

// A complete flag in F_p^n: nested subspaces of dimensions 1..n-1, each
// stored as its reduced row echelon basis, which is the canonical
// representative.
struct FlagOverFq {
  std::vector<FqMatrix> steps;
  bool operator==(const FlagOverFq&) const = default;
};

// In-place reduced row echelon form; returns the rank.
int row_reduce(FqMatrix& m, const PrimeField& field);
int rank_of(FqMatrix m, const PrimeField& field);

// span(e_1) c span(e_1,e_2) c ...
FlagOverFq standard_flag(int n);
// span(e_n) c span(e_n,e_{n-1}) c ...
FlagOverFq opposite_flag(int n);

// Number of complete flags in F_p^n, prod_{k=1..n} (p^k - 1)/(p - 1).
std::int64_t flag_count(int n, const PrimeField& field);

// Streams every complete flag exactly once, in a fixed deterministic
// order. Requires 2 <= n <= 4; throws BudgetExceeded (carrying the exact
// predicted count) if flag_count(n, p) > budget.
void enumerate_flags(int n, const PrimeField& field,
                     const std::function<void(const FlagOverFq&)>& visit,
                     std::int64_t budget = 10'000'000);

// The permutation u with dim(F_i n G_j) = #{k <= i : u(k) <= j}, returned
// as an element of the type A_{n-1} group. Both flags must live in the
// same F_p^n.
GroupElement relative_position(const WeylGroup& group, const FlagOverFq& F,
                               const FlagOverFq& G, const PrimeField& field);

// Point count of the open Richardson variety C^v n C_w over F_p, by brute
// enumeration: flags F with relative_position(F, standard) = w and
// relative_position(F, opposite) = w0 v. The orientation is calibrated so
// that the count equals R_{v,w}(p); in particular count(v, v) = 1 and
// count(e, s) = p - 1. Type A only.
std::int64_t count_richardson(const WeylGroup& group, const GroupElement& v,
                              const GroupElement& w, const PrimeField& field,
                              std::int64_t budget = 10'000'000);

// All Richardson point counts of F_p^n in one pass over the flags, indexed
// by [v][w] in the (length, images) order of group.enumerate().
std::vector<std::vector<std::int64_t>> richardson_count_table(
    const WeylGroup& group, const PrimeField& field, std::int64_t budget = 10'000'000);

// Degree-bounded Lagrange interpolation of the point counts: recovers the
// unique integer polynomial of degree <= l(w) - l(v) through the counts at
// the given primes. Throws InsufficientPoints unless there are at least
// l(w) - l(v) + 1 distinct primes.
IntPolynomial interpolate_r(const WeylGroup& group, const GroupElement& v,
                            const GroupElement& w, const std::vector<PrimeField>& fields,
                            std::int64_t budget = 10'000'000);

}  // namespace rex
