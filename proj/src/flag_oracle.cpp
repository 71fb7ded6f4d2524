#include "rex/flag_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rex/checked.hpp"
#include "rex/errors.hpp"

namespace rex {

PrimeField::PrimeField(int modulus) : p(modulus) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw TypeUnsupported("prime modulus must be one of 2, 3, 5, 7");
}

int PrimeField::inv(int a) const {
  // Fermat: a^(p-2) mod p
  int r = 1;
  for (int e = p - 2; e > 0; --e) r = mul(r, a);
  return r;
}

int row_reduce(FqMatrix& m, const PrimeField& field) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    int scale = field.inv(m[rank][col]);
    for (int c = col; c < cols; ++c) m[rank][c] = field.mul(m[rank][c], scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      int factor = m[r][col];
      for (int c = col; c < cols; ++c)
        m[r][c] = field.sub(m[r][c], field.mul(factor, m[rank][c]));
    }
    ++rank;
  }
  m.resize(rank);
  return rank;
}

int rank_of(FqMatrix m, const PrimeField& field) { return row_reduce(m, field); }

FlagOverFq standard_flag(int n) {
  FlagOverFq flag;
  for (int i = 1; i < n; ++i) {
    FqMatrix basis(i, std::vector<int>(n, 0));
    for (int r = 0; r < i; ++r) basis[r][r] = 1;
    flag.steps.push_back(std::move(basis));
  }
  return flag;
}

FlagOverFq opposite_flag(int n) {
  FlagOverFq flag;
  for (int i = 1; i < n; ++i) {
    // span(e_n, ..., e_{n-i+1}), rows already in echelon order
    FqMatrix basis(i, std::vector<int>(n, 0));
    for (int r = 0; r < i; ++r) basis[r][n - i + r] = 1;
    flag.steps.push_back(std::move(basis));
  }
  return flag;
}

std::int64_t flag_count(int n, const PrimeField& field) {
  std::int64_t total = 1;
  for (int k = 1; k <= n; ++k) {
    std::int64_t level = (checked_pow(field.p, k) - 1) / (field.p - 1);
    total = checked_mul(total, level);
  }
  return total;
}

namespace {

// Canonical coset representatives mod the current subspace: vectors that
// vanish on the pivot columns. Monic ones (first nonzero entry 1) name the
// lines of the quotient exactly once.
void visit_lines_in_quotient(int n, const PrimeField& field,
                             const std::vector<bool>& is_pivot,
                             const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  int m = static_cast<int>(free_cols.size());
  std::vector<int> v(n, 0);
  for (int lead = 0; lead < m; ++lead) {
    v.assign(n, 0);
    v[free_cols[lead]] = 1;
    int tail = m - lead - 1;  // free columns after the leading one
    std::vector<int> digits(tail, 0);
    for (;;) {
      for (int t = 0; t < tail; ++t) v[free_cols[lead + 1 + t]] = digits[t];
      visit(v);
      int t = tail - 1;
      while (t >= 0 && digits[t] == field.p - 1) digits[t--] = 0;
      if (t < 0) break;
      ++digits[t];
    }
  }
}

void enumerate_from(FlagOverFq& flag, FqMatrix& basis, int n, const PrimeField& field,
                    const std::function<void(const FlagOverFq&)>& visit) {
  if (static_cast<int>(basis.size()) == n - 1) {
    visit(flag);
    return;
  }
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : basis) {
    for (int c = 0; c < n; ++c)
      if (row[c] != 0) {
        is_pivot[c] = true;
        break;
      }
  }
  visit_lines_in_quotient(n, field, is_pivot, [&](const std::vector<int>& v) {
    FqMatrix next(basis);
    next.push_back(v);
    row_reduce(next, field);
    flag.steps.push_back(next);
    FqMatrix saved;
    std::swap(saved, basis);
    basis = std::move(next);
    enumerate_from(flag, basis, n, field, visit);
    basis = std::move(saved);
    flag.steps.pop_back();
  });
}

}  // namespace

void enumerate_flags(int n, const PrimeField& field,
                     const std::function<void(const FlagOverFq&)>& visit,
                     std::int64_t budget) {
  if (n < 2 || n > 4)
    throw TypeUnsupported("flag enumeration supports 2 <= n <= 4");
  std::int64_t predicted = flag_count(n, field);
  if (predicted > budget)
    throw BudgetExceeded("flag enumeration over F_" + std::to_string(field.p) +
                             "^" + std::to_string(n) + " needs " +
                             std::to_string(predicted) + " flags, budget is " +
                             std::to_string(budget),
                         predicted);
  FlagOverFq flag;
  FqMatrix basis;
  enumerate_from(flag, basis, n, field, visit);
}

GroupElement relative_position(const WeylGroup& group, const FlagOverFq& F,
                               const FlagOverFq& G, const PrimeField& field) {
  int n = static_cast<int>(F.steps.size()) + 1;
  if (static_cast<int>(G.steps.size()) + 1 != n)
    throw BadIndex("flags live in different spaces");
  if (group.rank() + 1 != n)
    throw TypeUnsupported("relative position needs the type A group of rank n - 1");

  auto step = [n](const FlagOverFq& flag, int i) -> const FqMatrix* {
    if (i == 0 || i == n) return nullptr;
    return &flag.steps[i - 1];
  };

  // d[i][j] = dim(F_i n G_j) = i + j - rank(F_i stacked on G_j)
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == 0 || j == 0) {
        d[i][j] = 0;
        continue;
      }
      if (i == n) {
        d[i][j] = j;
        continue;
      }
      if (j == n) {
        d[i][j] = i;
        continue;
      }
      FqMatrix stacked(*step(F, i));
      const FqMatrix& gj = *step(G, j);
      stacked.insert(stacked.end(), gj.begin(), gj.end());
      d[i][j] = i + j - rank_of(std::move(stacked), field);
    }
  }

  std::vector<int> perm(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int delta = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
      if (delta == 1) {
        if (perm[i - 1] != 0) throw std::logic_error("relative position is not a permutation");
        perm[i - 1] = j;
      }
    }
    if (perm[i - 1] == 0) throw std::logic_error("relative position is not a permutation");
  }
  return element_from_permutation(group, perm);
}

std::int64_t count_richardson(const WeylGroup& group, const GroupElement& v,
                              const GroupElement& w, const PrimeField& field,
                              std::int64_t budget) {
  if (!is_type_a(group.roots()))
    throw TypeUnsupported("Richardson point counts are implemented for type A only");
  int n = group.rank() + 1;
  FlagOverFq std_flag = standard_flag(n);
  FlagOverFq opp_flag = opposite_flag(n);
  // C_w = {F : rel(F, standard) = w} and C^v = {F : rel(F, opposite) = w0 v},
  // compared through the inverse law.
  GroupElement target_std = group.inverse(w);
  GroupElement target_opp = group.inverse(group.multiply(group.longest_element(), v));
  std::int64_t count = 0;
  enumerate_flags(
      n, field,
      [&](const FlagOverFq& flag) {
        if (relative_position(group, std_flag, flag, field) == target_std &&
            relative_position(group, opp_flag, flag, field) == target_opp)
          ++count;
      },
      budget);
  return count;
}

std::vector<std::vector<std::int64_t>> richardson_count_table(
    const WeylGroup& group, const PrimeField& field, std::int64_t budget) {
  if (!is_type_a(group.roots()))
    throw TypeUnsupported("Richardson point counts are implemented for type A only");
  int n = group.rank() + 1;
  auto elements = group.enumerate();
  std::unordered_map<GroupElement, int, ElementHash> index;
  for (std::size_t k = 0; k < elements.size(); ++k)
    index.emplace(elements[k], static_cast<int>(k));

  FlagOverFq std_flag = standard_flag(n);
  FlagOverFq opp_flag = opposite_flag(n);
  const GroupElement& w0 = group.longest_element();
  std::vector<std::vector<std::int64_t>> counts(
      elements.size(), std::vector<std::int64_t>(elements.size(), 0));
  enumerate_flags(
      n, field,
      [&](const FlagOverFq& flag) {
        GroupElement w = group.inverse(relative_position(group, std_flag, flag, field));
        GroupElement v = group.multiply(
            w0, group.inverse(relative_position(group, opp_flag, flag, field)));
        ++counts[index.at(v)][index.at(w)];
      },
      budget);
  return counts;
}

namespace {

struct Frac {
  std::int64_t num = 0, den = 1;

  static Frac make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  static Frac of(std::int64_t n) { return {n, 1}; }

  Frac operator+(const Frac& o) const {
    return make(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                checked_mul(den, o.den));
  }
  Frac operator-(const Frac& o) const {
    return make(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
                checked_mul(den, o.den));
  }
  Frac operator*(const Frac& o) const {
    return make(checked_mul(num, o.num), checked_mul(den, o.den));
  }
  Frac operator/(const Frac& o) const {
    if (o.num == 0) throw std::logic_error("division by zero fraction");
    return make(checked_mul(num, o.den), checked_mul(den, o.num));
  }
  bool is_integer() const { return den == 1; }
};

}  // namespace

IntPolynomial interpolate_r(const WeylGroup& group, const GroupElement& v,
                            const GroupElement& w, const std::vector<PrimeField>& fields,
                            std::int64_t budget) {
  std::vector<int> primes;
  for (const auto& f : fields)
    if (std::find(primes.begin(), primes.end(), f.p) == primes.end())
      primes.push_back(f.p);
  int degree_bound = std::max(group.length(w) - group.length(v), 0);
  if (static_cast<int>(primes.size()) < degree_bound + 1)
    throw InsufficientPoints("need at least " + std::to_string(degree_bound + 1) +
                             " distinct primes, got " + std::to_string(primes.size()));

  std::vector<Frac> x, table;
  for (int p : primes) {
    x.push_back(Frac::of(p));
    table.push_back(Frac::of(count_richardson(group, v, w, PrimeField(p), budget)));
  }

  // Newton divided differences, then expansion to monomial coefficients.
  int m = static_cast<int>(primes.size());
  for (int level = 1; level < m; ++level)
    for (int k = m - 1; k >= level; --k)
      table[k] = (table[k] - table[k - 1]) / (x[k] - x[k - level]);

  std::vector<Frac> coeffs(m, Frac::of(0));
  for (int k = m - 1; k >= 0; --k) {
    // coeffs <- coeffs * (q - x_k) + table[k]
    for (int j = m - 1; j >= 1; --j)
      coeffs[j] = coeffs[j - 1] - coeffs[j] * x[k];
    coeffs[0] = table[k] - coeffs[0] * x[k];
  }

  std::vector<std::int64_t> out;
  for (int j = 0; j < m; ++j) {
    if (!coeffs[j].is_integer())
      throw std::runtime_error("point counts do not interpolate an integer polynomial");
    out.push_back(coeffs[j].num);
  }
  IntPolynomial result(std::move(out));
  if (result.degree() > degree_bound)
    throw std::runtime_error("point counts exceed the dimension degree bound");
  return result;
}

}  // namespace rex
