#include "rex/cartan.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "rex/errors.hpp"

namespace rex {

void validate_cartan(const CartanDatum& datum) {
  const auto& m = datum.matrix;
  int n = datum.rank;
  if (n <= 0) throw MalformedCartan("Cartan matrix must have positive rank");
  if (static_cast<int>(m.size()) != n)
    throw MalformedCartan("Cartan matrix row count does not match rank");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw MalformedCartan("Cartan matrix is not square");
    if (m[i][i] != 2)
      throw MalformedCartan("Cartan matrix diagonal entries must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0)
        throw MalformedCartan("Cartan matrix off-diagonal entries must be <= 0");
      if ((m[i][j] == 0) != (m[j][i] == 0))
        throw MalformedCartan("Cartan matrix entries a(i,j), a(j,i) must vanish together");
    }
  }
}

namespace {

IntMatrix blank_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

void bond(IntMatrix& m, int i, int j, int aij = -1, int aji = -1) {
  m[i][j] = aij;
  m[j][i] = aji;
}

// Bourbaki conventions. Chains are numbered 1..n left to right; for B the
// n-th root is short, for C long; D forks at node n-2; E hangs node 2 off
// node 4 of the chain 1-3-4-5-6..; F4 has short roots 3,4; G2 a short root 1.
IntMatrix irreducible_matrix(char family, int n) {
  IntMatrix m = blank_matrix(n);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) bond(m, i, i + 1);
  };
  switch (family) {
    case 'A':
      if (n < 1) throw UnknownType("type A requires rank >= 1");
      chain(n);
      return m;
    case 'B':
      if (n < 2) throw UnknownType("type B requires rank >= 2");
      chain(n - 1);
      bond(m, n - 2, n - 1, -1, -2);
      return m;
    case 'C':
      if (n < 2) throw UnknownType("type C requires rank >= 2");
      chain(n - 1);
      bond(m, n - 2, n - 1, -2, -1);
      return m;
    case 'D':
      if (n < 3) throw UnknownType("type D requires rank >= 3");
      chain(n - 1);
      bond(m, n - 3, n - 1);
      return m;
    case 'E':
      if (n < 6 || n > 8) throw UnknownType("type E requires rank 6, 7 or 8");
      // chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
      bond(m, 0, 2);
      for (int i = 2; i + 1 < n; ++i) bond(m, i, i + 1);
      bond(m, 1, 3);
      return m;
    case 'F':
      if (n != 4) throw UnknownType("type F requires rank 4");
      chain(4);
      bond(m, 1, 2, -1, -2);
      return m;
    case 'G':
      if (n != 2) throw UnknownType("type G requires rank 2");
      bond(m, 0, 1, -3, -1);
      return m;
    default:
      throw UnknownType(std::string("unknown type family '") + family + "'");
  }
}

}  // namespace

CartanDatum cartan_from_label(const std::string& label) {
  if (label.empty()) throw UnknownType("empty type label");
  std::vector<std::pair<char, int>> factors;
  std::size_t pos = 0;
  while (pos < label.size()) {
    char family = static_cast<char>(std::toupper(label[pos]));
    if (family < 'A' || family > 'G')
      throw UnknownType("unknown type label \"" + label + "\"");
    ++pos;
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(label[pos])) ++pos;
    if (start == pos) throw UnknownType("missing rank in type label \"" + label + "\"");
    int n = std::stoi(label.substr(start, pos - start));
    factors.emplace_back(family, n);
    if (pos < label.size()) {
      if (label[pos] != 'x' && label[pos] != 'X')
        throw UnknownType("unknown type label \"" + label + "\"");
      ++pos;
      if (pos == label.size())
        throw UnknownType("trailing 'x' in type label \"" + label + "\"");
    }
  }

  int total = 0;
  for (auto [family, n] : factors) total += n;
  IntMatrix m = blank_matrix(total);
  int offset = 0;
  std::string normalized;
  for (auto [family, n] : factors) {
    IntMatrix block = irreducible_matrix(family, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[offset + i][offset + j] = block[i][j];
    offset += n;
    if (!normalized.empty()) normalized += 'x';
    normalized += family;
    normalized += std::to_string(n);
  }

  CartanDatum datum{normalized, std::move(m), total};
  validate_cartan(datum);
  return datum;
}

CartanDatum cartan_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedCartan("cannot open Cartan matrix file \"" + path + "\"");
  IntMatrix m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::vector<int> entries;
    int x;
    while (row >> x) entries.push_back(x);
    if (!row.eof())
      throw MalformedCartan("non-integer entry in Cartan matrix file \"" + path + "\"");
    if (!entries.empty()) m.push_back(std::move(entries));
  }
  if (m.empty()) throw MalformedCartan("empty Cartan matrix file \"" + path + "\"");
  int rank = static_cast<int>(m.size());
  CartanDatum datum{"custom", std::move(m), rank};
  validate_cartan(datum);
  return datum;
}

}  // namespace rex
