#pragma once

#include <string>
#include <vector>

namespace rex {

using IntMatrix = std::vector<std::vector<int>>;

// A Cartan matrix together with a display label. Entries follow the
// convention a(i,j) = 2(alpha_i, alpha_j) / (alpha_i, alpha_i), so row i
// lists the pairings <alpha_j, alpha_i^vee>. Simple roots are numbered
// 1..rank in Bourbaki order; products of irreducible types are block
// diagonal.
struct CartanDatum {
  std::string label;
  IntMatrix matrix;
  int rank = 0;
};

// Throws MalformedCartan unless the matrix is square with diagonal 2,
// nonpositive off-diagonal entries, and a(i,j) = 0 exactly when a(j,i) = 0.
void validate_cartan(const CartanDatum& datum);

// Builds a datum from a type label such as "A3", "B2", "G2" or a product
// "A1xA1". Supported families: A(n>=1), B(n>=2), C(n>=2), D(n>=3),
// E(6..8), F4, G2. Throws UnknownType otherwise.
CartanDatum cartan_from_label(const std::string& label);

// Reads a square integer matrix from a text file: one row per line,
// whitespace separated entries. Blank lines and lines starting with '#'
// are ignored. Throws MalformedCartan on shape or parse problems.
CartanDatum cartan_from_file(const std::string& path);

}  // namespace rex
