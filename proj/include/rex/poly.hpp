#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rex {

// Dense integer polynomial in one variable q. Coefficients are stored in
// ascending order of degree with trailing zeros trimmed; the zero polynomial
// has an empty coefficient vector. Arithmetic is exact 64-bit, overflow
// raises OverflowError.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> ascending_coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(std::int64_t c);
  // c * q^k
  static IntPolynomial monomial(int k, std::int64_t c = 1);
  // the factor q - 1
  static IntPolynomial q_minus_one();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int k) const;
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial scaled(std::int64_t c) const;
  // multiply by q^k
  IntPolynomial shifted(int k) const;

  std::int64_t evaluate(std::int64_t q0) const;

  bool operator==(const IntPolynomial& other) const = default;

  // "[-1, 2, -2, 1]", ascending coefficients
  std::string to_coeff_list() const;
  // "q^3 - 2q^2 + 2q - 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace rex
