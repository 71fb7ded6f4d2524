#include "rex/poly.hpp"

#include <sstream>

#include "rex/checked.hpp"

namespace rex {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
  return IntPolynomial({c});
}

IntPolynomial IntPolynomial::monomial(int k, std::int64_t c) {
  std::vector<std::int64_t> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q_minus_one() { return IntPolynomial({-1, 1}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<std::int64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = checked_add(coefficient(static_cast<int>(i)),
                         other.coefficient(static_cast<int>(i)));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<std::int64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = checked_sub(coefficient(static_cast<int>(i)),
                         other.coefficient(static_cast<int>(i)));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return zero();
  std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(std::int64_t c) const {
  std::vector<std::int64_t> out(coeffs_);
  for (auto& x : out) x = checked_mul(x, c);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero()) return zero();
  std::vector<std::int64_t> out(coeffs_.size() + k, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::int64_t IntPolynomial::evaluate(std::int64_t q0) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checked_add(checked_mul(acc, q0), *it);
  return acc;
}

std::string IntPolynomial::to_coeff_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || k == 0) os << a;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace rex
