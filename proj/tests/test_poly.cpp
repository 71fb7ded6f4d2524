#include <doctest.h>

#include "rex/errors.hpp"
#include "rex/poly.hpp"

using rex::IntPolynomial;

TEST_SUITE_BEGIN("poly");

TEST_CASE("basic arithmetic") {
  IntPolynomial q_minus_1 = IntPolynomial::q_minus_one();
  CHECK(q_minus_1.coefficient(1) == 1);
  CHECK(q_minus_1.coefficient(0) == -1);
  CHECK(q_minus_1.evaluate(3) == 2);

  IntPolynomial square = q_minus_1 * q_minus_1;
  CHECK(square == IntPolynomial({1, -2, 1}));
  CHECK(square.degree() == 2);

  IntPolynomial cube = square * q_minus_1;
  CHECK(cube == IntPolynomial({-1, 3, -3, 1}));
  CHECK(cube.evaluate(2) == 1);
  CHECK(cube.evaluate(5) == 64);
}

TEST_CASE("zero handling and trimming") {
  IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(IntPolynomial({0, 0, 0}).is_zero());
  CHECK(IntPolynomial({1, 2, 0, 0}) == IntPolynomial({1, 2}));
  CHECK((zero * IntPolynomial::q_minus_one()).is_zero());
  CHECK((IntPolynomial({1, 1}) - IntPolynomial({1, 1})).is_zero());
  CHECK(zero.evaluate(7) == 0);
  CHECK(zero.coefficient(0) == 0);
}

TEST_CASE("shift and scale") {
  IntPolynomial p({-1, 2});
  CHECK(p.shifted(2) == IntPolynomial({0, 0, -1, 2}));
  CHECK(p.scaled(-3) == IntPolynomial({3, -6}));
  CHECK(IntPolynomial::monomial(3) == IntPolynomial({0, 0, 0, 1}));
  CHECK(IntPolynomial::constant(5).degree() == 0);
}

TEST_CASE("rendering") {
  IntPolynomial r({-1, 2, -2, 1});
  CHECK(r.to_coeff_list() == "[-1, 2, -2, 1]");
  CHECK(r.to_string() == "q^3 - 2q^2 + 2q - 1");
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial().to_coeff_list() == "[]");
  CHECK(IntPolynomial({0, 1}).to_string() == "q");
  CHECK(IntPolynomial({-1, 1}).to_string() == "q - 1");
  CHECK(IntPolynomial({2}).to_string() == "2");
  CHECK(IntPolynomial({0, 0, -1}).to_string() == "-q^2");
}

TEST_CASE("overflow is detected, not wrapped") {
  IntPolynomial big({std::int64_t{1} << 62});
  CHECK_THROWS_AS(big * big, rex::OverflowError);
  CHECK_THROWS_AS(big + big, rex::OverflowError);
  IntPolynomial q_squared({0, 0, 1});
  CHECK_THROWS_AS(q_squared.evaluate(std::int64_t{1} << 40), rex::OverflowError);
}

TEST_SUITE_END();
