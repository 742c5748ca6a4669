#include "doctest.h"

#include "fmlat/error.hpp"
#include "fmlat/matrix.hpp"
#include "fmlat/rational.hpp"

using namespace fmlat;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -1/3 ") == Rational(-1, 3));
  CHECK(to_string(Rational(-5, 10)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("parse_rational rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("2/"), InputError);
}

TEST_CASE("parse_rational_list") {
  auto v = parse_rational_list("1,0,-1/2,3");
  REQUIRE(v.size() == 4);
  CHECK(v[2] == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational_list("1,,2"), InputError);
}

TEST_CASE("to_int64") {
  CHECK(to_int64(Rational(-9)) == -9);
  CHECK_THROWS(to_int64(Rational(1, 2)));
}

TEST_CASE("determinant and inverse") {
  Matrix m{{2, 1}, {5, 3}};
  CHECK(m.determinant() == 1);
  CHECK(m * m.inverse() == Matrix::identity(2));
  Matrix s{{1, 2}, {2, 4}};
  CHECK(s.determinant() == 0);
  CHECK_THROWS_AS(s.inverse(), SingularMatrixError);
}

TEST_CASE("inverse with rational entries") {
  Matrix m{{Rational(1, 2), 3, 0}, {0, 1, Rational(2, 3)}, {1, 0, 1}};
  CHECK(m.inverse() * m == Matrix::identity(3));
}

TEST_CASE("first_difference reports 1-based position") {
  Matrix a{{1, 2}, {3, 4}};
  Matrix b{{1, 2}, {3, 5}};
  CHECK(first_difference(a, a).empty());
  CHECK(first_difference(a, b) == "(2,2): 4 vs 5");
}
