#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deq/literal.hpp"
#include "deq/matrix.hpp"
#include "support.hpp"

using namespace deq;
using deq::testing::mat;
using deq::testing::random_matrix;
using deq::testing::random_scalar;
using deq::testing::vec;

namespace {

std::vector<Field> sample_fields() {
  return {Field::rationals(), Field::prime(2), Field::prime(5), Field::prime(7),
          Field::rational_functions({"a", "b"})};
}

}  // namespace

TEST_CASE("field construction validates its parameters") {
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_NOTHROW(Field::prime(65521));
  CHECK_THROWS_AS(Field::rational_functions({}), std::invalid_argument);
  CHECK_THROWS_AS(Field::rational_functions({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Field::rational_functions({""}), std::invalid_argument);
  CHECK_THROWS_AS(Field::rational_functions({"2x"}), std::invalid_argument);
  CHECK(Field::rational_functions({"a", "b", "c"}).header() == "QFUN a,b,c");
  CHECK(Field::prime(5).header() == "F 5");
  CHECK(Field::rationals().header() == "Q");
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937_64 rng(11);
  for (const auto& f : sample_fields()) {
    CAPTURE(f.header());
    const int rounds = f.kind() == FieldKind::rational_functions ? 40 : 300;
    for (int t = 0; t < rounds; ++t) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("scalars print canonically and reparse to themselves") {
  std::mt19937_64 rng(12);
  for (const auto& f : sample_fields()) {
    for (int t = 0; t < 50; ++t) {
      const Scalar s = random_scalar(f, rng);
      const Scalar again = f.parse(s.to_string());
      CHECK(again == s);
      CHECK(f.parse(again.to_string()).to_string() == s.to_string());
    }
  }
}

TEST_CASE("rational functions reduce to coprime form with normalized denominator") {
  const Field f = Field::rational_functions({"a", "b", "q"});
  CHECK(f.parse("(a^2 - 1)/(a - 1)") == f.parse("a + 1"));
  CHECK(f.parse("(a^2 - 1)/(a - 1)").to_string() == "a + 1");
  CHECK(f.parse("(2*a)/(4*b)") == f.parse("a/(2*b)"));
  CHECK(f.parse("1/(2*q)").to_string() == "1/2/q");
  CHECK(f.parse("q - q^-1").to_string() == "(q^2 - 1)/q");
  CHECK(f.parse("(a*b - b^2)/(a^2 - b^2)").to_string() == "b/(a + b)");
  CHECK(f.parse("a*b - 2*b").to_string() == "a*b - 2*b");
  CHECK(f.parse("(a+b)^2/(a+b)") == f.parse("a+b"));
  CHECK((f.parse("a") - f.parse("a")).is_zero());
  // sign convention: denominator -x is stored as x with negated numerator
  CHECK(f.parse("1/(-q)").to_string() == "-1/q");
}

TEST_CASE("multivariate gcd") {
  const auto vars = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"x", "y", "z"});
  const auto x = Polynomial::variable(vars, 0), y = Polynomial::variable(vars, 1), z = Polynomial::variable(vars, 2);
  const auto one = Polynomial::constant(vars, 1);
  CHECK(gcd((x + y) * (x - y), (x + y) * (x + y)) == x + y);
  CHECK(gcd(x * y * z, y * z * z) == y * z);
  CHECK(gcd(x + one, y + one) == one);
  const auto g = (x * y + z) * (x - one);
  CHECK(gcd(g * (y + z), g * (x * x + y)) == g.monic());
  CHECK(gcd(Polynomial(vars), x.scaled(3)) == x);
}

TEST_CASE("literal errors report a column") {
  const Field q = Field::rationals();
  try {
    q.parse("1 + x");
    FAIL("expected a LiteralError");
  } catch (const LiteralError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(q.parse("1/0"), LiteralError);
  CHECK_THROWS_AS(q.parse(""), LiteralError);
  CHECK_THROWS_AS(q.parse("(1"), LiteralError);
  CHECK_THROWS_AS(Field::prime(5).parse("1/5"), LiteralError);
  CHECK(Field::prime(5).parse("7") == Field::prime(5).from_integer(2));
  CHECK(Field::prime(5).parse("-1") == Field::prime(5).from_integer(4));
  CHECK(Field::prime(7).parse("3/2") == Field::prime(7).from_integer(5));
  CHECK(q.parse("-3/6") == q.from_rational(mpq_class(-1, 2)));
}

TEST_CASE("mixing fields is rejected") {
  const Scalar a = Field::prime(5).one();
  const Scalar b = Field::prime(7).one();
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * Field::rationals().one(), std::invalid_argument);
  CHECK_THROWS_AS(Matrix::identity(Field::prime(5), 2) * Matrix::identity(Field::prime(7), 2), std::invalid_argument);
}

TEST_CASE("solve_linear") {
  const Field q = Field::rationals();
  SUBCASE("identity") {
    auto x = solve_linear(Matrix::identity(q, 2), vec(q, {1, 2}));
    REQUIRE(x);
    CHECK(*x == vec(q, {1, 2}));
  }
  SUBCASE("inconsistent") {
    CHECK_FALSE(solve_linear(mat(q, {{"1", "1"}, {"1", "1"}}), vec(q, {1, 0})));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(solve_linear(Matrix::identity(q, 2), vec(q, {1, 2, 3})), std::invalid_argument);
  }
  SUBCASE("random F5 systems verify by multiplying back") {
    const Field f5 = Field::prime(5);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
      const Matrix a = random_matrix(f5, 6, 6, rng);
      Vector x(f5, 6);
      for (std::size_t i = 0; i < 6; ++i) x[i] = random_scalar(f5, rng);
      const Vector b = a * x;
      const auto sol = solve_linear(a, b);
      REQUIRE(sol);
      CHECK(a * *sol == b);
    }
  }
}

TEST_CASE("kernel_basis") {
  const Field q = Field::rationals();
  CHECK(kernel_basis(Matrix::identity(q, 3)).empty());
  CHECK(kernel_basis(Matrix(q, 2, 2)).size() == 2);
  const Matrix a = mat(q, {{"1", "1"}, {"2", "2"}});
  const auto k = kernel_basis(a);
  REQUIRE(k.size() == 1);
  CHECK((a * k[0]).is_zero());
  CHECK(k[0][0] == -k[0][1]);
  CHECK(rank(a) + k.size() == 2);

  std::mt19937_64 rng(9);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    for (int t = 0; t < 30; ++t) {
      Matrix m = random_matrix(f, 4, 6, rng);
      // force some dependency
      for (std::size_t c = 0; c < 6; ++c) m(3, c) = m(0, c) + m(1, c);
      const auto basis = kernel_basis(m);
      CHECK(rank(m) + basis.size() == 6);
      for (const auto& v : basis) CHECK((m * v).is_zero());
      CHECK(Subspace(f, 6, basis).dimension() == basis.size());
    }
  }
}

TEST_CASE("span_and_membership") {
  const Field q = Field::rationals();
  CHECK(Subspace(q, 2, {vec(q, {1, 0}), vec(q, {0, 1})}).dimension() == 2);
  const Subspace line(q, 2, {vec(q, {1, 1}), vec(q, {2, 2})});
  CHECK(line.dimension() == 1);
  CHECK(line.contains(vec(q, {-3, -3})));
  CHECK_FALSE(line.contains(vec(q, {1, 0})));
  // relations b*c21, b*(c22 - c11), c*c21, c*(c22 - c11) at b = c = 1,
  // coordinates ordered c11, c12, c21, c22
  const Subspace rel(q, 4, {vec(q, {0, 0, 1, 0}), vec(q, {-1, 0, 0, 1}), vec(q, {0, 0, 1, 0}), vec(q, {-1, 0, 0, 1})});
  CHECK(rel.dimension() == 2);
  CHECK(rel.contains(vec(q, {2, 0, 5, -2})));
  CHECK_FALSE(rel.contains(vec(q, {0, 1, 0, 0})));
  // reduced echelon basis
  CHECK(rel.basis()[0] == vec(q, {1, 0, 0, -1}));
  CHECK(rel.basis()[1] == vec(q, {0, 0, 1, 0}));
}

TEST_CASE("matrix_inverse") {
  const Field q = Field::rationals();
  CHECK(*matrix_inverse(Matrix::identity(q, 4)) == Matrix::identity(q, 4));
  CHECK(*matrix_inverse(mat(q, {{"2", "0"}, {"0", "3"}})) == mat(q, {{"1/2", "0"}, {"0", "1/3"}}));
  CHECK_FALSE(matrix_inverse(mat(q, {{"1", "2"}, {"2", "4"}})));
  CHECK_THROWS_AS(matrix_inverse(Matrix(q, 2, 3)), std::invalid_argument);

  const Field f7 = Field::prime(7);
  std::mt19937_64 rng(7);
  int found = 0;
  while (found < 30) {
    const Matrix a = random_matrix(f7, 4, 4, rng);
    const auto inv = matrix_inverse(a);
    if (!inv) {
      CHECK(rank(a) < 4);
      continue;
    }
    ++found;
    CHECK(a * *inv == Matrix::identity(f7, 4));
    CHECK(*inv * a == Matrix::identity(f7, 4));
  }

  const Field fx = Field::rational_functions({"t"});
  const Matrix m = mat(fx, {{"t", "1"}, {"0", "t"}});
  const auto mi = matrix_inverse(m);
  REQUIRE(mi);
  CHECK(m * *mi == Matrix::identity(fx, 2));
}
