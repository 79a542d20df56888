#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deq/tensor_ops.hpp"
#include "support.hpp"

using namespace deq;
using namespace deq::testing;

namespace {

const Field qabc = Field::rational_functions({"a", "b", "c"});
const Field qq = Field::rational_functions({"q"});

EndoPair jordan(const Field& f) {
  return EndoPair(mat(f, {{"a*b", "a*c", "b", "c"}, {"0", "a*b", "0", "b"}, {"0", "0", "a*b", "a*c"}, {"0", "0", "0", "a*b"}}));
}

EndoPair block_family(const Field& f, const std::string& c, const std::string& d) {
  return EndoPair(mat(f, {{"1", "0", "0", "0"}, {"0", "1", c, "0"}, {"0", d, "1", "0"}, {"0", "0", "0", "1"}}));
}

EndoPair yb_operator(const Field& f, const std::string& q) {
  const std::string off = q + " - 1/(" + q + ")";
  return EndoPair(mat(f, {{q, "0", "0", "0"}, {"0", "1", off, "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", q}}));
}

EndoPair r_q(const Field& f) {
  return EndoPair(mat(f, {{"0", "-q", "0", "-q^2"}, {"0", "1", "0", "q"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}}));
}

// Image of basis vector index col under the operator that applies r to the
// two tensor factors named by slot, computed straight from coefficients.
Vector direct_lift_column(const EndoPair& r, Slot slot, std::size_t col) {
  const std::size_t n = r.n();
  const std::size_t t[3] = {col / (n * n), (col / n) % n, col % n};
  std::size_t first = 0, second = 1;
  if (slot == Slot::s13) second = 2;
  if (slot == Slot::s23) first = 1, second = 2;
  Vector out(r.field(), n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t s[3] = {t[0], t[1], t[2]};
      s[first] = i;
      s[second] = j;
      // R(m_v ⊗ m_u) with v = t[first], u = t[second]
      out[s[0] * n * n + s[1] * n + s[2]] += r.x(t[second], t[first], j, i);
    }
  return out;
}

}  // namespace

TEST_CASE("serialization reproduces the printed Kronecker example") {
  const Matrix f = mat(qabc, {{"a", "1"}, {"0", "a"}});
  const Matrix g = mat(qabc, {{"b", "c"}, {"0", "b"}});
  CHECK(product_solution(f, g) == jordan(qabc));
  const EndoPair r = jordan(qabc);
  // coefficients on m_1⊗m_1 of R(m_1⊗m_2), R(m_2⊗m_2), R(m_2⊗m_1)
  CHECK(r.x(1, 0, 0, 0) == qabc.parse("a*c"));
  CHECK(r.x(1, 1, 0, 0) == qabc.parse("c"));
  CHECK(r.x(0, 1, 0, 0) == qabc.parse("b"));
  CHECK_THROWS_AS(EndoPair(Matrix(qabc, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(EndoPair(Matrix(qabc, 4, 2)), std::invalid_argument);
}

TEST_CASE("lifts") {
  const Field f3 = Field::prime(3);
  for (Slot s : {Slot::s12, Slot::s13, Slot::s23}) {
    CHECK(lift(EndoPair::identity(f3, 2), s).m == Matrix::identity(f3, 8));
  }
  const Matrix t12 = lift(EndoPair::flip(f3, 2), Slot::s12).m;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) CHECK(t12(b * 4 + a * 2 + c, a * 4 + b * 2 + c).is_one());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    for (std::size_t n : {2u, 3u}) {
      const EndoPair r = random_endo(f3, n, rng);
      for (Slot s : {Slot::s12, Slot::s13, Slot::s23}) {
        const Matrix m = lift(r, s).m;
        for (std::size_t col = 0; col < n * n * n; ++col) CHECK(m.column(col) == direct_lift_column(r, s, col));
      }
      const Matrix p = flip23(f3, n);
      CHECK(lift(r, Slot::s13).m == p * lift(r, Slot::s12).m * p);
    }
  }
}

TEST_CASE("check_d examples") {
  const Field q = Field::rationals();
  CHECK(check_d(EndoPair::identity(q, 3)));
  CHECK(check_d(EndoPair::zero(q, 2)));
  CHECK(check_d(jordan(qabc)));

  std::mt19937_64 rng(4);
  for (const auto& f : {Field::rationals(), Field::prime(5), Field::rational_functions({"a", "b"})}) {
    for (std::size_t n : {2u, 3u}) CHECK(check_d(diagonal_solution(random_matrix(f, n, n, rng))));
  }
  CHECK(check_d(block_family(q, "0", "0")));
  CHECK_FALSE(check_d(block_family(q, "1", "0")));
  CHECK_FALSE(check_d(block_family(q, "0", "1")));
  CHECK_FALSE(check_d(yb_operator(qq, "q")));
  CHECK_FALSE(check_d(yb_operator(q, "2")));
  CHECK(check_qybe(yb_operator(qq, "q")));

  const auto bad = first_d_violation(yb_operator(q, "2"));
  REQUIRE(bad);
  CHECK_FALSE(check_d_coordinates(yb_operator(q, "2")));
}

TEST_CASE("coordinate and operator verdicts agree everywhere") {
  int solutions = 0;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    const EndoPair r = f2_candidate(mask);
    const bool c = check_d_coordinates(r);
    REQUIRE(c == check_d_operator(r));
    solutions += c;
  }
  CHECK(solutions > 0);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const EndoPair r = random_endo(Field::prime(5), 2, rng);
    CHECK(check_d_coordinates(r) == check_d_operator(r));
  }
  for (int t = 0; t < 20; ++t) {
    const EndoPair r = random_endo(Field::rational_functions({"a"}), 2, rng);
    CHECK(check_d_coordinates(r) == check_d_operator(r));
  }
}

TEST_CASE("check_commuting_pair") {
  const Field f5 = Field::prime(5);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const EndoPair r = random_endo(f5, 2, rng);
    CHECK(check_commuting_pair(r, EndoPair::identity(f5, 2)));
    const EndoPair s = random_endo(f5, 2, rng);
    check_commuting_pair(r, s);  // throws if the two paths disagree
  }
  int bijective = 0;
  for (int t = 0; t < 200 && bijective < 30; ++t) {
    const Matrix f = random_matrix(f5, 2, 2, rng);
    const Matrix g = f * f + Matrix::identity(f5, 2).scaled(f5.from_integer(t));
    const EndoPair r = product_solution(f, g);
    CHECK(check_commuting_pair(r, r));
    if (const auto inv = invert(r)) {
      ++bijective;
      CHECK(check_commuting_pair(r, *inv));
      CHECK(check_d(*inv));
    }
  }
  CHECK(bijective == 30);
  CHECK_THROWS_AS(check_commuting_pair(EndoPair::identity(f5, 2), EndoPair::identity(f5, 3)), std::invalid_argument);
  CHECK_THROWS_AS(check_commuting_pair(EndoPair::identity(f5, 2), EndoPair::identity(Field::prime(7), 2)),
                  std::invalid_argument);
}

TEST_CASE("qybe, hopf and pentagon") {
  const Field q = Field::rationals();
  const EndoPair id = EndoPair::identity(q, 2);
  CHECK(check_qybe(id));
  CHECK(check_hopf(id));
  CHECK(check_pentagon(id));
  CHECK(check_qybe(jordan(qabc)));
  CHECK(check_hopf(r_q(qq)));
  const Matrix tau = EndoPair::flip(qq, 2).matrix();
  CHECK(check_pentagon(EndoPair(tau * r_q(qq).matrix() * tau)));
  CHECK(check_d(r_q(qq)));
  CHECK_FALSE(check_hopf(yb_operator(q, "2")));
}

TEST_CASE("equivalent forms") {
  const Field q = Field::rationals();
  const auto id = check_equivalent_forms(EndoPair::identity(q, 2));
  CHECK((id.d && id.consistent()));
  const auto yb = check_equivalent_forms(yb_operator(qq, "q"));
  CHECK((!yb.d && yb.consistent()));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) {
    const auto forms = check_equivalent_forms(f2_candidate(static_cast<std::uint32_t>(rng() & 0xffff)));
    CHECK(forms.consistent());
  }
  for (int t = 0; t < 50; ++t) CHECK(check_equivalent_forms(random_endo(Field::prime(3), 2, rng)).consistent());
  CHECK(check_equivalent_forms(diagonal_solution(random_matrix(Field::prime(3), 3, 3, rng))).consistent());

  // the uncorrected W-form rejects this diagonal solution
  const auto e = check_equivalent_forms(f2_candidate(1u << 5));
  CHECK((e.d && e.consistent()));
  CHECK_FALSE(e.form_w_printed);
}

TEST_CASE("conjugation") {
  const Field f3 = Field::prime(3);
  std::mt19937_64 rng(9);
  const EndoPair r = random_endo(f3, 2, rng);
  CHECK(conjugate(r, Matrix::identity(f3, 2)) == r);
  CHECK_THROWS_AS(conjugate(r, Matrix(f3, 2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(conjugate(r, Matrix::identity(f3, 3)), std::invalid_argument);

  const Field q = Field::rationals();
  const Matrix a = mat(q, {{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}});
  const Matrix perm = mat(q, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}});
  // u m_i = m_{i-1} moves the weight a(i,j) to m_{π(i)}⊗m_{π(j)}
  Matrix moved(q, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) moved((i + 2) % 3, (j + 2) % 3) = a(i, j);
  CHECK(conjugate(diagonal_solution(a), perm) == diagonal_solution(moved));

  for (int t = 0; t < 40; ++t) {
    const Matrix f = random_matrix(f3, 2, 2, rng);
    const EndoPair sol = rng() % 2 ? product_solution(f, f * f) : diagonal_solution(f);
    REQUIRE(check_d(sol));
    CHECK(check_d(conjugate(sol, random_invertible(f3, 2, rng))));
    const EndoPair any = random_endo(f3, 2, rng);
    CHECK(check_d(conjugate(any, random_invertible(f3, 2, rng))) == check_d(any));
  }
}

TEST_CASE("product, diagonal and inverse") {
  const Field f5 = Field::prime(5);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const Matrix f = random_matrix(f5, 2, 2, rng), g = random_matrix(f5, 2, 2, rng);
    CHECK(product_solution(f, g).matrix() == kronecker(f, g));
    CHECK(check_d(product_solution(f, g)) == (f * g == g * f));
  }
  const Field q = Field::rationals();
  Matrix ones(q, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ones(i, j) = q.one();
  CHECK(diagonal_solution(ones) == EndoPair::identity(q, 3));
  CHECK_FALSE(invert(EndoPair::zero(q, 2)));
  const auto inv = invert(diagonal_solution(mat(q, {{"1", "2"}, {"3", "4"}})));
  REQUIRE(inv);
  CHECK(*inv == diagonal_solution(mat(q, {{"1", "1/2"}, {"1/3", "1/4"}})));
  CHECK(commutes_with_flip(diagonal_solution(mat(q, {{"1", "2"}, {"2", "4"}}))));
  CHECK_FALSE(commutes_with_flip(diagonal_solution(mat(q, {{"1", "2"}, {"3", "4"}}))));
  CHECK_FALSE(commutes_with_flip(jordan(qabc)));
}
