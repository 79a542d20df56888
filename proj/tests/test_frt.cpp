#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deq/examples.hpp"
#include "deq/frt.hpp"
#include "support.hpp"

using namespace deq;
using namespace deq::testing;

namespace {

std::shared_ptr<const Coalgebra> comatrix_ptr(const Field& f, std::size_t n) {
  return std::make_shared<const Coalgebra>(comatrix(f, n));
}

std::vector<std::string> relations_of(const EndoPair& r) { return d_bialgebra(r).relations; }

}  // namespace

TEST_CASE("standard comodule") {
  const Field q = Field::rationals();
  for (std::size_t n : {1u, 2u, 3u}) {
    const Comodule m = standard_comodule(comatrix_ptr(q, n), n);
    CHECK(m.dim() == n);
  }
  const auto c = comatrix_ptr(q, 2);
  const Comodule m = standard_comodule(c, 2);
  // ρ(m₁) = m₁⊗c₁₁ + m₂⊗c₂₁
  Vector expect(q, 8);
  expect[0 * 4 + c->index_of("c11")] = q.one();
  expect[1 * 4 + c->index_of("c21")] = q.one();
  CHECK(m.coaction().column(0) == expect);
  CHECK_THROWS_AS(standard_comodule(c, 3), std::invalid_argument);
}

TEST_CASE("obstructions and the coideal") {
  const Field q = Field::rationals();
  const auto c2 = comatrix_ptr(q, 2);
  for (const auto& o : obstructions(EndoPair::zero(q, 2)).o) CHECK(o.is_zero());
  CHECK(obstruction_coideal(EndoPair::zero(q, 2), *c2).dimension() == 0);

  CHECK(relations_of(jordan_example(q, "1", "1", "1")) == std::vector<std::string>{"c21", "c22 - c11"});
  CHECK(relations_of(jordan_example(q, "2", "0", "5")) == std::vector<std::string>{"c21", "c22 - c11"});
  CHECK(relations_of(jordan_example(q, "1", "3", "0")) == std::vector<std::string>{"c21", "c22 - c11"});
  const Field qabc = Field::rational_functions({"a", "b", "c"});
  CHECK(relations_of(jordan_example(qabc)) == std::vector<std::string>{"c21", "c22 - c11"});

  CHECK(relations_of(r_q_example(q, "3")) == std::vector<std::string>{"c21", "c12 - 3*c11 + 3*c22"});
  const Field qq = Field::rational_functions({"q"});
  CHECK(relations_of(r_q_example(qq)) == std::vector<std::string>{"c21", "c12 - q*c11 + q*c22"});
  CHECK(relations_of(projection_example(q)) == std::vector<std::string>{"c12", "c21"});

  // the counit kills every obstruction and the coproduct identity holds for any R
  std::mt19937_64 rng(21);
  const Field f5 = Field::prime(5);
  for (std::size_t n : {2u, 3u}) {
    const auto c = comatrix_ptr(f5, n);
    for (int t = 0; t < 500; ++t) {
      const ObstructionSet obs = obstructions(random_endo(f5, n, rng));
      for (const auto& o : obs.o) CHECK(c->counit_of(o).is_zero());
      CHECK(coideal_identity_holds(obs, *c));
    }
  }
  const auto cf2 = comatrix_ptr(Field::prime(2), 2);
  std::size_t identity_count = 0;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) identity_count += coideal_identity_holds(obstructions(f2_candidate(mask)), *cf2);
  CHECK(identity_count == (1u << 16));
  for (int t = 0; t < 20; ++t) CHECK(is_coideal(*comatrix_ptr(f5, 3), obstruction_coideal(random_endo(f5, 3, rng), *comatrix_ptr(f5, 3))));
}

TEST_CASE("defect pairing") {
  const Field q = Field::rationals();
  for (std::size_t j = 0; j < 2; ++j) CHECK(defect_pairing(EndoPair::zero(q, 2), j, 1, 0).is_zero());
  const EndoPair r = jordan_example(q, "1", "1", "1");
  const Vector v = defect_pairing(r, 0, 0, 0);
  const ObstructionSet obs = obstructions(r);
  Vector expect(q, 8);
  for (std::size_t i = 0; i < 2; ++i) expect += kronecker(Vector::unit(q, 2, i), obs.at(i, 0, 0, 0));
  CHECK(v == expect);

  std::mt19937_64 rng(22);
  const Field f5 = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    const EndoPair x = random_endo(f5, 3, rng);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) CHECK_NOTHROW(defect_pairing(x, j, k, l));
  }
  CHECK_THROWS_AS(defect_pairing(r, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("commutator identity") {
  const Field q = Field::rationals();
  const EndoPair yb = yb_example(q, "2");
  bool nonzero = false;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t a = 0; a < 2; ++a) nonzero |= !d_identity(yb, Vector::unit(q, 2, a), k, j).is_zero();
  CHECK(nonzero);
  CHECK(d_identity(EndoPair::zero(q, 2), vec(q, {1, 2}), 0, 1).is_zero());
  const EndoPair sol = jordan_example(q, "1", "1", "1");
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t j = 0; j < 2; ++j) CHECK(d_identity(sol, vec(q, {3, -1}), k, j).is_zero());

  std::mt19937_64 rng(23);
  const Field f5 = Field::prime(5);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 100; ++t) {
      const EndoPair x = random_endo(f5, n, rng);
      const Vector w = random_matrix(f5, n, 1, rng).column(0);
      CHECK_NOTHROW(d_identity(x, w, rng() % n, rng() % n));
    }
  }
}

TEST_CASE("annihilation is equivalent to the D-equation") {
  const Field q = Field::rationals();
  CHECK(annihilation_check(EndoPair::zero(q, 2)));
  CHECK_FALSE(annihilation_check(yb_example(q, "2")));
  std::size_t solutions = 0;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    const EndoPair r = f2_candidate(mask);
    const bool d = check_d_coordinates(r);
    CHECK(annihilation_check(r) == d);
    solutions += d;
  }
  CHECK(solutions > 0);
  std::mt19937_64 rng(24);
  const Field f5 = Field::prime(5);
  for (int t = 0; t < 100; ++t) {
    const EndoPair r = random_endo(f5, 2, rng);
    CHECK(annihilation_check(r) == check_d(r));
  }
}

TEST_CASE("presentations") {
  const Field q = Field::rationals();
  {
    const FrtPresentation p = d_bialgebra(jordan_example(q, "1", "1", "1"));
    CHECK(p.round_trip);
    const Coalgebra& g = p.generators();
    REQUIRE(g.dim() == 2);
    CHECK(g.labels() == std::vector<std::string>{overline("c11"), overline("c12")});
    CHECK(sweedler(g, 0) == "Δ(c̄11) = c̄11 ⊗ c̄11");
    CHECK(sweedler(g, 1) == "Δ(c̄12) = c̄11 ⊗ c̄12 + c̄12 ⊗ c̄11");
    CHECK(g.counit() == vec(q, {1, 0}));
  }
  {
    const FrtPresentation p = d_bialgebra(r_q_example(q, "3"));
    CHECK(p.round_trip);
    CHECK(p.generators().labels() == std::vector<std::string>{overline("c11"), overline("c22")});
    CHECK(sweedler(p.generators(), 0) == "Δ(c̄11) = c̄11 ⊗ c̄11");
    CHECK(sweedler(p.generators(), 1) == "Δ(c̄22) = c̄22 ⊗ c̄22");
  }
  {
    const FrtPresentation p = d_bialgebra(projection_example(q));
    CHECK(p.round_trip);
    CHECK(p.generators().labels() == std::vector<std::string>{overline("c11"), overline("c22")});
    CHECK(p.generators().is_cocommutative());
  }
  CHECK_THROWS_WITH_AS(d_bialgebra(yb_example(q, "2")), doctest::Contains("(i,j,k,l,p,q)=("), std::invalid_argument);

  // round trip for every F₂ solution at n = 2 and random diagonal ones at n = 3
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    const EndoPair r = f2_candidate(mask);
    if (check_d_coordinates(r)) CHECK(d_bialgebra(r).round_trip);
  }
  std::mt19937_64 rng(25);
  for (int t = 0; t < 10; ++t) CHECK(d_bialgebra(diagonal_solution(random_matrix(Field::prime(7), 3, 3, rng))).round_trip);
  CHECK(d_bialgebra(EndoPair::zero(q, 2)).generators().dim() == 4);
}

TEST_CASE("universal map") {
  const Field q = Field::rationals();
  const EndoPair r = jordan_example(q, "1", "1", "1");
  const FrtPresentation p = d_bialgebra(r);
  const auto self = universal_map(r, p.canonical);
  REQUIRE(self);
  CHECK(self->images == Matrix::identity(q, p.generators().dim()));

  const CayleyTable s3 = symmetric_group(3);
  const auto h = std::make_shared<const FinBialgebra>(group_bialgebra(q, s3));
  const GradedModule graded = coset_graded_example(h, s3);
  const LongDimodule dm = dimodule_from_grading(graded);
  const EndoPair rs = r_from_dimodule(dm);
  CHECK(rs == s3_graded_example(q));
  const auto f = universal_map(rs, dm);
  REQUIRE(f);
  // c′_vl = δ_vl σ_l with σ = 132 on the cosets and 213 on the last vector
  for (std::size_t v = 0; v < 4; ++v)
    for (std::size_t l = 0; l < 4; ++l) {
      const Vector expect = v == l ? Vector::unit(q, 6, l < 3 ? 1 : 2) : Vector(q, 6);
      CHECK(f->c_prime[v * 4 + l] == expect);
    }
  // every generator lands on a group element or on 0
  for (std::size_t g = 0; g < f->images.cols(); ++g) {
    const Vector y = f->images.column(g);
    std::size_t nonzero = 0;
    for (std::size_t a = 0; a < 6; ++a) nonzero += !y[a].is_zero();
    CHECK(nonzero <= 1);
  }

  const LongDimodule wrong(h, trivial_action(*h, 4), trivial_coaction(*h, 4));
  CHECK_FALSE(universal_map(rs, wrong));
  CHECK_THROWS_AS(universal_map(r, dm), std::invalid_argument);
}
