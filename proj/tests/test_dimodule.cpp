#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "deq/dimodule.hpp"
#include "support.hpp"

using namespace deq;
using namespace deq::testing;

namespace {

std::shared_ptr<const FinBialgebra> shared(FinBialgebra h) { return std::make_shared<const FinBialgebra>(std::move(h)); }

std::vector<Matrix> regular_action(const FinBialgebra& h) {
  const std::size_t d = h.dim();
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < d; ++a) {
    Matrix m(h.field(), d, d);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t z = 0; z < d; ++z) m(z, b) = h.algebra().mult()(z, a * d + b);
    out.push_back(std::move(m));
  }
  return out;
}

// grade e on m1 and g on m2, with g swapping the two basis vectors
std::vector<Matrix> z2_projectors(const Field& f) {
  Matrix pe(f, 2, 2), pg(f, 2, 2);
  pe(0, 0) = f.one();
  pg(1, 1) = f.one();
  return {pe, pg};
}

// R⊗id or id⊗R applied to w in the basis index a*n²+b*n+c without forming the lift
Vector apply_lift(const EndoPair& r, const Vector& w, bool first) {
  const std::size_t n = r.n();
  Vector out(r.field(), w.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& x = w[(a * n + b) * n + c];
        if (x.is_zero()) continue;
        const std::size_t col = first ? a * n + b : b * n + c;
        for (std::size_t row = 0; row < n * n; ++row) {
          const Scalar& e = r.matrix()(row, col);
          if (e.is_zero()) continue;
          out[first ? row * n + c : a * n * n + row] += e * x;
        }
      }
  return out;
}

bool d_on_random_vectors(const EndoPair& r, std::mt19937_64& rng, int trials) {
  const std::size_t n = r.n();
  for (int t = 0; t < trials; ++t) {
    Vector w(r.field(), n * n * n);
    for (int k = 0; k < 4; ++k) w[rng() % w.size()] = random_scalar(r.field(), rng);
    if (!(apply_lift(r, apply_lift(r, w, false), true) == apply_lift(r, apply_lift(r, w, true), false))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("groups") {
  const CayleyTable s3 = symmetric_group(3);
  CHECK(s3.labels == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  // (12)(23) as functions: x ↦ (12)((23)(x)) sends 1→2, 2→3, 3→1
  CHECK(s3.labels[s3.table[2][1]] == "231");
  CHECK(s3.labels[s3.table[1][2]] == "312");
  CHECK(symmetric_group(4).labels.size() == 24);

  const Field q = Field::rationals();
  const FinBialgebra h = group_bialgebra(q, s3);
  CHECK(h.algebra().unit() == vec(q, {1, 0, 0, 0, 0, 0}));
  CHECK(h.coalgebra()->is_cocommutative());
  CHECK(algebra_generators(h.algebra()) == std::vector<std::size_t>{1, 2});

  const FinBialgebra z3 = group_bialgebra(Field::prime(5), cyclic_group(3));
  CHECK(algebra_generators(z3.algebra()) == std::vector<std::size_t>{1});

  CayleyTable bad = cyclic_group(3);
  bad.table[1][1] = 0;
  CHECK_THROWS_AS(group_bialgebra(q, bad), std::invalid_argument);
  bad = cyclic_group(2);
  bad.table[0][0] = 5;
  CHECK_THROWS_WITH_AS(group_bialgebra(q, bad), doctest::Contains("closure"), std::invalid_argument);
  // a constant table is associative but has no identity
  CayleyTable constant{{"a", "b"}, {{0, 0}, {0, 0}}};
  CHECK_THROWS_WITH_AS(group_bialgebra(q, constant), doctest::Contains("identity"), std::invalid_argument);
  // a left-zero-free monoid {e, z} with z*z = z has no inverse for z
  CayleyTable monoid{{"e", "z"}, {{0, 1}, {1, 1}}};
  CHECK_THROWS_WITH_AS(group_bialgebra(q, monoid), doctest::Contains("inverse"), std::invalid_argument);
}

TEST_CASE("trivial dimodules and the compatible set") {
  const Field f = Field::prime(7);
  const auto h = shared(group_bialgebra(f, symmetric_group(3)));
  const LongDimodule k = unit_dimodule(h);
  CHECK(k.dim() == 1);
  CHECK(r_from_dimodule(k) == EndoPair::identity(f, 1));

  const LongDimodule triv(h, trivial_action(*h, 3), trivial_coaction(*h, 3));
  CHECK(r_from_dimodule(triv) == EndoPair::identity(f, 3));

  // compatible operators form a subalgebra: check products and sums
  const auto coset = dimodule_from_grading(coset_graded_example(h, symmetric_group(3)));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const std::size_t a = rng() % 6, b = rng() % 6;
    const Matrix& x = coset.action()[a];
    const Matrix& y = coset.action()[b];
    CHECK(compatible_operator(x * y, coset.coaction()));
    CHECK(compatible_operator(x.scaled(random_scalar(f, rng)) + y, coset.coaction()));
  }
  CHECK(compatible_operator(Matrix::identity(f, 4), coset.coaction()));
  // a generic matrix is not compatible
  CHECK_FALSE(compatible_operator(random_matrix(f, 4, 4, rng), coset.coaction()));
}

TEST_CASE("non-stable grading over k[Z/2]") {
  const Field q = Field::rationals();
  const auto h = shared(group_bialgebra(q, cyclic_group(2)));
  std::vector<Matrix> swap{Matrix::identity(q, 2), mat(q, {{"0", "1"}, {"1", "0"}})};
  CHECK_FALSE(module_defect(h->algebra(), swap));
  CHECK_THROWS_WITH_AS(GradedModule(h, swap, z2_projectors(q)), doctest::Contains("not stable"),
                       std::invalid_argument);
  Matrix rho(q, 4, 2);
  rho(0 * 2 + 0, 0) = q.one();
  rho(1 * 2 + 1, 1) = q.one();
  const Comodule graded(h->coalgebra(), rho);
  CHECK_FALSE(check_long_compat(h->algebra(), swap, graded));
  CHECK_FALSE(check_long_compat_generators(h->algebra(), swap, graded));
  CHECK_THROWS_WITH_AS(LongDimodule(h, swap, graded), doctest::Contains("compatibility"), std::invalid_argument);

  // the diagonal action by ±1 keeps both lines
  std::vector<Matrix> sign{Matrix::identity(q, 2), mat(q, {{"1", "0"}, {"0", "-1"}})};
  const GradedModule ok(h, sign, z2_projectors(q));
  const LongDimodule dm = dimodule_from_grading(ok);
  CHECK(projectors_from_coaction(dm.coaction()) == ok.projectors());
  // R(m_a ⊗ m_b) = σ_b·m_a ⊗ m_b
  const EndoPair r = r_from_dimodule(dm);
  CHECK(r.matrix() == kronecker(Matrix::identity(q, 2), z2_projectors(q)[0]) + kronecker(sign[1], z2_projectors(q)[1]));
  CHECK(check_d(r));
}

TEST_CASE("coset example over S3") {
  const Field q = Field::rationals();
  const CayleyTable s3 = symmetric_group(3);
  const auto h = shared(group_bialgebra(q, s3));
  const GradedModule g = coset_graded_example(h, s3);
  CHECK(g.dim() == 4);
  CHECK(rank(g.projectors()[1]) == 3);  // s = 132
  CHECK(rank(g.projectors()[2]) == 1);  // t = 213
  const LongDimodule dm = dimodule_from_grading(g);
  const EndoPair r = r_from_dimodule(dm);
  CHECK(check_d(r));
  CHECK_FALSE(check_qybe(r));
  CHECK(r_from_dimodule(dm) == r);

  CHECK_THROWS_AS(coset_graded_example(shared(group_bialgebra(q, cyclic_group(4))), cyclic_group(4)),
                  std::invalid_argument);
}

TEST_CASE("tensor products") {
  const Field q = Field::rationals();
  const auto z2 = shared(group_bialgebra(q, cyclic_group(2)));
  std::vector<Matrix> sign{Matrix::identity(q, 2), mat(q, {{"1", "0"}, {"0", "-1"}})};
  const LongDimodule a = dimodule_from_grading(GradedModule(z2, sign, z2_projectors(q)));
  const LongDimodule ab = tensor_dimodule(a, a);
  CHECK(ab.dim() == 4);
  CHECK(check_d(r_from_dimodule(ab)));
  const LongDimodule ka = tensor_dimodule(unit_dimodule(z2), a);
  CHECK(ka.action() == a.action());
  CHECK(ka.coaction().coaction() == a.coaction().coaction());

  const CayleyTable s3 = symmetric_group(3);
  const auto h = shared(group_bialgebra(q, s3));
  const LongDimodule c = dimodule_from_grading(coset_graded_example(h, s3));
  const LongDimodule cc = tensor_dimodule(c, c);
  CHECK(cc.dim() == 16);
  // grading of m_a⊗m_b is the product of the gradings
  const auto p = projectors_from_coaction(cc.coaction());
  const auto pc = projectors_from_coaction(c.coaction());
  for (std::size_t x = 0; x < 6; ++x) {
    Matrix expect(q, 16, 16);
    for (std::size_t y = 0; y < 6; ++y)
      for (std::size_t z = 0; z < 6; ++z)
        if (s3.table[y][z] == x) expect += kronecker(pc[y], pc[z]);
    CHECK(p[x] == expect);
  }
  const EndoPair rcc = r_from_dimodule(cc);
  CHECK(check_d_coordinates(rcc));
  std::mt19937_64 rng(3);
  CHECK(d_on_random_vectors(rcc, rng, 20));
  CHECK_THROWS_AS(tensor_dimodule(a, c), std::invalid_argument);
}

TEST_CASE("induced dimodules") {
  const Field q = Field::rationals();
  const auto z2 = shared(group_bialgebra(q, cyclic_group(2)));
  const LongDimodule n = induce_from_module(z2, trivial_action(*z2, 1));
  CHECK(n.dim() == 2);
  CHECK(check_d(r_from_dimodule(n)));

  Matrix rho(q, 4, 2);
  rho(0, 0) = q.one();
  rho(3, 1) = q.one();
  const LongDimodule m = induce_from_comodule(z2, Comodule(z2->coalgebra(), rho));
  CHECK(m.dim() == 4);
  CHECK(check_d(r_from_dimodule(m)));

  const auto s3 = shared(group_bialgebra(q, symmetric_group(3)));
  const LongDimodule big = induce_from_module(s3, regular_action(*s3));
  CHECK(big.dim() == 36);
  std::mt19937_64 rng(5);
  const EndoPair rb = r_from_dimodule(big);
  CHECK(d_on_random_vectors(rb, rng, 20));
  // the sampler does detect a failure at this size
  Matrix broken = rb.matrix();
  broken(0, 1) += q.one();
  CHECK_FALSE(d_on_random_vectors(EndoPair(broken), rng, 200));

  const LongDimodule free = induce_from_comodule(s3, Comodule::trivial(s3->coalgebra(), 1, 0));
  CHECK(free.dim() == 6);
  CHECK(check_d(r_from_dimodule(free)));
}

TEST_CASE("presented dimodules") {
  const Field q = Field::rationals();
  const auto c = std::make_shared<const Coalgebra>(comatrix(q, 1));
  const Comodule m = Comodule::trivial(c, 2, 0);
  const auto a = mat(q, {{"1", "2"}, {"0", "3"}});
  const LongDimodule p = LongDimodule::presented({a}, m);
  CHECK(p.is_presented());
  CHECK(p.act_word({0, 0}) == a * a);
  CHECK(p.act_word({}) == Matrix::identity(q, 2));
  CHECK(r_from_dimodule(p).matrix() == kronecker(a, Matrix::identity(q, 2)));
  CHECK_THROWS_AS(tensor_dimodule(p, p), std::invalid_argument);
}

TEST_CASE("gradings with a single component and by the group itself") {
  const Field q = Field::rationals();
  const CayleyTable s3 = symmetric_group(3);
  const auto h = shared(group_bialgebra(q, s3));
  std::vector<Matrix> proj(6, Matrix(q, 3, 3));
  proj[0] = Matrix::identity(q, 3);
  std::vector<Matrix> on_letters;
  for (std::size_t g = 0; g < 6; ++g) {
    Matrix m(q, 3, 3);
    for (std::size_t x = 0; x < 3; ++x) m(s3.labels[g][x] - '1', x) = q.one();
    on_letters.push_back(std::move(m));
  }
  const LongDimodule identity_graded = dimodule_from_grading(GradedModule(h, on_letters, proj));
  CHECK(identity_graded.coaction().coaction() == trivial_coaction(*h, 3).coaction());

  // M = k[S₃], trivial action, M_σ = k·m_σ
  std::vector<Matrix> self(6, Matrix(q, 6, 6));
  for (std::size_t s = 0; s < 6; ++s) self[s](s, s) = q.one();
  const LongDimodule graded = dimodule_from_grading(GradedModule(h, trivial_action(*h, 6), self));
  CHECK(check_d(r_from_dimodule(graded)));
}

TEST_CASE("compatible elements form a subalgebra under partial compatibility") {
  // S₃ permuting three letters; letters split into blocks graded by distinct elements
  const Field q = Field::rationals();
  const CayleyTable s3 = symmetric_group(3);
  const auto h = shared(group_bialgebra(q, s3));
  std::vector<Matrix> on_letters;
  for (std::size_t g = 0; g < 6; ++g) {
    Matrix m(q, 3, 3);
    for (std::size_t x = 0; x < 3; ++x) m(s3.labels[g][x] - '1', x) = q.one();
    on_letters.push_back(std::move(m));
  }
  CHECK_FALSE(module_defect(h->algebra(), on_letters));
  std::mt19937_64 rng(31);
  std::size_t partial = 0;
  for (int t = 0; t < 30; ++t) {
    Matrix rho(q, 3 * 6, 3);
    for (std::size_t x = 0; x < 3; ++x) rho(x * 6 + rng() % 6, x) = q.one();
    const Comodule c(h->coalgebra(), rho);
    std::vector<std::size_t> ok;
    for (std::size_t g = 0; g < 6; ++g) {
      if (compatible_operator(on_letters[g], c)) ok.push_back(g);
    }
    CHECK(std::find(ok.begin(), ok.end(), 0) != ok.end());
    partial += ok.size() > 1 && ok.size() < 6;
    for (auto a : ok)
      for (auto b : ok) CHECK(compatible_operator(on_letters[s3.table[a][b]], c));
  }
  CHECK(partial > 0);
}
