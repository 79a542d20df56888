#include "deq/frt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace deq {

namespace {

std::size_t comatrix_index(std::size_t n, std::size_t j, std::size_t k) { return j * n + k; }

void require_comatrix(const Coalgebra& c, std::size_t n, const Field& f) {
  if (c.dim() != n * n || !(c.field() == f)) throw std::invalid_argument("coalgebra is not comatrix(n) over the field of R");
}

// Σ_{r,s} A(o(r,s,j,k))·w ⊗ m_r ⊗ m_s, evaluated from the obstruction vectors
Vector obstruction_side(const ObstructionSet& obs, const std::vector<Matrix>& action, const Vector& w, std::size_t k,
                        std::size_t j) {
  const std::size_t n = obs.n;
  Vector out(w.field(), n * n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      const Vector aw = act_element(action, obs.at(r, s, j, k)) * w;
      for (std::size_t a = 0; a < n; ++a) out[(a * n + r) * n + s] = aw[a];
    }
  return out;
}

}  // namespace

Comodule standard_comodule(std::shared_ptr<const Coalgebra> comatrix_n, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  require_comatrix(*comatrix_n, n, comatrix_n->field());
  const std::size_t d = n * n;
  Matrix rho(comatrix_n->field(), n * d, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t v = 0; v < n; ++v) rho(v * d + comatrix_index(n, v, l), l) = comatrix_n->field().one();
  return Comodule(std::move(comatrix_n), std::move(rho));
}

ObstructionSet obstructions(const EndoPair& r) {
  const std::size_t n = r.n();
  ObstructionSet out{n, {}};
  out.o.reserve(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Vector o(r.field(), n * n);
          for (std::size_t v = 0; v < n; ++v) o[comatrix_index(n, v, l)] += r.x(k, v, j, i);
          for (std::size_t a = 0; a < n; ++a) o[comatrix_index(n, i, a)] -= r.x(k, l, j, a);
          out.o.push_back(std::move(o));
        }
  return out;
}

bool coideal_identity_holds(const ObstructionSet& obs, const Coalgebra& c) {
  const std::size_t n = obs.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Vector rhs(c.field(), n * n * n * n);
          for (std::size_t u = 0; u < n; ++u) {
            rhs += kronecker(obs.at(i, j, k, u), Vector::unit(c.field(), n * n, comatrix_index(n, u, l)));
            rhs += kronecker(Vector::unit(c.field(), n * n, comatrix_index(n, i, u)), obs.at(u, j, k, l));
          }
          if (!(c.coproduct(obs.at(i, j, k, l)) == rhs)) return false;
        }
  return true;
}

Subspace obstruction_coideal(const EndoPair& r, const Coalgebra& c) {
  const std::size_t n = r.n();
  require_comatrix(c, n, r.field());
  const ObstructionSet obs = obstructions(r);
  Subspace i(r.field(), n * n, obs.o, comatrix_pivot_order(n));
  const bool subspace_test = is_coideal(c, i);
  if (subspace_test != coideal_identity_holds(obs, c)) throw std::logic_error("coideal test and coproduct identity disagree");
  if (!subspace_test) throw std::logic_error("span of the obstructions is not a coideal");
  return i;
}

std::vector<Matrix> generator_action(const EndoPair& r) {
  const std::size_t n = r.n();
  std::vector<Matrix> out;
  out.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t u = 0; u < n; ++u) {
      Matrix a(r.field(), n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v = 0; v < n; ++v) a(i, v) = r.x(u, v, j, i);
      out.push_back(std::move(a));
    }
  return out;
}

Vector defect_pairing(const EndoPair& r, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t n = r.n();
  if (j >= n || k >= n || l >= n) throw std::invalid_argument("index out of range");
  const auto c = std::make_shared<const Coalgebra>(comatrix(r.field(), n));
  const Comodule rho = standard_comodule(c, n);
  const Matrix a = generator_action(r)[comatrix_index(n, j, k)];
  const Vector ml = Vector::unit(r.field(), n, l);
  const Vector lhs = kronecker(a, Matrix::identity(r.field(), n * n)) * rho.coaction().column(l) -
                     rho.coaction() * (a * ml);
  Vector rhs(r.field(), n * n * n);
  const ObstructionSet obs = obstructions(r);
  for (std::size_t i = 0; i < n; ++i) rhs += kronecker(Vector::unit(r.field(), n, i), obs.at(i, j, k, l));
  if (!(lhs == rhs)) throw std::logic_error("defect pairing does not match the obstructions");
  return lhs;
}

Vector d_identity(const EndoPair& r, const Vector& w, std::size_t k, std::size_t j) {
  const std::size_t n = r.n();
  if (j >= n || k >= n || w.size() != n) throw std::invalid_argument("index or vector size out of range");
  const Matrix r12 = lift(r, Slot::s12).m, r23 = lift(r, Slot::s23).m;
  const Vector input = kronecker(kronecker(w, Vector::unit(r.field(), n, k)), Vector::unit(r.field(), n, j));
  const Vector lhs = r23 * (r12 * input) - r12 * (r23 * input);
  if (!(lhs == obstruction_side(obstructions(r), generator_action(r), w, k, j))) {
    throw std::logic_error("commutator does not match the obstruction action");
  }
  return lhs;
}

bool annihilation_check(const EndoPair& r) {
  const auto action = generator_action(r);
  for (const auto& o : obstructions(r).o) {
    if (!act_element(action, o).is_zero()) return false;
  }
  return true;
}

FrtPresentation d_bialgebra(const EndoPair& r) {
  if (const auto bad = first_d_violation(r)) {
    std::string where;
    for (std::size_t t = 0; t < bad->size(); ++t) where += (t ? "," : "") + std::to_string((*bad)[t] + 1);
    throw std::invalid_argument("not a D-solution: coordinate equation (i,j,k,l,p,q)=(" + where + ") fails");
  }
  const std::size_t n = r.n();
  const Field& f = r.field();
  auto c = std::make_shared<const Coalgebra>(comatrix(f, n));
  Subspace i = obstruction_coideal(r, *c);

  // shortest relations first, ties broken by row-major pivot
  std::vector<std::size_t> rows(i.dimension());
  std::iota(rows.begin(), rows.end(), 0);
  auto terms = [&](std::size_t b) {
    std::size_t t = 0;
    for (std::size_t a = 0; a < n * n; ++a) t += !i.basis()[b][a].is_zero();
    return t;
  };
  std::sort(rows.begin(), rows.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(terms(x), i.pivots()[x]) < std::pair(terms(y), i.pivots()[y]);
  });
  std::vector<std::string> relations;
  for (std::size_t b : rows) {
    std::vector<std::size_t> order{i.pivots()[b]};
    for (std::size_t a = 0; a < n * n; ++a) {
      if (a != i.pivots()[b]) order.push_back(a);
    }
    relations.push_back(format_combination(i.basis()[b], c->labels(), order));
  }

  auto q = std::make_shared<const QuotientCoalgebra>(c, std::move(i));
  const auto full = generator_action(r);
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < q->quotient()->dim(); ++g) action.push_back(act_element(full, q->section().column(g)));
  const std::size_t d = q->quotient()->dim();
  Matrix rho(f, n * d, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t v = 0; v < n; ++v) {
      const Vector image = q->projection().column(comatrix_index(n, v, l));
      for (std::size_t g = 0; g < d; ++g) rho(v * d + g, l) = image[g];
    }
  LongDimodule canonical = LongDimodule::presented(std::move(action), Comodule(q->quotient(), std::move(rho)));
  const bool round_trip = r_from_dimodule(canonical) == r;
  return FrtPresentation{r, std::move(c), std::move(q), std::move(relations), std::move(canonical), round_trip};
}

std::optional<UniversalMap> universal_map(const EndoPair& r, const LongDimodule& realization) {
  const std::size_t n = r.n();
  if (realization.dim() != n || !(realization.coalgebra().field() == r.field())) {
    throw std::invalid_argument("realization does not match R in dimension or field");
  }
  if (!(r_from_dimodule(realization) == r)) return std::nullopt;

  const Coalgebra& h = realization.coalgebra();
  const std::size_t dh = h.dim();
  // F: comatrix(n) → H, c_vl ↦ c′_vl
  Matrix big_f(r.field(), dh, n * n);
  std::vector<Vector> c_prime;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t l = 0; l < n; ++l) {
      Vector cp(r.field(), dh);
      for (std::size_t c = 0; c < dh; ++c) cp[c] = realization.coaction().coefficient(l, v, c);
      for (std::size_t c = 0; c < dh; ++c) big_f(c, comatrix_index(n, v, l)) = cp[c];
      c_prime.push_back(std::move(cp));
    }
  for (const auto& o : obstructions(r).o) {
    if (!(big_f * o).is_zero()) throw std::logic_error("an obstruction does not vanish in the realization");
  }

  const FrtPresentation p = d_bialgebra(r);
  const Matrix images = big_f * p.quotient->section();
  if (!(images * p.quotient->projection() == big_f)) throw std::logic_error("generator map is not colinear");
  const Coalgebra& bar = p.generators();
  for (std::size_t g = 0; g < bar.dim(); ++g) {
    const Vector y = images.column(g);
    if (!(h.coproduct(y) == kronecker(images, images) * bar.delta().column(g))) {
      throw std::logic_error("generator map does not respect the comultiplication");
    }
    if (!(h.counit_of(y) == bar.counit()[g])) throw std::logic_error("generator map does not respect the counit");
  }
  return UniversalMap{images, std::move(c_prime)};
}

}  // namespace deq
