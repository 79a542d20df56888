#include "deq/dmap.hpp"

#include <stdexcept>
#include <string>

namespace deq {

namespace {

std::shared_ptr<const QuotientCoalgebra> trivial_quotient(std::shared_ptr<const Coalgebra> c) {
  const Field f = c->field();
  const std::size_t d = c->dim();
  return std::make_shared<const QuotientCoalgebra>(std::move(c), Subspace(f, d));
}

// σ₀ as an n²×n² table, row c_iv, column c_ju
Matrix sigma_table(const EndoPair& r) {
  const std::size_t n = r.n();
  Matrix t(r.field(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t u = 0; u < n; ++u) t(i * n + v, j * n + u) = r.x(u, v, j, i);
  return t;
}

std::string index_text(std::size_t n, std::size_t flat) {
  std::string out;
  std::size_t div = n * n * n;
  for (int t = 0; t < 4; ++t, div = div / n) out += (t ? "," : "") + std::to_string(flat / div % n + 1);
  return out;
}

// σ₀(C ⊗ I) = 0 checked on every obstruction; the form on C ⊗ C/I is σ₀ S
BilinearForm descend(const Matrix& table, const std::shared_ptr<const QuotientCoalgebra>& q, const ObstructionSet& obs) {
  for (std::size_t t = 0; t < obs.o.size(); ++t) {
    if (!(table * obs.o[t]).is_zero()) {
      throw std::logic_error("σ does not vanish on o(" + index_text(obs.n, t) + ")");
    }
  }
  return BilinearForm(q->parent(), q->quotient(), table * q->section());
}

void require_solution(const EndoPair& r) {
  if (const auto bad = first_d_violation(r)) throw std::invalid_argument("not a D-solution");
}

}  // namespace

Vector spe_deficit(const DMap& d, std::size_t c, std::size_t dbar) {
  const Coalgebra& cc = d.coalgebra();
  const std::size_t dim = cc.dim();
  if (c >= dim || dbar >= d.quotient->quotient()->dim()) throw std::invalid_argument("index out of range");
  Vector out(cc.field(), d.quotient->quotient()->dim());
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const Scalar& mu = cc.mu(c, a, b);
      if (mu.is_zero()) continue;
      out.add_scaled(mu * d.sigma(a, dbar), d.quotient->projection().column(b));
      out.add_scaled(-(mu * d.sigma(b, dbar)), d.quotient->projection().column(a));
    }
  return out;
}

bool is_dmap(const DMap& d) {
  for (std::size_t c = 0; c < d.coalgebra().dim(); ++c)
    for (std::size_t g = 0; g < d.quotient->quotient()->dim(); ++g) {
      if (!spe_deficit(d, c, g).is_zero()) return false;
    }
  return true;
}

DMap counit_dmap(std::shared_ptr<const QuotientCoalgebra> quotient, const Vector& f) {
  const Coalgebra& c = *quotient->parent();
  const std::size_t q = quotient->quotient()->dim();
  if (f.size() != q) throw std::invalid_argument("f must have one value per quotient basis element");
  Matrix t(c.field(), c.dim(), q);
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t g = 0; g < q; ++g) t(a, g) = c.counit()[a] * f[g];
  BilinearForm sigma(quotient->parent(), quotient->quotient(), std::move(t));
  return DMap{std::move(quotient), std::move(sigma)};
}

DMap diagonal_comatrix_dmap(const Field& field, std::size_t n, const Scalar& a) {
  auto q = trivial_quotient(std::make_shared<const Coalgebra>(comatrix(field, n)));
  Matrix t(field, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n * n; ++b) t(i * n + i, b) = a;
  BilinearForm sigma(q->parent(), q->quotient(), std::move(t));
  return DMap{std::move(q), std::move(sigma)};
}

DMap unreduced_sigma(const EndoPair& r) {
  auto q = trivial_quotient(std::make_shared<const Coalgebra>(comatrix(r.field(), r.n())));
  BilinearForm sigma(q->parent(), q->quotient(), sigma_table(r));
  return DMap{std::move(q), std::move(sigma)};
}

DMap sigma_from_r(const EndoPair& r) {
  require_solution(r);
  const FrtPresentation p = d_bialgebra(r);
  BilinearForm sigma = descend(sigma_table(r), p.quotient, obstructions(r));
  return DMap{p.quotient, std::move(sigma)};
}

EndoPair r_sigma(const Comodule& m, const DMap& d) {
  if (!(*m.coalgebra() == d.coalgebra())) throw std::invalid_argument("comodule is over a different coalgebra");
  const std::size_t n = m.dim(), dim = d.coalgebra().dim();
  const Field& f = d.coalgebra().field();
  // τ(c, e) = σ(c ⊗ π(e)) on C ⊗ C
  const Matrix tau = d.sigma.table() * d.quotient->projection();
  Matrix r(f, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < dim; ++c) {
          const Scalar& p = m.coefficient(a, v, c);
          if (p.is_zero()) continue;
          for (std::size_t w = 0; w < n; ++w)
            for (std::size_t e = 0; e < dim; ++e) {
              const Scalar& s = m.coefficient(b, w, e);
              if (!s.is_zero()) r(v * n + w, a * n + b) += p * s * tau(c, e);
            }
        }
  return EndoPair(std::move(r));
}

StrongDMap strong_dmap_from_symmetric(const EndoPair& r) {
  require_solution(r);
  const std::size_t n = r.n();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          if (!(r.x(u, v, j, i) == r.x(v, u, i, j))) {
            throw std::invalid_argument("R does not commute with the flip: x(u,v,j,i) != x(v,u,i,j) at (u,v,j,i)=(" +
                                        std::to_string(u + 1) + "," + std::to_string(v + 1) + "," +
                                        std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
          }
        }
  const FrtPresentation p = d_bialgebra(r);
  const Matrix table = sigma_table(r);
  const ObstructionSet obs = obstructions(r);
  // σ₀ must vanish on I(R) in both legs
  descend(table, p.quotient, obs);
  descend(table.transpose(), p.quotient, obs);
  const Matrix& s = p.quotient->section();
  auto c_r = trivial_quotient(p.quotient->quotient());
  BilinearForm sigma(c_r->parent(), c_r->quotient(), s.transpose() * table * s);
  return StrongDMap{p.quotient, DMap{std::move(c_r), std::move(sigma)}, p.canonical.coaction()};
}

DMap convolution_inverse_of_sigma(const EndoPair& r) {
  const auto inverse = invert(r);
  if (!inverse) throw std::invalid_argument("R is singular");
  const DMap sigma = sigma_from_r(r);
  BilinearForm prime = descend(sigma_table(*inverse), sigma.quotient, obstructions(r));
  const BilinearForm unit = BilinearForm::unit(sigma.sigma.left(), sigma.sigma.right());
  if (!(convolve(sigma.sigma, prime) == unit) || !(convolve(prime, sigma.sigma) == unit)) {
    throw std::logic_error("σ′ is not a two-sided convolution inverse of σ");
  }
  return DMap{sigma.quotient, std::move(prime)};
}

}  // namespace deq
