#include "deq/dimodule.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace deq {

FinAlgebra::FinAlgebra(Field field, std::vector<std::string> labels, Matrix mult, Vector unit)
    : field_(std::move(field)), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw std::invalid_argument("algebra must have positive dimension");
  if (mult_.rows() != d || mult_.cols() != d * d) throw std::invalid_argument("multiplication table has the wrong shape");
  if (unit_.size() != d) throw std::invalid_argument("unit has the wrong length");
  for (std::size_t a = 0; a < d; ++a) {
    const Vector e = Vector::unit(field_, d, a);
    if (!(multiply(unit_, e) == e) || !(multiply(e, unit_) == e)) {
      throw std::invalid_argument("unit law fails on basis element " + labels_[a]);
    }
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector ab = mult_.column(a * d + b);
      for (std::size_t c = 0; c < d; ++c) {
        const Vector bc = mult_.column(b * d + c);
        if (!(multiply(ab, Vector::unit(field_, d, c)) == multiply(Vector::unit(field_, d, a), bc))) {
          throw std::invalid_argument("multiplication is not associative at (" + labels_[a] + "," + labels_[b] + "," +
                                      labels_[c] + ")");
        }
      }
    }
}

Vector FinAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d) throw std::invalid_argument("algebra element has the wrong dimension");
  Vector out(field_, d);
  for (std::size_t x = 0; x < d; ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t y = 0; y < d; ++y) {
      if (b[y].is_zero()) continue;
      const Scalar s = a[x] * b[y];
      for (std::size_t z = 0; z < d; ++z) {
        const Scalar& m = mult_(z, x * d + y);
        if (!m.is_zero()) out[z] += s * m;
      }
    }
  }
  return out;
}

namespace {

// Product in A⊗A of two elements given in the basis e_x⊗e_y at x*d+y.
Vector tensor_square_product(const FinAlgebra& a, const Vector& u, const Vector& v) {
  const std::size_t d = a.dim();
  Vector out(a.field(), d * d);
  for (std::size_t p = 0; p < d * d; ++p) {
    if (u[p].is_zero()) continue;
    for (std::size_t q = 0; q < d * d; ++q) {
      if (v[q].is_zero()) continue;
      const Vector left = a.mult().column((p / d) * d + q / d);
      const Vector right = a.mult().column((p % d) * d + q % d);
      out.add_scaled(u[p] * v[q], kronecker(left, right));
    }
  }
  return out;
}

}  // namespace

FinBialgebra::FinBialgebra(FinAlgebra algebra, std::shared_ptr<const Coalgebra> coalgebra)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)) {
  const std::size_t d = algebra_.dim();
  const Coalgebra& c = *coalgebra_;
  if (c.dim() != d || !(c.field() == algebra_.field())) throw std::invalid_argument("algebra and coalgebra do not match");
  if (!(c.coproduct(algebra_.unit()) == kronecker(algebra_.unit(), algebra_.unit()))) {
    throw std::invalid_argument("comultiplication does not preserve the unit");
  }
  if (!c.counit_of(algebra_.unit()).is_one()) throw std::invalid_argument("counit does not preserve the unit");
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector ab = algebra_.mult().column(a * d + b);
      if (!(c.counit_of(ab) == c.counit()[a] * c.counit()[b])) {
        throw std::invalid_argument("counit is not multiplicative at (" + labels()[a] + "," + labels()[b] + ")");
      }
      const Vector lhs = c.coproduct(ab);
      const Vector rhs = tensor_square_product(algebra_, c.delta().column(a), c.delta().column(b));
      if (!(lhs == rhs)) {
        throw std::invalid_argument("comultiplication is not multiplicative at (" + labels()[a] + "," + labels()[b] +
                                    ")");
      }
    }
}

CayleyTable symmetric_group(std::size_t k) {
  if (k == 0 || k > 6) throw std::invalid_argument("symmetric group order out of range");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  CayleyTable g;
  for (const auto& q : perms) {
    std::string label;
    for (auto x : q) label += std::to_string(x + 1);
    g.labels.push_back(label);
  }
  g.table.assign(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(k);
      for (std::size_t x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

CayleyTable cyclic_group(std::size_t k) {
  if (k == 0) throw std::invalid_argument("cyclic group order must be positive");
  CayleyTable g;
  for (std::size_t a = 0; a < k; ++a) g.labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  g.table.assign(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) g.table[a][b] = (a + b) % k;
  return g;
}

FinBialgebra group_bialgebra(const Field& field, const CayleyTable& g) {
  const std::size_t m = g.labels.size();
  if (m == 0) throw std::invalid_argument("group must be nonempty");
  if (g.table.size() != m) throw std::invalid_argument("Cayley table has the wrong number of rows");
  for (const auto& row : g.table) {
    if (row.size() != m) throw std::invalid_argument("Cayley table has a row of the wrong length");
    for (auto x : row) {
      if (x >= m) throw std::invalid_argument("closure fails: Cayley table entry out of range");
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
          throw std::invalid_argument("associativity fails at (" + g.labels[a] + "," + g.labels[b] + "," + g.labels[c] +
                                      ")");
        }
      }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < m && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < m && ok; ++b) ok = g.table[a][b] == b && g.table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw std::invalid_argument("identity fails: no two-sided identity element");
  for (std::size_t a = 0; a < m; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m && !found; ++b) found = g.table[a][b] == *e && g.table[b][a] == *e;
    if (!found) throw std::invalid_argument("inverses fail: " + g.labels[a] + " has no inverse");
  }
  Matrix mult(field, m, m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) mult(g.table[a][b], a * m + b) = field.one();
  FinAlgebra algebra(field, g.labels, std::move(mult), Vector::unit(field, m, *e));
  return FinBialgebra(std::move(algebra), std::make_shared<const Coalgebra>(grouplike_coalgebra(field, g.labels)));
}

std::optional<std::string> module_defect(const FinAlgebra& a, const std::vector<Matrix>& action) {
  const std::size_t d = a.dim();
  if (action.size() != d) return "action must give one matrix per basis element";
  const std::size_t m = action.front().rows();
  for (const auto& x : action) {
    if (!x.is_square() || x.rows() != m || !(x.field() == a.field())) return "action matrices have inconsistent shapes";
  }
  if (!(act_element(action, a.unit()) == Matrix::identity(a.field(), m))) return "unit does not act as the identity";
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t c = 0; c < d; ++c) {
      if (!(action[b] * action[c] == act_element(action, a.mult().column(b * d + c)))) {
        return "action is not multiplicative at (" + a.labels()[b] + "," + a.labels()[c] + ")";
      }
    }
  return std::nullopt;
}

Matrix act_element(const std::vector<Matrix>& action, const Vector& v) {
  if (action.size() != v.size()) throw std::invalid_argument("element and action have different dimensions");
  Matrix out(action.front().field(), action.front().rows(), action.front().cols());
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (!v[b].is_zero()) out += action[b].scaled(v[b]);
  }
  return out;
}

bool compatible_operator(const Matrix& op, const Comodule& rho) {
  const Matrix id = Matrix::identity(op.field(), rho.coalgebra()->dim());
  return rho.coaction() * op == kronecker(op, id) * rho.coaction();
}

bool check_long_compat(const FinAlgebra& a, const std::vector<Matrix>& action, const Comodule& rho) {
  if (action.size() != a.dim()) throw std::invalid_argument("action must give one matrix per basis element");
  for (const auto& op : action) {
    if (op.rows() != rho.dim() || !op.is_square()) throw std::invalid_argument("action and coaction dimensions differ");
    if (!compatible_operator(op, rho)) return false;
  }
  return true;
}

std::vector<std::size_t> algebra_generators(const FinAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<std::size_t> gens;
  auto closure = [&](const std::vector<std::size_t>& g) {
    std::vector<Vector> span{a.unit()};
    for (auto x : g) span.push_back(Vector::unit(a.field(), d, x));
    std::size_t dim = 0;
    for (;;) {
      Subspace s(a.field(), d, span);
      if (s.dimension() == dim) return s;
      dim = s.dimension();
      std::vector<Vector> next = s.basis();
      for (const auto& v : s.basis())
        for (auto x : g) next.push_back(a.multiply(v, Vector::unit(a.field(), d, x)));
      span = std::move(next);
    }
  };
  Subspace current = closure(gens);
  for (std::size_t x = 0; x < d && current.dimension() < d; ++x) {
    if (current.contains(Vector::unit(a.field(), d, x))) continue;
    gens.push_back(x);
    current = closure(gens);
  }
  return gens;
}

bool check_long_compat_generators(const FinAlgebra& a, const std::vector<Matrix>& action, const Comodule& rho) {
  if (action.size() != a.dim()) throw std::invalid_argument("action must give one matrix per basis element");
  for (auto x : algebra_generators(a)) {
    if (!compatible_operator(action[x], rho)) return false;
  }
  return true;
}

std::vector<Matrix> trivial_action(const FinBialgebra& h, std::size_t dim) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    out.push_back(Matrix::identity(h.field(), dim).scaled(h.coalgebra()->counit()[a]));
  }
  return out;
}

Comodule trivial_coaction(const FinBialgebra& h, std::size_t dim) {
  const std::size_t d = h.dim();
  Matrix rho(h.field(), dim * d, dim);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t a = 0; a < d; ++a) rho(l * d + a, l) = h.algebra().unit()[a];
  return Comodule(h.coalgebra(), std::move(rho));
}

LongDimodule::LongDimodule(std::vector<Matrix> action, Comodule coaction)
    : action_(std::move(action)), coaction_(std::move(coaction)) {}

LongDimodule::LongDimodule(std::shared_ptr<const FinBialgebra> host, std::vector<Matrix> action, Comodule coaction)
    : host_(std::move(host)), action_(std::move(action)), coaction_(std::move(coaction)) {
  if (!(*coaction_.coalgebra() == *host_->coalgebra())) throw std::invalid_argument("coaction is over a different coalgebra");
  if (action_.size() != host_->dim()) throw std::invalid_argument("action must give one matrix per basis element");
  for (const auto& op : action_) {
    if (!op.is_square() || op.rows() != coaction_.dim()) throw std::invalid_argument("action and coaction dimensions differ");
  }
  if (auto defect = module_defect(host_->algebra(), action_)) throw std::invalid_argument(*defect);
  const bool basis = check_long_compat(host_->algebra(), action_, coaction_);
  if (basis != check_long_compat_generators(host_->algebra(), action_, coaction_)) {
    throw std::logic_error("basis and generator compatibility verdicts disagree");
  }
  if (!basis) throw std::invalid_argument("compatibility condition fails");
}

LongDimodule LongDimodule::presented(std::vector<Matrix> generator_action, Comodule coaction) {
  if (generator_action.size() != coaction.coalgebra()->dim()) {
    throw std::invalid_argument("action must give one matrix per generator");
  }
  for (const auto& op : generator_action) {
    if (!op.is_square() || op.rows() != coaction.dim()) throw std::invalid_argument("action and coaction dimensions differ");
    if (!compatible_operator(op, coaction)) throw std::invalid_argument("compatibility condition fails on a generator");
  }
  return LongDimodule(std::move(generator_action), std::move(coaction));
}

Matrix LongDimodule::act_word(const std::vector<std::size_t>& word) const {
  Matrix out = Matrix::identity(coaction_.coalgebra()->field(), dim());
  for (auto g : word) {
    if (g >= action_.size()) throw std::invalid_argument("generator index out of range");
    out = out * action_[g];
  }
  return out;
}

GradedModule::GradedModule(std::shared_ptr<const FinBialgebra> group, std::vector<Matrix> action,
                           std::vector<Matrix> projectors)
    : group_(std::move(group)), action_(std::move(action)), projectors_(std::move(projectors)) {
  const std::size_t d = group_->dim();
  if (action_.empty() || projectors_.size() != d) throw std::invalid_argument("need one projector per group element");
  if (auto defect = module_defect(group_->algebra(), action_)) throw std::invalid_argument(*defect);
  const std::size_t m = dim();
  Matrix sum(group_->field(), m, m);
  for (std::size_t s = 0; s < d; ++s) {
    const Matrix& p = projectors_[s];
    if (!p.is_square() || p.rows() != m) throw std::invalid_argument("projector has the wrong size");
    if (!(p * p == p)) throw std::invalid_argument("projector for " + group_->labels()[s] + " is not idempotent");
    for (std::size_t t = 0; t < s; ++t) {
      if (!(p * projectors_[t]).is_zero() || !(projectors_[t] * p).is_zero()) {
        throw std::invalid_argument("projectors are not orthogonal");
      }
    }
    for (std::size_t g = 0; g < d; ++g) {
      if (!(action_[g] * p == p * action_[g])) {
        throw std::invalid_argument("component " + group_->labels()[s] + " is not stable under " + group_->labels()[g]);
      }
    }
    sum += p;
  }
  if (!(sum == Matrix::identity(group_->field(), m))) throw std::invalid_argument("projectors do not sum to the identity");
}

LongDimodule dimodule_from_grading(const GradedModule& g) {
  const std::size_t d = g.group()->dim(), m = g.dim();
  Matrix rho(g.group()->field(), m * d, m);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t l = 0; l < m; ++l) rho(v * d + s, l) = g.projectors()[s](v, l);
  return LongDimodule(g.group(), g.action(), Comodule(g.group()->coalgebra(), std::move(rho)));
}

std::vector<Matrix> projectors_from_coaction(const Comodule& rho) {
  const std::size_t d = rho.coalgebra()->dim(), m = rho.dim();
  std::vector<Matrix> out(d, Matrix(rho.coalgebra()->field(), m, m));
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t l = 0; l < m; ++l) out[s](v, l) = rho.coefficient(l, v, s);
  return out;
}

GradedModule coset_graded_example(std::shared_ptr<const FinBialgebra> group, const CayleyTable& g) {
  const std::size_t d = g.labels.size();
  if (group->dim() != d) throw std::invalid_argument("group and Cayley table differ");
  const std::size_t e = static_cast<std::size_t>(
      std::find_if(group->algebra().unit().entries().begin(), group->algebra().unit().entries().end(),
                   [](const Scalar& x) { return !x.is_zero(); }) -
      group->algebra().unit().entries().begin());
  std::optional<std::size_t> s, t;
  for (std::size_t a = 0; a < d && !s; ++a) {
    if (a != e && g.table[a][a] == e) s = a;
  }
  if (!s) throw std::invalid_argument("group has no involution");
  for (std::size_t a = 0; a < d && !t; ++a) {
    if (g.table[*s][a] != g.table[a][*s]) t = a;
  }
  if (!t) throw std::invalid_argument("involution is central; need a non-abelian example");

  // left cosets xH, H = {e, s}, ordered by smallest member
  std::vector<std::size_t> coset_of(d, d);
  std::size_t cosets = 0;
  for (std::size_t x = 0; x < d; ++x) {
    if (coset_of[x] != d) continue;
    coset_of[x] = coset_of[g.table[x][*s]] = cosets++;
  }
  const std::size_t m = cosets + 1;
  const Field& f = group->field();
  std::vector<Matrix> action;
  for (std::size_t h = 0; h < d; ++h) {
    Matrix a(f, m, m);
    for (std::size_t x = 0; x < d; ++x) a(coset_of[g.table[h][x]], coset_of[x]) = f.one();
    a(cosets, cosets) = f.one();
    action.push_back(std::move(a));
  }
  std::vector<Matrix> proj(d, Matrix(f, m, m));
  for (std::size_t c = 0; c < cosets; ++c) proj[*s](c, c) = f.one();
  proj[*t](cosets, cosets) = f.one();
  return GradedModule(std::move(group), std::move(action), std::move(proj));
}

EndoPair r_from_dimodule(const LongDimodule& dm) {
  const std::size_t n = dm.dim(), d = dm.coalgebra().dim();
  const Field& f = dm.coalgebra().field();
  Matrix r(f, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < d; ++c) {
          const Scalar& coeff = dm.coaction().coefficient(b, v, c);
          if (coeff.is_zero()) continue;
          for (std::size_t i = 0; i < n; ++i) {
            const Scalar& x = dm.action()[c](i, a);
            if (!x.is_zero()) r(i * n + v, a * n + b) += coeff * x;
          }
        }
  return EndoPair(std::move(r));
}

namespace {

const FinBialgebra& full_host(const LongDimodule& m) {
  if (m.is_presented()) throw std::invalid_argument("operation needs a finite bialgebra host, not a presentation");
  return *m.host();
}

}  // namespace

LongDimodule tensor_dimodule(const LongDimodule& m, const LongDimodule& n) {
  const FinBialgebra& h = full_host(m);
  if (m.host() != n.host() && !(*h.coalgebra() == *full_host(n).coalgebra() &&
                                h.algebra().mult() == full_host(n).algebra().mult())) {
    throw std::invalid_argument("dimodules live over different bialgebras");
  }
  const std::size_t d = h.dim(), dm = m.dim(), dn = n.dim();
  const Field& f = h.field();
  const Coalgebra& c = *h.coalgebra();
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < d; ++a) {
    Matrix op(f, dm * dn, dm * dn);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t e = 0; e < d; ++e) {
        if (!c.mu(a, b, e).is_zero()) op += kronecker(m.action()[b], n.action()[e]).scaled(c.mu(a, b, e));
      }
    action.push_back(std::move(op));
  }
  Matrix rho(f, dm * dn * d, dm * dn);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t v = 0; v < dm; ++v)
        for (std::size_t x = 0; x < d; ++x) {
          const Scalar& p = m.coaction().coefficient(i, v, x);
          if (p.is_zero()) continue;
          for (std::size_t w = 0; w < dn; ++w)
            for (std::size_t y = 0; y < d; ++y) {
              const Scalar& q = n.coaction().coefficient(j, w, y);
              if (q.is_zero()) continue;
              for (std::size_t z = 0; z < d; ++z) {
                const Scalar& prod = h.algebra().mult()(z, x * d + y);
                if (!prod.is_zero()) rho((v * dn + w) * d + z, i * dn + j) += p * q * prod;
              }
            }
        }
  return LongDimodule(m.host(), std::move(action), Comodule(h.coalgebra(), std::move(rho)));
}

LongDimodule unit_dimodule(std::shared_ptr<const FinBialgebra> h) {
  auto action = trivial_action(*h, 1);
  auto rho = trivial_coaction(*h, 1);
  return LongDimodule(std::move(h), std::move(action), std::move(rho));
}

LongDimodule induce_from_module(std::shared_ptr<const FinBialgebra> h, const std::vector<Matrix>& action) {
  if (auto defect = module_defect(h->algebra(), action)) throw std::invalid_argument(*defect);
  const std::size_t d = h->dim(), n = action.front().rows();
  const Field& f = h->field();
  const Matrix id = Matrix::identity(f, d);
  std::vector<Matrix> induced;
  for (const auto& op : action) induced.push_back(kronecker(op, id));
  const Coalgebra& c = *h->coalgebra();
  Matrix rho(f, n * d * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t l1 = 0; l1 < d; ++l1)
        for (std::size_t l2 = 0; l2 < d; ++l2) rho((i * d + l1) * d + l2, i * d + l) = c.mu(l, l1, l2);
  return LongDimodule(h, std::move(induced), Comodule(h->coalgebra(), std::move(rho)));
}

LongDimodule induce_from_comodule(std::shared_ptr<const FinBialgebra> h, const Comodule& m) {
  if (!(*m.coalgebra() == *h->coalgebra())) throw std::invalid_argument("comodule is over a different coalgebra");
  const std::size_t d = h->dim(), n = m.dim();
  const Field& f = h->field();
  const Matrix id = Matrix::identity(f, n);
  std::vector<Matrix> induced;
  for (std::size_t a = 0; a < d; ++a) {
    Matrix left(f, d, d);
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t z = 0; z < d; ++z) left(z, l) = h->algebra().mult()(z, a * d + l);
    induced.push_back(kronecker(left, id));
  }
  Matrix rho(f, d * n * d, d * n);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < d; ++c) rho((l * n + v) * d + c, l * n + i) = m.coefficient(i, v, c);
  return LongDimodule(h, std::move(induced), Comodule(h->coalgebra(), std::move(rho)));
}

}  // namespace deq
