#include "deq/coalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace deq {

namespace {

// Entry of Δ(e_a) at e_b⊗e_c, read from a d²×d constants matrix.
const Scalar& mu_of(const Matrix& delta, std::size_t d, std::size_t a, std::size_t b, std::size_t c) {
  return delta(b * d + c, a);
}

}  // namespace

std::optional<std::string> coalgebra_defect(const Matrix& delta, const Vector& counit) {
  const std::size_t d = counit.size();
  if (delta.rows() != d * d || delta.cols() != d) return "comultiplication table has the wrong shape";
  const Field& f = delta.field();
  for (std::size_t a = 0; a < d; ++a) {
    Vector left(f, d * d * d), right(f, d * d * d);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const Scalar& m = mu_of(delta, d, a, b, c);
        if (m.is_zero()) continue;
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y) {
            const Scalar& mb = mu_of(delta, d, b, x, y);
            if (!mb.is_zero()) left[(x * d + y) * d + c] += m * mb;
            const Scalar& mc = mu_of(delta, d, c, x, y);
            if (!mc.is_zero()) right[(b * d + x) * d + y] += m * mc;
          }
      }
    if (!(left == right)) return "coassociativity fails on basis element " + std::to_string(a + 1);
    Vector eps_left(f, d), eps_right(f, d);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const Scalar& m = mu_of(delta, d, a, b, c);
        if (m.is_zero()) continue;
        eps_left[c] += counit[b] * m;
        eps_right[b] += m * counit[c];
      }
    const Vector unit = Vector::unit(f, d, a);
    if (!(eps_left == unit) || !(eps_right == unit)) {
      return "counit law fails on basis element " + std::to_string(a + 1);
    }
  }
  return std::nullopt;
}

Coalgebra::Coalgebra(Field field, std::vector<std::string> labels, Matrix delta, Vector counit)
    : field_(std::move(field)), labels_(std::move(labels)), delta_(std::move(delta)), counit_(std::move(counit)) {
  if (labels_.empty()) throw std::invalid_argument("coalgebra must have positive dimension");
  if (counit_.size() != labels_.size()) throw std::invalid_argument("counit has the wrong length");
  if (!(delta_.field() == field_) || !(counit_.field() == field_)) {
    throw std::invalid_argument("coalgebra data over the wrong field");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw std::invalid_argument("empty basis label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate basis label " + labels_[i]);
    }
  }
  if (auto defect = coalgebra_defect(delta_, counit_)) throw std::invalid_argument(*defect);
}

Coalgebra Coalgebra::from_terms(const Field& field, std::vector<std::string> labels, const std::vector<Term>& terms,
                                Vector counit) {
  const std::size_t d = labels.size();
  if (d == 0) throw std::invalid_argument("coalgebra must have positive dimension");
  Matrix delta(field, d * d, d);
  for (const auto& t : terms) {
    if (t.a >= d || t.b >= d || t.c >= d) throw std::invalid_argument("structure constant index out of range");
    delta(t.b * d + t.c, t.a) += t.value;
  }
  return Coalgebra(field, std::move(labels), std::move(delta), std::move(counit));
}

Vector Coalgebra::coproduct(const Vector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("element has the wrong dimension");
  return delta_ * v;
}

Scalar Coalgebra::counit_of(const Vector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("element has the wrong dimension");
  Scalar s = field_.zero();
  for (std::size_t a = 0; a < dim(); ++a) {
    if (!v[a].is_zero() && !counit_[a].is_zero()) s += v[a] * counit_[a];
  }
  return s;
}

bool Coalgebra::is_cocommutative() const {
  const std::size_t d = dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < b; ++c) {
        if (!(mu(a, b, c) == mu(a, c, b))) return false;
      }
  return true;
}

std::size_t Coalgebra::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown basis label " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::string> comodule_defect(const Coalgebra& c, const Matrix& coaction) {
  const std::size_t d = c.dim();
  if (coaction.rows() % d != 0 || coaction.rows() / d != coaction.cols()) return "coaction table has the wrong shape";
  if (!(coaction.field() == c.field())) return "coaction over the wrong field";
  const std::size_t m = coaction.cols();
  const Matrix im = Matrix::identity(c.field(), m);
  if (!(kronecker(coaction, Matrix::identity(c.field(), d)) * coaction == kronecker(im, c.delta()) * coaction)) {
    return "coaction is not coassociative";
  }
  Matrix eps(c.field(), 1, d);
  for (std::size_t a = 0; a < d; ++a) eps(0, a) = c.counit()[a];
  if (!(kronecker(im, eps) * coaction == im)) return "coaction violates the counit law";
  return std::nullopt;
}

Comodule::Comodule(std::shared_ptr<const Coalgebra> coalgebra, Matrix coaction)
    : coalgebra_(std::move(coalgebra)), coaction_(std::move(coaction)) {
  if (auto defect = comodule_defect(*coalgebra_, coaction_)) throw std::invalid_argument(*defect);
}

Comodule Comodule::trivial(std::shared_ptr<const Coalgebra> coalgebra, std::size_t dim, std::size_t grouplike) {
  const std::size_t d = coalgebra->dim();
  if (grouplike >= d) throw std::invalid_argument("grouplike index out of range");
  Matrix rho(coalgebra->field(), dim * d, dim);
  for (std::size_t l = 0; l < dim; ++l) rho(l * d + grouplike, l) = coalgebra->field().one();
  return Comodule(std::move(coalgebra), std::move(rho));
}

std::string comatrix_label(std::size_t n, std::size_t j, std::size_t k) {
  if (n < 10) return "c" + std::to_string(j + 1) + std::to_string(k + 1);
  return "c" + std::to_string(j + 1) + "_" + std::to_string(k + 1);
}

Coalgebra comatrix(const Field& field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("comatrix order must be positive");
  const std::size_t d = n * n;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) labels.push_back(comatrix_label(n, j, k));
  Matrix delta(field, d * d, d);
  Vector eps(field, d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t u = 0; u < n; ++u) delta((j * n + u) * d + (u * n + k), j * n + k) = field.one();
      if (j == k) eps[j * n + k] = field.one();
    }
  return Coalgebra(field, std::move(labels), std::move(delta), std::move(eps));
}

Coalgebra grouplike_coalgebra(const Field& field, std::vector<std::string> labels) {
  const std::size_t d = labels.size();
  if (d == 0) throw std::invalid_argument("grouplike coalgebra needs at least one label");
  Matrix delta(field, d * d, d);
  Vector eps(field, d);
  for (std::size_t a = 0; a < d; ++a) {
    delta(a * d + a, a) = field.one();
    eps[a] = field.one();
  }
  return Coalgebra(field, std::move(labels), std::move(delta), std::move(eps));
}

std::vector<std::size_t> comatrix_pivot_order(std::size_t n) {
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j != k) order.push_back(j * n + k);
    }
  for (std::size_t j = n; j-- > 0;) order.push_back(j * n + j);
  return order;
}

namespace {

// Coordinates of v modulo i on the non-pivot positions `kept`.
Vector quotient_coordinates(const Subspace& i, const std::vector<std::size_t>& kept, const Vector& v) {
  const Vector r = i.reduce(v);
  Vector out(v.field(), kept.size());
  for (std::size_t s = 0; s < kept.size(); ++s) out[s] = r[kept[s]];
  return out;
}

std::vector<std::size_t> non_pivots(const Subspace& i) {
  std::vector<bool> pivot(i.ambient_dim(), false);
  for (auto p : i.pivots()) pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < i.ambient_dim(); ++a) {
    if (!pivot[a]) kept.push_back(a);
  }
  return kept;
}

Matrix projection_matrix(const Subspace& i, const std::vector<std::size_t>& kept) {
  const std::size_t d = i.ambient_dim();
  Matrix p(i.field(), kept.empty() ? 1 : kept.size(), d);
  for (std::size_t a = 0; a < d; ++a) {
    const Vector coords = quotient_coordinates(i, kept, Vector::unit(i.field(), d, a));
    for (std::size_t s = 0; s < kept.size(); ++s) p(s, a) = coords[s];
  }
  return p;
}

}  // namespace

bool is_coideal(const Coalgebra& c, const Subspace& i) {
  if (i.ambient_dim() != c.dim()) throw std::invalid_argument("subspace does not live in the coalgebra");
  if (!(i.field() == c.field())) throw std::invalid_argument("subspace over the wrong field");
  for (const auto& v : i.basis()) {
    if (!c.counit_of(v).is_zero()) return false;
  }
  const std::vector<std::size_t> kept = non_pivots(i);
  if (kept.empty()) return true;
  // I⊗C + C⊗I is the kernel of π⊗π
  const Matrix p = projection_matrix(i, kept);
  const Matrix pp = kronecker(p, p);
  for (const auto& v : i.basis()) {
    if (!(pp * c.coproduct(v)).is_zero()) return false;
  }
  return true;
}

QuotientCoalgebra::QuotientCoalgebra(std::shared_ptr<const Coalgebra> parent, Subspace i)
    : parent_(std::move(parent)),
      coideal_(std::move(i)),
      projection_(parent_->field(), 1, 1),
      section_(parent_->field(), 1, 1) {
  kept_ = non_pivots(coideal_);
  if (kept_.empty()) throw std::invalid_argument("coideal is the whole coalgebra");
  Matrix s(parent_->field(), parent_->dim(), kept_.size());
  for (std::size_t t = 0; t < kept_.size(); ++t) s(kept_[t], t) = parent_->field().one();
  build(std::move(s));
}

QuotientCoalgebra::QuotientCoalgebra(std::shared_ptr<const Coalgebra> parent, Subspace i, Matrix section)
    : parent_(std::move(parent)),
      coideal_(std::move(i)),
      projection_(parent_->field(), 1, 1),
      section_(parent_->field(), 1, 1) {
  kept_ = non_pivots(coideal_);
  if (kept_.empty()) throw std::invalid_argument("coideal is the whole coalgebra");
  build(std::move(section));
}

void QuotientCoalgebra::build(Matrix section) {
  const Coalgebra& c = *parent_;
  const Field& f = c.field();
  if (coideal_.ambient_dim() != c.dim()) throw std::invalid_argument("subspace does not live in the coalgebra");
  if (!is_coideal(c, coideal_)) throw std::invalid_argument("subspace is not a coideal");
  const std::size_t d = c.dim(), q = kept_.size();
  if (section.rows() != d || section.cols() != q) throw std::invalid_argument("section has the wrong shape");

  projection_ = projection_matrix(coideal_, kept_);
  if (!(projection_ * section == Matrix::identity(f, q))) throw std::invalid_argument("section is not a right inverse of the projection");
  section_ = std::move(section);

  const Matrix pp = kronecker(projection_, projection_);
  const Matrix bar_delta = pp * c.delta() * section_;
  Vector bar_eps(f, q);
  for (std::size_t s = 0; s < q; ++s) bar_eps[s] = c.counit_of(section_.column(s));
  std::vector<std::string> labels;
  for (auto a : kept_) labels.push_back(overline(c.labels()[a]));
  quotient_ = std::make_shared<const Coalgebra>(f, std::move(labels), bar_delta, std::move(bar_eps));
}

std::string overline(const std::string& label) {
  if (label.empty()) return label;
  return label.substr(0, 1) + "̄" + label.substr(1);
}

BilinearForm::BilinearForm(std::shared_ptr<const Coalgebra> left, std::shared_ptr<const Coalgebra> right, Matrix table)
    : left_(std::move(left)), right_(std::move(right)), table_(std::move(table)) {
  if (table_.rows() != left_->dim() || table_.cols() != right_->dim()) {
    throw std::invalid_argument("bilinear form table has the wrong shape");
  }
  if (!(left_->field() == right_->field()) || !(table_.field() == left_->field())) {
    throw std::invalid_argument("bilinear form over mismatched fields");
  }
}

BilinearForm BilinearForm::unit(std::shared_ptr<const Coalgebra> left, std::shared_ptr<const Coalgebra> right) {
  Matrix t(left->field(), left->dim(), right->dim());
  for (std::size_t a = 0; a < left->dim(); ++a)
    for (std::size_t b = 0; b < right->dim(); ++b) {
      if (!left->counit()[a].is_zero() && !right->counit()[b].is_zero()) t(a, b) = left->counit()[a] * right->counit()[b];
    }
  return BilinearForm(std::move(left), std::move(right), std::move(t));
}

namespace {

void require_same_pair(const BilinearForm& x, const BilinearForm& y) {
  const bool same_left = x.left() == y.left() || *x.left() == *y.left();
  const bool same_right = x.right() == y.right() || *x.right() == *y.right();
  if (!same_left || !same_right) throw std::invalid_argument("bilinear forms live on different coalgebra pairs");
}

}  // namespace

BilinearForm convolve(const BilinearForm& phi, const BilinearForm& psi) {
  require_same_pair(phi, psi);
  const Coalgebra& c = *phi.left();
  const Coalgebra& d = *phi.right();
  const std::size_t dc = c.dim(), dd = d.dim();
  Matrix out(c.field(), dc, dd);
  for (std::size_t a = 0; a < dc; ++a)
    for (std::size_t a1 = 0; a1 < dc; ++a1)
      for (std::size_t a2 = 0; a2 < dc; ++a2) {
        const Scalar& m = c.mu(a, a1, a2);
        if (m.is_zero()) continue;
        for (std::size_t b = 0; b < dd; ++b)
          for (std::size_t b1 = 0; b1 < dd; ++b1) {
            const Scalar& p = phi(a1, b1);
            if (p.is_zero()) continue;
            for (std::size_t b2 = 0; b2 < dd; ++b2) {
              const Scalar& n = d.mu(b, b1, b2);
              if (n.is_zero()) continue;
              const Scalar& s = psi(a2, b2);
              if (!s.is_zero()) out(a, b) += m * n * p * s;
            }
          }
      }
  return BilinearForm(phi.left(), phi.right(), std::move(out));
}

std::optional<BilinearForm> convolution_inverse(const BilinearForm& phi) {
  const Coalgebra& c = *phi.left();
  const Coalgebra& d = *phi.right();
  const std::size_t dc = c.dim(), dd = d.dim(), size = dc * dd;
  const Field& f = c.field();
  // row (a,b) holds the coefficients of ψ(a2,b2) in (φ*ψ)(a,b)
  Matrix system(f, size, size);
  for (std::size_t a = 0; a < dc; ++a)
    for (std::size_t a1 = 0; a1 < dc; ++a1)
      for (std::size_t a2 = 0; a2 < dc; ++a2) {
        const Scalar& m = c.mu(a, a1, a2);
        if (m.is_zero()) continue;
        for (std::size_t b = 0; b < dd; ++b)
          for (std::size_t b1 = 0; b1 < dd; ++b1) {
            const Scalar& p = phi(a1, b1);
            if (p.is_zero()) continue;
            for (std::size_t b2 = 0; b2 < dd; ++b2) {
              const Scalar& n = d.mu(b, b1, b2);
              if (!n.is_zero()) system(a * dd + b, a2 * dd + b2) += m * n * p;
            }
          }
      }
  const BilinearForm unit = BilinearForm::unit(phi.left(), phi.right());
  Vector rhs(f, size);
  for (std::size_t a = 0; a < dc; ++a)
    for (std::size_t b = 0; b < dd; ++b) rhs[a * dd + b] = unit(a, b);
  const auto x = solve_linear(system, rhs);
  if (!x) return std::nullopt;
  Matrix t(f, dc, dd);
  for (std::size_t a = 0; a < dc; ++a)
    for (std::size_t b = 0; b < dd; ++b) t(a, b) = (*x)[a * dd + b];
  BilinearForm inv(phi.left(), phi.right(), std::move(t));
  if (!(convolve(inv, phi) == unit)) return std::nullopt;
  return inv;
}

namespace {

bool needs_parentheses(const std::string& s) {
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  return s.find_first_of(" /", start) != std::string::npos;
}

}  // namespace

std::string format_combination(const Vector& v, const std::vector<std::string>& labels,
                               const std::vector<std::size_t>& order) {
  std::vector<std::size_t> idx = order;
  if (idx.empty()) {
    for (std::size_t a = 0; a < v.size(); ++a) idx.push_back(a);
  }
  std::string out;
  for (auto a : idx) {
    const Scalar& x = v[a];
    if (x.is_zero()) continue;
    std::string coeff = x.to_string();
    bool negative = false;
    if (!needs_parentheses(coeff) && coeff[0] == '-') {
      negative = true;
      coeff = coeff.substr(1);
    }
    std::string term;
    if (coeff == "1") term = labels[a];
    else if (needs_parentheses(coeff)) term = "(" + coeff + ")*" + labels[a];
    else term = coeff + "*" + labels[a];
    if (out.empty()) out = negative ? "-" + term : term;
    else out += negative ? " - " + term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::string sweedler(const Coalgebra& c, std::size_t a) {
  const std::size_t d = c.dim();
  std::vector<std::string> pair_labels;
  pair_labels.reserve(d * d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t e = 0; e < d; ++e) pair_labels.push_back(c.labels()[b] + " ⊗ " + c.labels()[e]);
  return "Δ(" + c.labels()[a] + ") = " + format_combination(c.delta().column(a), pair_labels);
}

}  // namespace deq
