#include "deq/tensor_ops.hpp"

#include <stdexcept>

namespace deq {

namespace {

std::size_t root_of_square(std::size_t d) {
  std::size_t n = 1;
  while (n * n < d) ++n;
  if (n * n != d) throw std::invalid_argument("operator size " + std::to_string(d) + " is not a perfect square");
  return n;
}

Matrix permutation(const Field& field, std::size_t size, const std::function<std::size_t(std::size_t)>& image) {
  Matrix p(field, size, size);
  for (std::size_t c = 0; c < size; ++c) p(image(c), c) = field.one();
  return p;
}

void require_compatible(const EndoPair& a, const EndoPair& b) {
  if (a.n() != b.n()) throw std::invalid_argument("operators act on spaces of different dimension");
  if (!(a.field() == b.field())) throw std::invalid_argument("operators live over different fields");
}

}  // namespace

EndoPair::EndoPair(Matrix m) : n_(0), m_(std::move(m)) {
  if (!m_.is_square()) throw std::invalid_argument("operator matrix must be square");
  n_ = root_of_square(m_.rows());
}

EndoPair EndoPair::identity(const Field& field, std::size_t n) { return EndoPair(Matrix::identity(field, n * n)); }

EndoPair EndoPair::zero(const Field& field, std::size_t n) { return EndoPair(Matrix(field, n * n, n * n)); }

EndoPair EndoPair::flip(const Field& field, std::size_t n) {
  return EndoPair(permutation(field, n * n, [n](std::size_t c) { return (c % n) * n + c / n; }));
}

EndoPair EndoPair::from_coefficients(
    const Field& field, std::size_t n,
    const std::function<Scalar(std::size_t, std::size_t, std::size_t, std::size_t)>& x) {
  Matrix m(field, n * n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i * n + j, v * n + u) = x(u, v, j, i);
  return EndoPair(std::move(m));
}

Matrix flip23(const Field& field, std::size_t n) {
  return permutation(field, n * n * n, [n](std::size_t c) {
    const std::size_t a = c / (n * n), b = (c / n) % n, d = c % n;
    return a * n * n + d * n + b;
  });
}

Matrix cyclic_flip(const Field& field, std::size_t n) {
  return permutation(field, n * n * n, [n](std::size_t col) {
    const std::size_t a = col / (n * n), b = (col / n) % n, c = col % n;
    return c * n * n + a * n + b;
  });
}

EndoTriple lift(const EndoPair& r, Slot slot) {
  const std::size_t n = r.n();
  const Matrix id = Matrix::identity(r.field(), n);
  switch (slot) {
    case Slot::s12:
      return {n, kronecker(r.matrix(), id)};
    case Slot::s23:
      return {n, kronecker(id, r.matrix())};
    case Slot::s13: {
      const Matrix p = flip23(r.field(), n);
      return {n, p * kronecker(r.matrix(), id) * p};
    }
  }
  throw std::logic_error("unknown slot");
}

namespace {

// Σ_v x(k,v,j,i) y(l,q,v,p) versus Σ_α x(k,l,j,α) y(α,q,i,p).
std::optional<std::array<std::size_t, 6>> first_pair_violation(const EndoPair& r, const EndoPair& s) {
  const std::size_t n = r.n();
  const Field& f = r.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              Scalar lhs = f.zero(), rhs = f.zero();
              for (std::size_t v = 0; v < n; ++v) {
                const Scalar& a = r.x(k, v, j, i);
                if (!a.is_zero()) {
                  const Scalar& b = s.x(l, q, v, p);
                  if (!b.is_zero()) lhs += a * b;
                }
                const Scalar& c = r.x(k, l, j, v);
                if (!c.is_zero()) {
                  const Scalar& d = s.x(v, q, i, p);
                  if (!d.is_zero()) rhs += c * d;
                }
              }
              if (!(lhs == rhs)) return std::array<std::size_t, 6>{i, j, k, l, p, q};
            }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<std::size_t, 6>> first_d_violation(const EndoPair& r) { return first_pair_violation(r, r); }

bool check_d_coordinates(const EndoPair& r) { return !first_d_violation(r); }

bool check_d_operator(const EndoPair& r) {
  const Matrix r12 = lift(r, Slot::s12).m, r23 = lift(r, Slot::s23).m;
  return r12 * r23 == r23 * r12;
}

bool check_d(const EndoPair& r) {
  const bool coord = check_d_coordinates(r);
  if (coord != check_d_operator(r)) throw std::logic_error("coordinate and operator verdicts disagree");
  return coord;
}

bool check_commuting_pair(const EndoPair& r, const EndoPair& s) {
  require_compatible(r, s);
  const bool coord = !first_pair_violation(r, s);
  const Matrix r23 = lift(r, Slot::s23).m, s12 = lift(s, Slot::s12).m;
  if (coord != (r23 * s12 == s12 * r23)) throw std::logic_error("coordinate and operator verdicts disagree");
  return coord;
}

bool check_qybe(const EndoPair& r) {
  const Matrix r12 = lift(r, Slot::s12).m, r13 = lift(r, Slot::s13).m, r23 = lift(r, Slot::s23).m;
  return r12 * r13 * r23 == r23 * r13 * r12;
}

bool check_hopf(const EndoPair& r) {
  const Matrix r12 = lift(r, Slot::s12).m, r13 = lift(r, Slot::s13).m, r23 = lift(r, Slot::s23).m;
  return r12 * r23 == r23 * r13 * r12;
}

bool check_pentagon(const EndoPair& w) {
  const Matrix w12 = lift(w, Slot::s12).m, w13 = lift(w, Slot::s13).m, w23 = lift(w, Slot::s23).m;
  return w12 * w13 * w23 == w23 * w12;
}

EquivalentForms check_equivalent_forms(const EndoPair& r) {
  const Field& f = r.field();
  const std::size_t n = r.n();
  const Matrix tau = EndoPair::flip(f, n).matrix();
  const Matrix c = cyclic_flip(f, n);

  EquivalentForms out{};
  out.d = check_d(r);

  const EndoPair t(r.matrix() * tau);
  const Matrix t12 = lift(t, Slot::s12).m, t13 = lift(t, Slot::s13).m, t23 = lift(t, Slot::s23).m;
  out.form_t = t12 * t13 == t23 * t13 * c;

  const EndoPair u(tau * r.matrix());
  const Matrix u12 = lift(u, Slot::s12).m, u13 = lift(u, Slot::s13).m, u23 = lift(u, Slot::s23).m;
  out.form_u = u13 * u23 == c * u13 * u12;

  const EndoPair w(tau * r.matrix() * tau);
  const Matrix w12 = lift(w, Slot::s12).m, w13 = lift(w, Slot::s13).m, w23 = lift(w, Slot::s23).m;
  const Matrix f13 = lift(EndoPair::flip(f, n), Slot::s13).m;
  const Matrix w31 = f13 * w13 * f13;
  out.form_w = c * w23 * w31 == w12 * w31 * c;
  out.form_w_printed = c * w23 * w13 == w12 * w13 * c;
  return out;
}

EndoPair conjugate(const EndoPair& r, const Matrix& u) {
  if (!u.is_square() || u.rows() != r.n()) throw std::invalid_argument("conjugating matrix has the wrong size");
  const auto inv = matrix_inverse(u);
  if (!inv) throw std::invalid_argument("conjugating matrix is singular");
  return EndoPair(kronecker(u, u) * r.matrix() * kronecker(*inv, *inv));
}

EndoPair product_solution(const Matrix& f, const Matrix& g) {
  if (!f.is_square() || !g.is_square() || f.rows() != g.rows()) {
    throw std::invalid_argument("product_solution needs square matrices of equal size");
  }
  return EndoPair(kronecker(f, g));
}

EndoPair diagonal_solution(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("diagonal table must be square");
  const std::size_t n = a.rows();
  Matrix m(a.field(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i * n + j, i * n + j) = a(i, j);
  return EndoPair(std::move(m));
}

std::optional<EndoPair> invert(const EndoPair& r) {
  auto inv = matrix_inverse(r.matrix());
  if (!inv) return std::nullopt;
  return EndoPair(std::move(*inv));
}

bool commutes_with_flip(const EndoPair& r) {
  const Matrix tau = EndoPair::flip(r.field(), r.n()).matrix();
  return r.matrix() * tau == tau * r.matrix();
}

}  // namespace deq
