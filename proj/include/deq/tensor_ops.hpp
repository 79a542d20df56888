#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deq/matrix.hpp"

namespace deq {

/// An endomorphism R of M⊗M for M with basis m_0..m_{n-1}.
///
/// Indices are 0-based. x(u,v,j,i) is the coefficient with
/// R(m_v ⊗ m_u) = Σ_{i,j} x(u,v,j,i) m_i ⊗ m_j, stored in the n²×n² matrix
/// at row i*n+j, column v*n+u. With that layout f⊗g serializes to
/// kronecker(f, g).
class EndoPair {
 public:
  /// Takes a square matrix whose size is a perfect square n² with n ≥ 1.
  explicit EndoPair(Matrix m);
  static EndoPair identity(const Field& field, std::size_t n);
  static EndoPair zero(const Field& field, std::size_t n);
  static EndoPair flip(const Field& field, std::size_t n);
  static EndoPair from_coefficients(const Field& field, std::size_t n,
                                    const std::function<Scalar(std::size_t, std::size_t, std::size_t, std::size_t)>& x);

  std::size_t n() const { return n_; }
  const Field& field() const { return m_.field(); }
  const Matrix& matrix() const { return m_; }

  const Scalar& x(std::size_t u, std::size_t v, std::size_t j, std::size_t i) const {
    return m_(i * n_ + j, v * n_ + u);
  }

  friend bool operator==(const EndoPair& a, const EndoPair& b) { return a.m_ == b.m_; }

 private:
  std::size_t n_;
  Matrix m_;
};

/// An operator on M⊗M⊗M; basis index a*n²+b*n+c stands for m_a⊗m_b⊗m_c.
struct EndoTriple {
  std::size_t n;
  Matrix m;
};

enum class Slot { s12, s13, s23 };

EndoTriple lift(const EndoPair& r, Slot slot);
/// Matrix of l⊗m⊗n ↦ n⊗l⊗m.
Matrix cyclic_flip(const Field& field, std::size_t n);
/// Matrix of the flip of the second and third tensor factors.
Matrix flip23(const Field& field, std::size_t n);

/// First (i,j,k,l,p,q) at which the coordinate form of R¹²R²³ = R²³R¹²
/// fails, scanned in lexicographic order.
std::optional<std::array<std::size_t, 6>> first_d_violation(const EndoPair& r);
bool check_d_coordinates(const EndoPair& r);
bool check_d_operator(const EndoPair& r);
/// Runs both paths and throws std::logic_error if they disagree.
bool check_d(const EndoPair& r);

/// R²³S¹² = S¹²R²³, via coordinates and via operators (must agree).
/// Throws std::invalid_argument on a dimension or field mismatch.
bool check_commuting_pair(const EndoPair& r, const EndoPair& s);

bool check_qybe(const EndoPair& r);
bool check_hopf(const EndoPair& r);
bool check_pentagon(const EndoPair& w);

/// form_w uses τ¹²³W²³W³¹ = W¹²W³¹τ¹²³ with W³¹ = τ¹³W¹³τ¹³, which is
/// equivalent to the D-equation. form_w_printed keeps W¹³ in both places;
/// that variant fails on some diagonal solutions and is reported only.
struct EquivalentForms {
  bool d;
  bool form_t;
  bool form_u;
  bool form_w;
  bool form_w_printed;
  bool consistent() const { return d == form_t && d == form_u && d == form_w; }
};
EquivalentForms check_equivalent_forms(const EndoPair& r);

/// (u⊗u) R (u⊗u)⁻¹. Throws std::invalid_argument for singular or
/// wrongly sized u.
EndoPair conjugate(const EndoPair& r, const Matrix& u);
EndoPair product_solution(const Matrix& f, const Matrix& g);
/// R(m_i⊗m_j) = a(i,j) m_i⊗m_j.
EndoPair diagonal_solution(const Matrix& a);
std::optional<EndoPair> invert(const EndoPair& r);
/// Rτ == τR.
bool commutes_with_flip(const EndoPair& r);

}  // namespace deq
