#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "deq/matrix.hpp"

namespace deq {

/// Finite-dimensional coalgebra given by structure constants.
///
/// delta() is the d²×d matrix whose column a is Δ(e_a) in the basis
/// e_b⊗e_c at index b*d+c. Construction verifies coassociativity and the
/// counit laws and throws std::invalid_argument when either fails.
class Coalgebra {
 public:
  struct Term {
    std::size_t a, b, c;
    Scalar value;
  };

  Coalgebra(Field field, std::vector<std::string> labels, Matrix delta, Vector counit);
  /// Δ(e_a) = Σ value e_b⊗e_c over the listed terms; repeated terms add.
  static Coalgebra from_terms(const Field& field, std::vector<std::string> labels, const std::vector<Term>& terms,
                              Vector counit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& delta() const { return delta_; }
  const Vector& counit() const { return counit_; }

  const Scalar& mu(std::size_t a, std::size_t b, std::size_t c) const { return delta_(b * dim() + c, a); }
  /// Δ(v) as a vector of length d².
  Vector coproduct(const Vector& v) const;
  Scalar counit_of(const Vector& v) const;
  bool is_cocommutative() const;
  /// Index of a label; throws std::invalid_argument when absent.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.delta_ == b.delta_ && a.counit_ == b.counit_;
  }

 private:
  Field field_;
  std::vector<std::string> labels_;
  Matrix delta_;
  Vector counit_;
};

/// Right comodule M over C; coaction() is the (m·d)×m matrix whose column l
/// is ρ(m_l) in the basis m_v⊗e_c at index v*d+c. Construction verifies
/// coassociativity and the counit law of the coaction.
class Comodule {
 public:
  Comodule(std::shared_ptr<const Coalgebra> coalgebra, Matrix coaction);
  /// ρ(m) = m ⊗ e_g for every m, where e_g must be grouplike.
  static Comodule trivial(std::shared_ptr<const Coalgebra> coalgebra, std::size_t dim, std::size_t grouplike);

  std::size_t dim() const { return coaction_.cols(); }
  const std::shared_ptr<const Coalgebra>& coalgebra() const { return coalgebra_; }
  const Matrix& coaction() const { return coaction_; }
  /// Coefficient of m_v ⊗ e_c in ρ(m_l).
  const Scalar& coefficient(std::size_t l, std::size_t v, std::size_t c) const {
    return coaction_(v * coalgebra_->dim() + c, l);
  }

 private:
  std::shared_ptr<const Coalgebra> coalgebra_;
  Matrix coaction_;
};

std::optional<std::string> comodule_defect(const Coalgebra& c, const Matrix& coaction);

/// Reason the structure constants fail the coalgebra axioms, if any.
std::optional<std::string> coalgebra_defect(const Matrix& delta, const Vector& counit);

/// Label "c<j><k>" (1-based) of the comatrix basis element at index j*n+k.
std::string comatrix_label(std::size_t n, std::size_t j, std::size_t k);
/// Δ(c_jk) = Σ_u c_ju⊗c_uk, ε(c_jk) = δ_jk, basis index j*n+k.
Coalgebra comatrix(const Field& field, std::size_t n);
/// Every basis element grouplike.
Coalgebra grouplike_coalgebra(const Field& field, std::vector<std::string> labels);

/// Pivot preference that eliminates off-diagonal comatrix coordinates first
/// (row-major), then diagonal ones from the last to the first.
std::vector<std::size_t> comatrix_pivot_order(std::size_t n);

/// ε(I) = 0 and Δ(I) ⊆ I⊗C + C⊗I.
bool is_coideal(const Coalgebra& c, const Subspace& i);

/// C/I together with the projection and a section.
///
/// The projection π sends e_a to the coordinates of its reduction modulo I
/// on the non-pivot basis vectors of I's echelon form; the default section
/// is the inclusion of those basis vectors. The induced structure is
/// Δ̄ = (π⊗π)ΔS and ε̄ = εS.
class QuotientCoalgebra {
 public:
  /// Throws std::invalid_argument when i is not a coideal of *parent.
  QuotientCoalgebra(std::shared_ptr<const Coalgebra> parent, Subspace i);
  /// Custom section S (d×q) with πS = id; throws otherwise.
  QuotientCoalgebra(std::shared_ptr<const Coalgebra> parent, Subspace i, Matrix section);

  const std::shared_ptr<const Coalgebra>& parent() const { return parent_; }
  const Subspace& coideal() const { return coideal_; }
  const std::shared_ptr<const Coalgebra>& quotient() const { return quotient_; }
  const Matrix& projection() const { return projection_; }
  const Matrix& section() const { return section_; }
  /// Parent indices whose images form the quotient basis.
  const std::vector<std::size_t>& kept() const { return kept_; }
  Vector project(const Vector& v) const { return projection_ * v; }

 private:
  void build(Matrix section);

  std::shared_ptr<const Coalgebra> parent_;
  Subspace coideal_;
  std::vector<std::size_t> kept_;
  Matrix projection_;
  Matrix section_;
  std::shared_ptr<const Coalgebra> quotient_;
};

/// Label with a combining overline after its first character.
std::string overline(const std::string& label);

/// Bilinear map C ⊗ D → k stored as the table value(a, b) on basis pairs.
class BilinearForm {
 public:
  BilinearForm(std::shared_ptr<const Coalgebra> left, std::shared_ptr<const Coalgebra> right, Matrix table);
  static BilinearForm unit(std::shared_ptr<const Coalgebra> left, std::shared_ptr<const Coalgebra> right);

  const std::shared_ptr<const Coalgebra>& left() const { return left_; }
  const std::shared_ptr<const Coalgebra>& right() const { return right_; }
  const Matrix& table() const { return table_; }
  const Scalar& operator()(std::size_t a, std::size_t b) const { return table_(a, b); }

  friend bool operator==(const BilinearForm& x, const BilinearForm& y) { return x.table_ == y.table_; }

 private:
  std::shared_ptr<const Coalgebra> left_, right_;
  Matrix table_;
};

/// (φ*ψ)(c⊗d) = Σ φ(c₁⊗d₁) ψ(c₂⊗d₂). Throws std::invalid_argument when
/// the coalgebra pairs differ.
BilinearForm convolve(const BilinearForm& phi, const BilinearForm& psi);
/// Two-sided convolution inverse, or nullopt.
std::optional<BilinearForm> convolution_inverse(const BilinearForm& phi);

/// Linear combination printed with the given labels, e.g. "c22 - c11",
/// "3*c12 - (a + b)*c21"; "0" when every coefficient vanishes. Terms appear
/// in the order given by `order` (defaults to index order).
std::string format_combination(const Vector& v, const std::vector<std::string>& labels,
                               const std::vector<std::size_t>& order = {});
/// "Δ(x) = x ⊗ x"-style line for basis element a.
std::string sweedler(const Coalgebra& c, std::size_t a);

}  // namespace deq
