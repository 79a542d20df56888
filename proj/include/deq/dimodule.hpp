#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deq/coalg.hpp"
#include "deq/tensor_ops.hpp"

namespace deq {

/// Finite-dimensional unital associative algebra by structure constants.
/// mult() is the d×d² matrix whose column b*d+c is e_b e_c.
class FinAlgebra {
 public:
  /// Throws std::invalid_argument unless associative with two-sided unit.
  FinAlgebra(Field field, std::vector<std::string> labels, Matrix mult, Vector unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }
  Vector multiply(const Vector& a, const Vector& b) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  Matrix mult_;
  Vector unit_;
};

/// Algebra and coalgebra on the same basis with Δ and ε multiplicative.
class FinBialgebra {
 public:
  /// Throws std::invalid_argument naming the failed identity.
  FinBialgebra(FinAlgebra algebra, std::shared_ptr<const Coalgebra> coalgebra);

  const FinAlgebra& algebra() const { return algebra_; }
  const std::shared_ptr<const Coalgebra>& coalgebra() const { return coalgebra_; }
  const Field& field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<std::string>& labels() const { return algebra_.labels(); }

 private:
  FinAlgebra algebra_;
  std::shared_ptr<const Coalgebra> coalgebra_;
};

/// Cayley table of a finite group; table[a][b] is the index of a*b.
struct CayleyTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
};

/// Symmetric group on k letters; elements are permutations in one-line
/// notation listed lexicographically (identity first), (στ)(x) = σ(τ(x)).
CayleyTable symmetric_group(std::size_t k);
CayleyTable cyclic_group(std::size_t k);
/// k[G] with every group element grouplike. Throws std::invalid_argument
/// naming the failed group axiom.
FinBialgebra group_bialgebra(const Field& field, const CayleyTable& g);

/// Reason the matrices fail to define a left module, if any.
std::optional<std::string> module_defect(const FinAlgebra& a, const std::vector<Matrix>& action);
/// Σ v_b action[b].
Matrix act_element(const std::vector<Matrix>& action, const Vector& v);
/// ρ(a·m) = Σ a·m₀ ⊗ m₁ for one operator a.
bool compatible_operator(const Matrix& op, const Comodule& rho);
/// Compatibility on every basis element of the algebra.
bool check_long_compat(const FinAlgebra& a, const std::vector<Matrix>& action, const Comodule& rho);
/// Compatibility on a generating set only (sufficient for a module).
bool check_long_compat_generators(const FinAlgebra& a, const std::vector<Matrix>& action, const Comodule& rho);
/// Greedy generating set: basis elements added in index order until the
/// generated subalgebra is everything.
std::vector<std::size_t> algebra_generators(const FinAlgebra& a);

/// h·m = ε(h)m.
std::vector<Matrix> trivial_action(const FinBialgebra& h, std::size_t dim);
/// ρ(m) = m ⊗ 1.
Comodule trivial_coaction(const FinBialgebra& h, std::size_t dim);

/// Module plus comodule satisfying ρ(h·m) = Σ h·m₀ ⊗ m₁.
///
/// Either the host is a finite bialgebra (action given on its basis), or
/// the host is the tensor algebra on a coalgebra C, presented by one matrix
/// per basis element of C; words act by products in word order. In both
/// cases action()[c] is the operator of basis element c of coalgebra().
class LongDimodule {
 public:
  /// Throws std::invalid_argument if any axiom fails. Compatibility is
  /// decided on the basis and on a generating set; a disagreement throws
  /// std::logic_error.
  LongDimodule(std::shared_ptr<const FinBialgebra> host, std::vector<Matrix> action, Comodule coaction);
  static LongDimodule presented(std::vector<Matrix> generator_action, Comodule coaction);

  bool is_presented() const { return !host_; }
  const std::shared_ptr<const FinBialgebra>& host() const { return host_; }
  const Coalgebra& coalgebra() const { return *coaction_.coalgebra(); }
  std::size_t dim() const { return coaction_.dim(); }
  const std::vector<Matrix>& action() const { return action_; }
  const Comodule& coaction() const { return coaction_; }
  Matrix act_word(const std::vector<std::size_t>& word) const;

 private:
  LongDimodule(std::vector<Matrix> action, Comodule coaction);

  std::shared_ptr<const FinBialgebra> host_;
  std::vector<Matrix> action_;
  Comodule coaction_;
};

/// Module over k[G] with a decomposition M = ⊕ M_σ given by projectors.
class GradedModule {
 public:
  /// Throws std::invalid_argument unless the action is a module, the
  /// projectors are idempotent, orthogonal, sum to the identity, and every
  /// component is stable under every group element.
  GradedModule(std::shared_ptr<const FinBialgebra> group, std::vector<Matrix> action, std::vector<Matrix> projectors);

  const std::shared_ptr<const FinBialgebra>& group() const { return group_; }
  const std::vector<Matrix>& action() const { return action_; }
  const std::vector<Matrix>& projectors() const { return projectors_; }
  std::size_t dim() const { return action_.front().rows(); }

 private:
  std::shared_ptr<const FinBialgebra> group_;
  std::vector<Matrix> action_;
  std::vector<Matrix> projectors_;
};

/// ρ(m_σ) = m_σ ⊗ σ.
LongDimodule dimodule_from_grading(const GradedModule& g);
/// P_σ read back from a coaction over a grouplike coalgebra.
std::vector<Matrix> projectors_from_coaction(const Comodule& rho);

/// Non-abelian example: for the first involution s and the first t with
/// st ≠ ts, M = M_s ⊕ M_t where M_s is the permutation module on the left
/// cosets of {1, s} and M_t is the trivial module. Needs a non-abelian group.
GradedModule coset_graded_example(std::shared_ptr<const FinBialgebra> group, const CayleyTable& g);

/// R(m ⊗ n) = Σ n₁·m ⊗ n₀.
EndoPair r_from_dimodule(const LongDimodule& d);

/// h•(m⊗n) = Σ h₁·m ⊗ h₂·n, ρ(m⊗n) = Σ m₀⊗n₀⊗m₁n₁; basis index i*dim(N)+j.
/// Throws std::invalid_argument for presented hosts or different hosts.
LongDimodule tensor_dimodule(const LongDimodule& m, const LongDimodule& n);
/// The unit object k.
LongDimodule unit_dimodule(std::shared_ptr<const FinBialgebra> h);
/// N⊗H with h•(n⊗l) = h·n⊗l, ρ(n⊗l) = Σ n⊗l₁⊗l₂; basis index i*dim(H)+l.
LongDimodule induce_from_module(std::shared_ptr<const FinBialgebra> h, const std::vector<Matrix>& action);
/// H⊗M with h•(l⊗m) = hl⊗m, ρ(l⊗m) = Σ l⊗m₀⊗m₁; basis index l*dim(M)+i.
LongDimodule induce_from_comodule(std::shared_ptr<const FinBialgebra> h, const Comodule& m);

}  // namespace deq
