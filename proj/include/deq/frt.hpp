#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deq/coalg.hpp"
#include "deq/dimodule.hpp"
#include "deq/tensor_ops.hpp"

namespace deq {

/// ρ(m_l) = Σ_v m_v ⊗ c_vl over comatrix(n).
Comodule standard_comodule(std::shared_ptr<const Coalgebra> comatrix_n, std::size_t n);

/// o(i,j,k,l) = Σ_v x(k,v,j,i) c_vl − Σ_α x(k,l,j,α) c_iα in comatrix(n),
/// stored at ((i*n+j)*n+k)*n+l with 0-based indices.
struct ObstructionSet {
  std::size_t n = 0;
  std::vector<Vector> o;

  const Vector& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return o[((i * n + j) * n + k) * n + l];
  }
};

ObstructionSet obstructions(const EndoPair& r);
/// Δo(i,j,k,l) = Σ_u o(i,j,k,u)⊗c_ul + c_iu⊗o(u,j,k,l) for every index.
bool coideal_identity_holds(const ObstructionSet& obs, const Coalgebra& comatrix_n);
/// Span of all obstructions, echelonized with comatrix_pivot_order. Throws
/// std::logic_error if the subspace test and the identity above disagree.
Subspace obstruction_coideal(const EndoPair& r, const Coalgebra& comatrix_n);

/// A(c_ju)·m_v = Σ_i x(u,v,j,i) m_i, one matrix per c_ju at index j*n+u.
std::vector<Matrix> generator_action(const EndoPair& r);

/// Σ c_jk·(m_l)₍₀₎ ⊗ (m_l)₍₁₎ − ρ(c_jk·m_l) in M⊗C (index i*n²+c), computed
/// from the action and the coaction. Throws std::logic_error unless it
/// equals Σ_i m_i ⊗ o(i,j,k,l).
Vector defect_pairing(const EndoPair& r, std::size_t j, std::size_t k, std::size_t l);

/// (R23R12 − R12R23)(w⊗m_k⊗m_j). Throws std::logic_error unless it equals
/// Σ_{r,s} A(o(r,s,j,k))·w ⊗ m_r ⊗ m_s.
Vector d_identity(const EndoPair& r, const Vector& w, std::size_t k, std::size_t j);

/// Every obstruction acts as zero.
bool annihilation_check(const EndoPair& r);

/// Free algebra on a basis of comatrix(n)/I(R) together with the canonical
/// dimodule: generator g acts as A of its section vector, and
/// ρ(m_l) = Σ_v m_v ⊗ π(c_vl).
struct FrtPresentation {
  EndoPair r;
  std::shared_ptr<const Coalgebra> comatrix;
  std::shared_ptr<const QuotientCoalgebra> quotient;
  /// One relation per coideal basis vector, pivot term first, e.g. "c22 - c11";
  /// fewest terms first, then by row-major pivot.
  std::vector<std::string> relations;
  LongDimodule canonical;
  bool round_trip = false;

  const Coalgebra& generators() const { return *quotient->quotient(); }
};

/// Throws std::invalid_argument naming the first failing coordinate equation
/// (1-based) when R is not a D-solution.
FrtPresentation d_bialgebra(const EndoPair& r);

/// Generator-level map D(R) → H with f(c̄) = c′ where ρ′(m_l) = Σ_v m_v ⊗ c′_vl.
struct UniversalMap {
  /// dim H × dim(C/I) matrix; column g is the image of generator g.
  Matrix images;
  std::vector<Vector> c_prime;  // c′_vl at index v*n+l
};

/// None when the realization does not regenerate R. Throws
/// std::invalid_argument on a dimension or field mismatch and
/// std::logic_error if a verified property fails.
std::optional<UniversalMap> universal_map(const EndoPair& r, const LongDimodule& realization);

}  // namespace deq
