#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "deq/coalg.hpp"
#include "deq/frt.hpp"
#include "deq/tensor_ops.hpp"

namespace deq {

/// Bilinear σ: C ⊗ C/I → k stored as a form on (C, quotient).
struct DMap {
  std::shared_ptr<const QuotientCoalgebra> quotient;  // C/I with C = quotient->parent()
  BilinearForm sigma;

  const Coalgebra& coalgebra() const { return *quotient->parent(); }
  bool strong() const { return quotient->coideal().dimension() == 0; }
};

/// Σ σ(c₍₁₎⊗d̄) π(c₍₂₎) − Σ σ(c₍₂₎⊗d̄) π(c₍₁₎) in C/I for basis elements c, d̄.
Vector spe_deficit(const DMap& d, std::size_t c, std::size_t dbar);
/// Every deficit vanishes.
bool is_dmap(const DMap& d);

/// σ(c⊗d̄) = ε(c) f(d̄).
DMap counit_dmap(std::shared_ptr<const QuotientCoalgebra> quotient, const Vector& f);
/// σ(c_ij ⊗ c_pq) = δ_ij a on comatrix(n) with I = 0.
DMap diagonal_comatrix_dmap(const Field& field, std::size_t n, const Scalar& a);

/// σ₀(c_iv ⊗ c_ju) = x(u,v,j,i) on comatrix(n) with I = 0, for any R. Its
/// deficit at (c_ij, c_pq) is o(i,p,q,j).
DMap unreduced_sigma(const EndoPair& r);
/// σ(c_iv ⊗ c̄_ju) = x(u,v,j,i) on comatrix(n) ⊗ comatrix(n)/I(R). Throws
/// std::invalid_argument when R is not a D-solution and std::logic_error
/// naming the obstruction σ₀ fails to kill.
DMap sigma_from_r(const EndoPair& r);

/// R(m⊗n) = Σ σ(m₍₁₎ ⊗ π(n₍₁₎)) m₍₀₎ ⊗ n₍₀₎. Throws std::invalid_argument
/// when the comodule is over a different coalgebra.
EndoPair r_sigma(const Comodule& m, const DMap& d);

struct StrongDMap {
  std::shared_ptr<const QuotientCoalgebra> c_r;  // comatrix(n)/I(R)
  DMap dmap;                                     // strongly, on C(R) ⊗ C(R)
  Comodule comodule;                             // M over C(R)
};

/// Requires a D-solution with x(u,v,j,i) = x(v,u,i,j). Throws
/// std::invalid_argument citing the first failing entry (1-based u,v,j,i).
StrongDMap strong_dmap_from_symmetric(const EndoPair& r);

/// σ′₀(c_iv ⊗ c_ju) = y(u,v,j,i) with y the coefficients of R⁻¹, on the same
/// pair as sigma_from_r(R). Throws std::invalid_argument when R is singular
/// or not a D-solution; std::logic_error if either convolution fails.
DMap convolution_inverse_of_sigma(const EndoPair& r);

}  // namespace deq
