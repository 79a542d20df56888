#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deq/tensor_ops.hpp"

namespace deq {

/// A candidate over F_p as its n⁴ serialized entries in row-major order
/// (entry r*n²+c holds R(r, c)), each in [0, p).
using Serialized = std::vector<std::uint8_t>;

enum class CensusFilter { all, bijective, symmetric, qybe };

std::string to_string(CensusFilter f);
/// Throws std::invalid_argument for an unknown name.
CensusFilter parse_filter(const std::string& name);

/// Default 2^20 candidates; DEQ_CANDIDATE_BUDGET overrides it.
std::uint64_t default_candidate_budget();

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusConfig {
  std::size_t n = 2;
  std::uint32_t p = 2;
  CensusFilter filter = CensusFilter::all;
  bool orbits = false;
  /// Cap on listed entries; counts stay exact.
  std::optional<std::size_t> limit;
  /// 0 means one worker per hardware thread.
  unsigned workers = 0;
  std::uint64_t budget = default_candidate_budget();
};

struct Orbit {
  Serialized representative;  // lexicographically least member
  std::size_t size = 0;
};

struct CensusReport {
  std::size_t n = 0;
  std::uint32_t p = 0;
  CensusFilter filter = CensusFilter::all;
  mpz_class candidates;
  std::size_t solutions = 0;
  std::size_t bijective = 0;
  std::size_t symmetric = 0;
  std::size_t qybe = 0;
  /// Solutions passing the filter.
  std::size_t selected = 0;
  /// Selected solutions in lexicographic order, or orbit representatives
  /// when orbits were requested; truncated to the limit.
  std::vector<Serialized> listed;
  std::optional<std::vector<Orbit>> orbits;
  /// Number of solutions re-verified with the operator oracle.
  std::size_t sampled = 0;
};

/// Every D-solution over F_p at dimension n, found by backtracking over the
/// serialized entries with early rejection by the coordinate equations.
/// Throws BudgetExceeded when p^(n⁴) exceeds the budget and
/// std::invalid_argument for a non-prime p, p > 251, or n outside 1..3.
CensusReport enumerate_solutions(const CensusConfig& config);

/// Independent full scan deciding each candidate with the operator oracle
/// R¹²R²³ = R²³R¹²; respects the same budget.
std::vector<Serialized> oracle_scan(std::size_t n, std::uint32_t p, std::uint64_t budget = default_candidate_budget());

/// Partition under R ~ (u⊗u)R(u⊗u)⁻¹ for u in GL_n(F_p), sorted by
/// representative. Inputs must be distinct.
std::vector<Orbit> orbit_reduce(const std::vector<Serialized>& solutions, std::size_t n, std::uint32_t p);

EndoPair to_endo(const Serialized& s, std::size_t n, std::uint32_t p);
Serialized serialize(const EndoPair& r);

/// Line-oriented report with a fixed header and sorted body.
std::string format_report(const CensusReport& report);

}  // namespace deq
