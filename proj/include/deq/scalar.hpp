#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deq/polynomial.hpp"

namespace deq {

/// Residue class k mod p with k in [0, p).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An exact field element. The representation is always canonical, so
/// equality is representation equality.
class Scalar {
 public:
  using Rep = std::variant<mpq_class, Residue, RationalFunction>;

  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(RationalFunction f) : rep_(std::move(f)) {}

  const Rep& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  Rep rep_;
};

enum class FieldKind { rationals, prime, rational_functions };

/// Owner of scalars: Q, F_p, or Q(vars).
class Field {
 public:
  static Field rationals();
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);
  /// Throws std::invalid_argument on empty, duplicate or malformed names.
  static Field rational_functions(std::vector<std::string> vars);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  const VarList& vars() const { return vars_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long k) const;
  /// Throws std::domain_error in F_p when the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& q) const;
  Scalar variable(std::string_view name) const;

  /// Parses a scalar literal (see literal.hpp for the grammar).
  Scalar parse(std::string_view text) const;

  /// True when s is represented in this field.
  bool owns(const Scalar& s) const;

  /// Header text used by the file formats: "Q", "F 5", "QFUN a,b,c".
  std::string header() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::rationals;
  std::uint32_t p_ = 0;
  VarList vars_;
};

bool is_prime(std::uint64_t p);

}  // namespace deq
