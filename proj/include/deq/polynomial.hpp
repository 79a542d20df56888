#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace deq {

/// Ordered list of parameter names shared by every polynomial of one field.
using VarList = std::shared_ptr<const std::vector<std::string>>;

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept in descending lexicographic order of exponent vectors
/// (x1 > x2 > ...), so the first term is the lex-leading one.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, mpq_class, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(VarList vars);

  static Polynomial constant(VarList vars, const mpq_class& c);
  static Polynomial monomial(VarList vars, const Exponents& e, const mpq_class& c);
  static Polynomial variable(VarList vars, std::size_t index);

  const VarList& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_ ? vars_->size() : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Coefficient of the lex-leading term; zero for the zero polynomial.
  mpq_class leading_coefficient() const;
  /// Constant term value (only meaningful when is_constant()).
  mpq_class constant_value() const;

  std::uint32_t degree_in(std::size_t var) const;
  /// Coefficient of var^d, as a polynomial not involving var.
  Polynomial coefficient_in(std::size_t var, std::uint32_t d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const mpq_class& c) const;
  Polynomial shifted(std::size_t var, std::uint32_t power) const;

  /// Divides by the lex-leading coefficient. Zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;
  /// True when to_string() yields a single factor that needs no parentheses
  /// as a divisor.
  bool is_simple_divisor() const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);

  VarList vars_;
  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalized to lex-leading coefficient 1.
/// gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Rational function num/den over Q in canonical form: num and den coprime,
/// den has lex-leading coefficient 1. Zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(VarList vars);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace deq
