#include "deq/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <stdexcept>

#include "deq/literal.hpp"

namespace deq {

namespace {

[[noreturn]] void mismatch() { throw std::invalid_argument("scalar arithmetic across different fields"); }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero");
  // Fermat: a^(p-2) mod p
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Residue as_residue(const Scalar::Rep& r, std::uint32_t p) {
  const auto* x = std::get_if<Residue>(&r);
  if (!x || x->modulus != p) mismatch();
  return *x;
}

const RationalFunction& as_function(const Scalar::Rep& r) {
  const auto* x = std::get_if<RationalFunction>(&r);
  if (!x) mismatch();
  return *x;
}

const mpq_class& as_rational(const Scalar::Rep& r) {
  const auto* x = std::get_if<mpq_class>(&r);
  if (!x) mismatch();
  return *x;
}

}  // namespace

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>) return x == 0;
        else if constexpr (std::is_same_v<T, Residue>) return x.value == 0;
        else return x.is_zero();
      },
      rep_);
}

bool Scalar::is_one() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>) return x == 1;
        else if constexpr (std::is_same_v<T, Residue>) return x.value == 1;
        else return x.is_one();
      },
      rep_);
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Residue>) {
          return Scalar(Residue{x.value == 0 ? 0 : x.modulus - x.value, x.modulus});
        } else {
          return Scalar(T(-x));
        }
      },
      rep_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&rep_)) {
    const Residue b = as_residue(o.rep_, r->modulus);
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + b.value) % r->modulus);
  } else if (auto* q = std::get_if<mpq_class>(&rep_)) {
    *q += as_rational(o.rep_);
  } else {
    auto& f = std::get<RationalFunction>(rep_);
    f = f + as_function(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&rep_)) {
    const Residue b = as_residue(o.rep_, r->modulus);
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * b.value % r->modulus);
  } else if (auto* q = std::get_if<mpq_class>(&rep_)) {
    *q *= as_rational(o.rep_);
  } else {
    auto& f = std::get<RationalFunction>(rep_);
    f = f * as_function(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(mpq_class(1 / x));
        } else if constexpr (std::is_same_v<T, Residue>) {
          return Scalar(Residue{inverse_mod(x.value, x.modulus), x.modulus});
        } else {
          return Scalar(x.inverse());
        }
      },
      rep_);
}

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpq_class>) return x.get_str();
        else if constexpr (std::is_same_v<T, Residue>) return std::to_string(x.value);
        else return x.to_string();
      },
      rep_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  if (p > 65521) throw std::invalid_argument("field modulus too large (max 65521)");
  Field f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

Field Field::rational_functions(std::vector<std::string> vars) {
  if (vars.empty()) throw std::invalid_argument("rational function field needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_') {
      throw std::invalid_argument("variable name must start with a letter: " + v);
    }
    for (char c : v) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw std::invalid_argument("invalid character in variable name: " + v);
      }
    }
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
  Field f;
  f.kind_ = FieldKind::rational_functions;
  f.vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
  return f;
}

Scalar Field::zero() const { return from_integer(0); }
Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(long long k) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(mpq_class(static_cast<long>(k)));
    case FieldKind::prime: {
      long long r = k % static_cast<long long>(p_);
      if (r < 0) r += p_;
      return Scalar(Residue{static_cast<std::uint32_t>(r), p_});
    }
    case FieldKind::rational_functions:
      return Scalar(RationalFunction(Polynomial::constant(vars_, mpq_class(static_cast<long>(k))),
                                     Polynomial::constant(vars_, 1)));
  }
  throw std::logic_error("unknown field kind");
}

Scalar Field::from_rational(const mpq_class& value) const {
  mpq_class q = value;
  q.canonicalize();
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(std::move(q));
    case FieldKind::prime: {
      mpz_class num = q.get_num() % p_;
      mpz_class den = q.get_den() % p_;
      if (num < 0) num += p_;
      if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
      Scalar n(Residue{static_cast<std::uint32_t>(num.get_ui()), p_});
      Scalar d(Residue{static_cast<std::uint32_t>(den.get_ui()), p_});
      return n / d;
    }
    case FieldKind::rational_functions:
      return Scalar(RationalFunction(Polynomial::constant(vars_, q), Polynomial::constant(vars_, 1)));
  }
  throw std::logic_error("unknown field kind");
}

Scalar Field::variable(std::string_view name) const {
  if (kind_ != FieldKind::rational_functions) {
    throw std::invalid_argument("unknown symbol '" + std::string(name) + "' in field " + header());
  }
  const auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) throw std::invalid_argument("undeclared variable '" + std::string(name) + "'");
  const auto idx = static_cast<std::size_t>(it - vars_->begin());
  return Scalar(RationalFunction(Polynomial::variable(vars_, idx), Polynomial::constant(vars_, 1)));
}

Scalar Field::parse(std::string_view text) const { return parse_scalar(*this, text); }

bool Field::owns(const Scalar& s) const {
  switch (kind_) {
    case FieldKind::rationals:
      return std::holds_alternative<mpq_class>(s.rep());
    case FieldKind::prime: {
      const auto* r = std::get_if<Residue>(&s.rep());
      return r && r->modulus == p_;
    }
    case FieldKind::rational_functions: {
      const auto* f = std::get_if<RationalFunction>(&s.rep());
      return f && f->vars() && *f->vars() == *vars_;
    }
  }
  return false;
}

std::string Field::header() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::prime:
      return "F " + std::to_string(p_);
    case FieldKind::rational_functions: {
      std::string out = "QFUN ";
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (i) out += ',';
        out += (*vars_)[i];
      }
      return out;
    }
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case FieldKind::rationals:
      return true;
    case FieldKind::prime:
      return a.p_ == b.p_;
    case FieldKind::rational_functions:
      return *a.vars_ == *b.vars_;
  }
  return false;
}

}  // namespace deq
