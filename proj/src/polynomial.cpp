#include "deq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace deq {

namespace {

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
  return *a == *b;
}

const VarList& pick_vars(const Polynomial& a, const Polynomial& b) {
  if (!same_vars(a.vars(), b.vars())) {
    throw std::invalid_argument("polynomial arithmetic across different variable lists");
  }
  return a.vars() ? a.vars() : b.vars();
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::optional<std::size_t> main_variable(const Polynomial& a, const Polynomial& b) {
  std::size_t best = a.num_vars() > b.num_vars() ? a.num_vars() : b.num_vars();
  for (const auto* p : {&a, &b}) {
    for (const auto& [e, c] : p->terms()) {
      for (std::size_t i = 0; i < e.size() && i < best; ++i) {
        if (e[i] != 0) {
          best = i;
          break;
        }
      }
    }
  }
  if (best >= std::max(a.num_vars(), b.num_vars())) return std::nullopt;
  return best;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.vars());
  const auto deg = p.degree_in(var);
  for (std::uint32_t d = 0; d <= deg; ++d) {
    Polynomial c = p.coefficient_in(var, d);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial::constant(p.vars(), 1);
  }
  return g;
}

// Scales by a rational unit so the coefficients become coprime integers with
// a positive leading one. Keeps the PRS coefficients from growing.
Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  mpq_class s(den_lcm, num_gcd);
  s.canonicalize();
  if (p.leading_coefficient() < 0) s = -s;
  return p.scaled(s);
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  auto q = divide_exact(p, content_in(p, var));
  if (!q) throw std::logic_error("content does not divide polynomial");
  return integer_primitive(*q);
}

// Lazy pseudo-remainder of a by b with respect to var: a multiple of the true
// remainder by a power of lc(b), which is all a primitive PRS needs.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const auto db = b.degree_in(var);
  const Polynomial lcb = b.coefficient_in(var, db);
  while (!a.is_zero()) {
    const auto da = a.degree_in(var);
    if (da < db) break;
    Polynomial lca = a.coefficient_in(var, da);
    a = lcb * a - (lca * b).shifted(var, da - db);
  }
  return a;
}

Polynomial gcd_in(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial g = gcd(ca, cb);
  Polynomial pa = integer_primitive(*divide_exact(a, ca));
  Polynomial pb = integer_primitive(*divide_exact(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(var) == 0) {
      pa = Polynomial::constant(a.vars(), 1);
      break;
    }
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    pb = r.is_zero() ? std::move(r) : primitive_part_in(r, var);
  }
  return g * primitive_part_in(pa, var);
}

}  // namespace

Polynomial::Polynomial(VarList vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(VarList vars, const mpq_class& c) {
  Polynomial p(std::move(vars));
  p.add_term(Exponents(p.num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::monomial(VarList vars, const Exponents& e, const mpq_class& c) {
  Polynomial p(std::move(vars));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(VarList vars, std::size_t index) {
  Polynomial p(std::move(vars));
  if (index >= p.num_vars()) throw std::out_of_range("variable index");
  Exponents e(p.num_vars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

bool Polynomial::is_one() const { return is_constant() && !is_zero() && terms_.begin()->second == 1; }

mpq_class Polynomial::leading_coefficient() const {
  return terms_.empty() ? mpq_class(0) : terms_.begin()->second;
}

mpq_class Polynomial::constant_value() const {
  for (const auto& [e, c] : terms_) {
    if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) return c;
  }
  return 0;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Polynomial Polynomial::coefficient_in(std::size_t var, std::uint32_t d) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != d) continue;
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  vars_ = pick_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  vars_ = pick_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(pick_vars(a, b));
  const std::size_t nv = out.num_vars();
  Exponents e(nv);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const mpq_class& s) const {
  if (s == 0) return Polynomial(vars_);
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

Polynomial Polynomial::shifted(std::size_t var, std::uint32_t power) const {
  if (power == 0) return *this;
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] += power;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  mpq_class lc = leading_coefficient();
  return scaled(1 / lc);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  static const std::vector<std::string> kNoNames;
  const auto& names = vars_ ? *vars_ : kNoNames;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::string mono = monomial_string(e, names);
    const bool negative = c < 0;
    mpq_class mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

bool Polynomial::is_simple_divisor() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return c > 0 && is_constant() && c.get_den() == 1;
  int nonzero = 0;
  for (auto x : e) nonzero += x != 0;
  return nonzero <= 1;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const VarList& vars = pick_vars(a, b);
  Polynomial q(vars);
  Polynomial r = a;
  const auto& [eb, cb] = *b.terms().begin();
  const std::size_t nv = std::max(a.num_vars(), b.num_vars());
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms().begin();
    Exponents e(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      if (er[i] < eb[i]) return std::nullopt;
      e[i] = er[i] - eb[i];
    }
    Polynomial t = Polynomial::monomial(vars, e, cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const auto var = main_variable(a, b);
  if (!var) return Polynomial::constant(pick_vars(a, b), 1);
  return gcd_in(a, b, *var).monic();
}

RationalFunction::RationalFunction(VarList vars)
    : num_(vars), den_(Polynomial::constant(vars, 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.vars() ? num_.vars() : den_.vars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const mpq_class lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(pick_vars(a.num_, b.num_));
  if (a.den_.is_one() && b.den_.is_one()) {
    RationalFunction out(pick_vars(a.num_, b.num_));
    out.num_ = a.num_ * b.num_;
    return out;
  }
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!den_.is_simple_divisor()) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace deq
