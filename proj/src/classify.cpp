#include "deq/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace deq {

namespace {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void validate(std::size_t n, std::uint32_t p) {
  if (n < 1 || n > 3) throw std::invalid_argument("n must be 1, 2 or 3");
  if (!is_prime(p) || p > 251) throw std::invalid_argument("p must be a prime at most 251");
}

mpz_class candidate_count(std::size_t n, std::uint32_t p) {
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), p, n * n * n * n);
  return c;
}

void check_budget(std::size_t n, std::uint32_t p, std::uint64_t budget) {
  const mpz_class c = candidate_count(n, p);
  if (c > mpz_class(std::to_string(budget))) {
    throw BudgetExceeded("candidate space over F" + std::to_string(p) + " with n=" + std::to_string(n) + " has " +
                         c.get_str() + " candidates, over the budget of " + std::to_string(budget) +
                         "; raise DEQ_CANDIDATE_BUDGET or the budget option to opt in");
  }
}

// Dense square matrices mod p on small sizes.
struct ModMat {
  std::size_t dim;
  std::vector<std::uint32_t> a;
  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

ModMat mod_zero(std::size_t dim) { return ModMat{dim, std::vector<std::uint32_t>(dim * dim, 0)}; }

ModMat mod_mul(const ModMat& x, const ModMat& y, std::uint32_t p) {
  ModMat z = mod_zero(x.dim);
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t k = 0; k < x.dim; ++k) {
      const std::uint32_t v = x.at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < x.dim; ++c) z.at(r, c) = (z.at(r, c) + v * y.at(k, c)) % p;
    }
  return z;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::uint32_t e = p - 2, b = a % p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Inverse by Gauss-Jordan; nullopt when singular
std::optional<ModMat> mod_inverse(ModMat x, std::uint32_t p) {
  const std::size_t d = x.dim;
  ModMat inv = mod_zero(d);
  for (std::size_t i = 0; i < d; ++i) inv.at(i, i) = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && x.at(piv, col) == 0) ++piv;
    if (piv == d) return std::nullopt;
    for (std::size_t c = 0; c < d; ++c) {
      std::swap(x.at(piv, c), x.at(col, c));
      std::swap(inv.at(piv, c), inv.at(col, c));
    }
    const std::uint32_t s = mod_inverse(x.at(col, col), p);
    for (std::size_t c = 0; c < d; ++c) {
      x.at(col, c) = x.at(col, c) * s % p;
      inv.at(col, c) = inv.at(col, c) * s % p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      const std::uint32_t m = x.at(r, col);
      if (r == col || m == 0) continue;
      for (std::size_t c = 0; c < d; ++c) {
        x.at(r, c) = (x.at(r, c) + (p - m) * x.at(col, c)) % p;
        inv.at(r, c) = (inv.at(r, c) + (p - m) * inv.at(col, c)) % p;
      }
    }
  }
  return inv;
}

ModMat from_serialized(const Serialized& s, std::size_t n) {
  const std::size_t d = n * n;
  ModMat m = mod_zero(d);
  for (std::size_t e = 0; e < d * d; ++e) m.a[e] = s[e];
  return m;
}

Serialized to_serialized(const ModMat& m) { return Serialized(m.a.begin(), m.a.end()); }

ModMat kron(const ModMat& x, const ModMat& y, std::uint32_t p) {
  ModMat z = mod_zero(x.dim * y.dim);
  for (std::size_t a = 0; a < x.dim; ++a)
    for (std::size_t b = 0; b < x.dim; ++b)
      for (std::size_t c = 0; c < y.dim; ++c)
        for (std::size_t e = 0; e < y.dim; ++e) z.at(a * y.dim + c, b * y.dim + e) = x.at(a, b) * y.at(c, e) % p;
  return z;
}

// Lifts on M⊗M⊗M, basis index a*n²+b*n+c.
ModMat lift_mod(const ModMat& r, std::size_t n, Slot slot) {
  const std::size_t d3 = n * n * n;
  ModMat z = mod_zero(d3);
  for (std::size_t row = 0; row < d3; ++row)
    for (std::size_t col = 0; col < d3; ++col) {
      const std::size_t a = row / (n * n), b = row / n % n, c = row % n;
      const std::size_t a2 = col / (n * n), b2 = col / n % n, c2 = col % n;
      switch (slot) {
        case Slot::s12:
          if (c == c2) z.at(row, col) = r.at(a * n + b, a2 * n + b2);
          break;
        case Slot::s13:
          if (b == b2) z.at(row, col) = r.at(a * n + c, a2 * n + c2);
          break;
        case Slot::s23:
          if (a == a2) z.at(row, col) = r.at(b * n + c, b2 * n + c2);
          break;
      }
    }
  return z;
}

bool mod_qybe(const ModMat& r, std::size_t n, std::uint32_t p) {
  const ModMat r12 = lift_mod(r, n, Slot::s12), r13 = lift_mod(r, n, Slot::s13), r23 = lift_mod(r, n, Slot::s23);
  return mod_mul(mod_mul(r12, r13, p), r23, p).a == mod_mul(mod_mul(r23, r13, p), r12, p).a;
}

bool mod_symmetric(const Serialized& s, std::size_t n) {
  const std::size_t d = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
          if (s[(i * n + j) * d + v * n + u] != s[(j * n + i) * d + u * n + v]) return false;
        }
  return true;
}

// One coordinate equation as a signed sum of products of two entries.
struct Equation {
  std::vector<std::pair<std::uint16_t, std::uint16_t>> plus, minus;
};

class Engine {
 public:
  Engine(std::size_t n, std::uint32_t p) : p_(p), size_(n * n * n * n), ready_(size_) {
    auto entry = [n](std::size_t u, std::size_t v, std::size_t j, std::size_t i) {
      return static_cast<std::uint16_t>((i * n + j) * n * n + v * n + u);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            for (std::size_t pp = 0; pp < n; ++pp)
              for (std::size_t q = 0; q < n; ++q) {
                Equation e;
                std::uint16_t last = 0;
                for (std::size_t v = 0; v < n; ++v) {
                  e.plus.emplace_back(entry(k, v, j, i), entry(l, q, v, pp));
                  e.minus.emplace_back(entry(k, l, j, v), entry(v, q, i, pp));
                }
                for (const auto* side : {&e.plus, &e.minus})
                  for (const auto& [a, b] : *side) last = std::max({last, a, b});
                ready_[last].push_back(std::move(e));
              }
  }

  std::size_t size() const { return size_; }

  // Entries [0, pos] are set; checks every equation that becomes decidable at pos.
  bool consistent_at(const Serialized& x, std::size_t pos) const {
    for (const auto& e : ready_[pos]) {
      std::uint32_t lhs = 0, rhs = 0;
      for (const auto& [a, b] : e.plus) lhs += x[a] * x[b];
      for (const auto& [a, b] : e.minus) rhs += x[a] * x[b];
      if (lhs % p_ != rhs % p_) return false;
    }
    return true;
  }

  void search(Serialized& x, std::size_t pos, std::vector<Serialized>& out) const {
    if (pos == size_) {
      out.push_back(x);
      return;
    }
    for (std::uint32_t v = 0; v < p_; ++v) {
      x[pos] = static_cast<std::uint8_t>(v);
      if (consistent_at(x, pos)) search(x, pos + 1, out);
    }
    x[pos] = 0;
  }

  // All solutions whose first `depth` entries spell the prefix index in base p.
  void search_prefix(std::uint64_t prefix, std::size_t depth, std::vector<Serialized>& out) const {
    Serialized x(size_, 0);
    for (std::size_t pos = depth; pos-- > 0;) {
      x[pos] = static_cast<std::uint8_t>(prefix % p_);
      prefix /= p_;
    }
    for (std::size_t pos = 0; pos < depth; ++pos) {
      if (!consistent_at(x, pos)) return;
    }
    search(x, depth, out);
  }

 private:
  std::uint32_t p_;
  std::size_t size_;
  std::vector<std::vector<Equation>> ready_;
};

std::vector<Serialized> fast_scan(std::size_t n, std::uint32_t p, unsigned workers) {
  const Engine engine(n, p);
  std::size_t depth = 0;
  std::uint64_t prefixes = 1;
  while (depth < engine.size() && prefixes < 256) {
    prefixes *= p;
    ++depth;
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, prefixes));
  std::vector<std::vector<Serialized>> parts(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = prefixes * w / workers, end = prefixes * (w + 1) / workers;
    for (std::uint64_t pre = begin; pre < end; ++pre) engine.search_prefix(pre, depth, parts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  std::vector<Serialized> all;
  for (auto& part : parts) all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return all;
}

std::vector<ModMat> general_linear(std::size_t n, std::uint32_t p) {
  std::vector<ModMat> out;
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < n * n; ++e) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    ModMat u = mod_zero(n);
    std::uint64_t c = code;
    for (std::size_t e = n * n; e-- > 0;) {
      u.a[e] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (mod_inverse(u, p)) out.push_back(std::move(u));
  }
  return out;
}

bool selected_by(CensusFilter f, bool bijective, bool symmetric, bool qybe) {
  switch (f) {
    case CensusFilter::all:
      return true;
    case CensusFilter::bijective:
      return bijective;
    case CensusFilter::symmetric:
      return symmetric;
    case CensusFilter::qybe:
      return qybe;
  }
  return false;
}

}  // namespace

std::string to_string(CensusFilter f) {
  switch (f) {
    case CensusFilter::all:
      return "all";
    case CensusFilter::bijective:
      return "bijective";
    case CensusFilter::symmetric:
      return "symmetric";
    case CensusFilter::qybe:
      return "qybe";
  }
  return "all";
}

CensusFilter parse_filter(const std::string& name) {
  for (auto f : {CensusFilter::all, CensusFilter::bijective, CensusFilter::symmetric, CensusFilter::qybe}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown filter '" + name + "' (expected all, bijective, symmetric or qybe)");
}

std::uint64_t default_candidate_budget() {
  if (const char* env = std::getenv("DEQ_CANDIDATE_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("DEQ_CANDIDATE_BUDGET is not a non-negative integer: ") + env);
  }
  return kDefaultBudget;
}

EndoPair to_endo(const Serialized& s, std::size_t n, std::uint32_t p) {
  const Field f = Field::prime(p);
  const std::size_t d = n * n;
  if (s.size() != d * d) throw std::invalid_argument("serialized operator has the wrong length");
  Matrix m(f, d, d);
  for (std::size_t e = 0; e < d * d; ++e) m(e / d, e % d) = f.from_integer(s[e]);
  return EndoPair(std::move(m));
}

Serialized serialize(const EndoPair& r) {
  if (r.field().kind() != FieldKind::prime || r.field().characteristic() > 251) {
    throw std::invalid_argument("serialization needs a prime field with p at most 251");
  }
  const std::size_t d = r.n() * r.n();
  Serialized out(d * d);
  for (std::size_t e = 0; e < d * d; ++e) {
    out[e] = static_cast<std::uint8_t>(std::get<Residue>(r.matrix()(e / d, e % d).rep()).value);
  }
  return out;
}

std::vector<Serialized> oracle_scan(std::size_t n, std::uint32_t p, std::uint64_t budget) {
  validate(n, p);
  check_budget(n, p, budget);
  const std::size_t size = n * n * n * n;
  const std::uint64_t total = candidate_count(n, p).get_ui();
  std::vector<Serialized> out;
  Serialized x(size, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t e = size; e-- > 0;) {
      x[e] = static_cast<std::uint8_t>(c % p);
      c /= p;
    }
    if (check_d_operator(to_endo(x, n, p))) out.push_back(x);
  }
  return out;
}

std::vector<Orbit> orbit_reduce(const std::vector<Serialized>& solutions, std::size_t n, std::uint32_t p) {
  validate(n, p);
  std::vector<Serialized> sorted = solutions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("solutions must be distinct");
  }
  std::vector<std::pair<ModMat, ModMat>> group;
  for (const auto& u : general_linear(n, p)) group.emplace_back(kron(u, u, p), kron(*mod_inverse(u, p), *mod_inverse(u, p), p));

  std::vector<bool> seen(sorted.size(), false);
  std::vector<Orbit> out;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (seen[s]) continue;
    const ModMat r = from_serialized(sorted[s], n);
    std::set<Serialized> orbit;
    for (const auto& [uu, uu_inv] : group) orbit.insert(to_serialized(mod_mul(mod_mul(uu, r, p), uu_inv, p)));
    for (const auto& member : orbit) {
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), member);
      if (it == sorted.end() || *it != member) throw std::invalid_argument("solution set is not closed under conjugation");
      seen[static_cast<std::size_t>(it - sorted.begin())] = true;
    }
    // members are visited in sorted order, so the first unseen one is the least
    out.push_back(Orbit{sorted[s], orbit.size()});
  }
  return out;
}

CensusReport enumerate_solutions(const CensusConfig& config) {
  validate(config.n, config.p);
  check_budget(config.n, config.p, config.budget);
  const std::size_t n = config.n;
  const std::uint32_t p = config.p;
  CensusReport report;
  report.n = n;
  report.p = p;
  report.filter = config.filter;
  report.candidates = candidate_count(n, p);

  const std::vector<Serialized> all = fast_scan(n, p, config.workers);
  report.solutions = all.size();
  std::vector<Serialized> chosen;
  for (const auto& s : all) {
    const ModMat m = from_serialized(s, n);
    const bool bij = mod_inverse(m, p).has_value();
    const bool sym = mod_symmetric(s, n);
    const bool yb = mod_qybe(m, n, p);
    report.bijective += bij;
    report.symmetric += sym;
    report.qybe += yb;
    if (selected_by(config.filter, bij, sym, yb)) chosen.push_back(s);
  }
  report.selected = chosen.size();

  // operator oracle on a deterministic 1% sample
  for (std::size_t i = 0; i < all.size(); i += 100) {
    if (!check_d_operator(to_endo(all[i], n, p))) throw std::logic_error("operator oracle rejects a reported solution");
    ++report.sampled;
  }

  if (config.orbits) {
    report.orbits = orbit_reduce(chosen, n, p);
    for (const auto& o : *report.orbits) {
      if (config.limit && report.listed.size() >= *config.limit) break;
      report.listed.push_back(o.representative);
    }
  } else {
    const std::size_t keep = config.limit ? std::min(*config.limit, chosen.size()) : chosen.size();
    report.listed.assign(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(keep));
  }
  return report;
}

std::string format_report(const CensusReport& r) {
  std::ostringstream out;
  out << "deq census 1\n";
  out << "field F" << r.p << "\n";
  out << "n " << r.n << "\n";
  out << "filter " << to_string(r.filter) << "\n";
  out << "candidates " << r.candidates.get_str() << "\n";
  out << "solutions " << r.solutions << "\n";
  out << "bijective " << r.bijective << "\n";
  out << "symmetric " << r.symmetric << "\n";
  out << "qybe " << r.qybe << "\n";
  out << "selected " << r.selected << "\n";
  if (r.orbits) out << "orbits " << r.orbits->size() << "\n";
  out << "oracle_sample " << r.sampled << "\n";
  out << "listed " << r.listed.size() << "\n";
  for (std::size_t i = 0; i < r.listed.size(); ++i) {
    out << "R";
    for (auto e : r.listed[i]) out << ' ' << static_cast<unsigned>(e);
    if (r.orbits) out << " orbit_size " << (*r.orbits)[i].size;
    out << "\n";
  }
  return out.str();
}

}  // namespace deq
