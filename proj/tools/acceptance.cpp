// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <string>

#include "deq/classify.hpp"
#include "deq/dmap.hpp"
#include "deq/examples.hpp"
#include "deq/frt.hpp"
#include "support.hpp"

using namespace deq;
using namespace deq::testing;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double seconds_limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds_limit <= 0 || seconds < seconds_limit;
  const bool pass = o.ok && in_time;
  failures += !pass;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::cout << name << " " << (pass ? "PASS" : "FAIL") << " " << o.detail << " [" << timing
            << (in_time ? "" : ", over the time limit") << "]" << std::endl;
}

std::shared_ptr<const QuotientCoalgebra> quotient_by(std::shared_ptr<const Coalgebra> c, const std::vector<Vector>& span) {
  const Field f = c->field();
  const std::size_t d = c->dim();
  return std::make_shared<const QuotientCoalgebra>(std::move(c), Subspace(f, d, span));
}

std::optional<EndoPair> random_bijective_solution(const Field& f, std::mt19937_64& rng) {
  for (int t = 0; t < 100000; ++t) {
    // sparse candidates hit solutions far more often than dense ones
    Matrix m(f, 4, 4);
    for (std::size_t e = 0; e < 16; ++e)
      if (rng() % 3 == 0) m(e / 4, e % 4) = random_scalar(f, rng);
    EndoPair r(std::move(m));
    if (invert(r) && check_d_coordinates(r)) return r;
  }
  return std::nullopt;
}

bool convolution_inverse_holds(const EndoPair& r) {
  const DMap s = sigma_from_r(r);
  const DMap inv = convolution_inverse_of_sigma(r);
  const BilinearForm unit = BilinearForm::unit(s.sigma.left(), s.sigma.right());
  return convolve(s.sigma, inv.sigma) == unit && convolve(inv.sigma, s.sigma) == unit;
}

std::string count_text(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

}  // namespace

int main() {
  const Field q = Field::rationals();
  const Field f2 = Field::prime(2);
  const Field f5 = Field::prime(5);
  const std::uint32_t all_f2 = 1u << 16;

  criterion("AC1", 5, [&] {
    const EndoPair r = jordan_example(Field::rational_functions({"a", "b", "c"}));
    const bool d = check_d(r), yb = check_qybe(r);
    return Outcome{d && yb, "symbolic Jordan family: D=" + std::to_string(d) + " QYBE=" + std::to_string(yb)};
  });

  criterion("AC2", 1, [&] {
    const bool d00 = check_d(block_example(q, "1", "1", "0", "0", "1", "1"));
    const bool d10 = check_d(block_example(q, "1", "1", "1", "0", "1", "1"));
    const bool d01 = check_d(block_example(q, "1", "1", "0", "1", "1", "1"));
    const EndoPair sym = yb_example(Field::rational_functions({"q"}));
    const EndoPair two = yb_example(q, "2");
    const bool ok = d00 && !d10 && !d01 && check_qybe(sym) && !check_d(sym) && check_qybe(two) && !check_d(two);
    return Outcome{ok, "block family D at (0,0),(1,0),(0,1) = " + std::to_string(d00) + std::to_string(d10) +
                           std::to_string(d01) + "; q-YB operator QYBE true and D false at symbolic q and q=2"};
  });

  criterion("AC3", 0, [&] {
    std::mt19937_64 rng(1003);
    std::size_t agree = 0, commuting = 0;
    for (int t = 0; t < 500; ++t) {
      const Matrix f = random_matrix(f5, 2, 2, rng), g = random_matrix(f5, 2, 2, rng);
      const bool c = f * g == g * f;
      commuting += c;
      agree += check_d(product_solution(f, g)) == c;
    }
    return Outcome{agree == 500, "law holds on " + count_text(agree, 500) + " pairs (" + std::to_string(commuting) +
                                     " commuting)"};
  });

  criterion("AC4", 3, [&] {
    const FrtPresentation a = d_bialgebra(jordan_example(q, "1", "1", "1"));
    const FrtPresentation b = d_bialgebra(r_q_example(q, "3"));
    const FrtPresentation c = d_bialgebra(projection_example(q));
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    const bool jordan = a.relations == std::vector<std::string>{"c21", "c22 - c11"} && ga.dim() == 2 &&
                       sweedler(ga, 0) == "Δ(c̄11) = c̄11 ⊗ c̄11" &&
                       sweedler(ga, 1) == "Δ(c̄12) = c̄11 ⊗ c̄12 + c̄12 ⊗ c̄11";
    const bool rq = b.relations == std::vector<std::string>{"c21", "c12 - 3*c11 + 3*c22"} && gb.dim() == 2 &&
                    sweedler(gb, 0) == "Δ(c̄11) = c̄11 ⊗ c̄11" && sweedler(gb, 1) == "Δ(c̄22) = c̄22 ⊗ c̄22";
    const bool proj = c.relations == std::vector<std::string>{"c12", "c21"};
    return Outcome{jordan && rq && proj, "Jordan {c21, c22 - c11}, R_3 {c21, c12 - 3*c11 + 3*c22}, projection {c12, c21}"};
  });

  criterion("AC5", 60, [&] {
    std::mt19937_64 rng(1005);
    const Coalgebra c2 = comatrix(f2, 2);
    std::size_t coideal = 0, commutator = 0;
    for (std::uint32_t mask = 0; mask < all_f2; ++mask) {
      const EndoPair r = f2_candidate(mask);
      coideal += coideal_identity_holds(obstructions(r), c2);
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t a = 0; a < 2; ++a) d_identity(r, Vector::unit(f2, 2, a), k, j);
      ++commutator;
    }
    std::size_t random_coideal = 0, random_commutator = 0;
    for (std::size_t n : {2u, 3u}) {
      const Coalgebra cn = comatrix(f5, n);
      for (int t = 0; t < 1000; ++t) {
        const EndoPair r = random_endo(f5, n, rng);
        random_coideal += coideal_identity_holds(obstructions(r), cn);
        const Vector w = random_matrix(f5, n, 1, rng).column(0);
        d_identity(r, w, rng() % n, rng() % n);
        ++random_commutator;
      }
    }
    const bool ok = coideal == all_f2 && commutator == all_f2 && random_coideal == 2000 && random_commutator == 2000;
    return Outcome{ok, "F2 n=2 coideal " + count_text(coideal, all_f2) + ", commutator " + count_text(commutator, all_f2) +
                           "; F5 n=2,3 coideal " + count_text(random_coideal, 2000) + ", commutator " +
                           count_text(random_commutator, 2000)};
  });

  criterion("AC6", 60, [&] {
    std::size_t consistent = 0, printed_differs = 0;
    for (std::uint32_t mask = 0; mask < all_f2; ++mask) {
      const EquivalentForms e = check_equivalent_forms(f2_candidate(mask));
      consistent += e.consistent();
      printed_differs += e.form_w_printed != e.d;
    }
    return Outcome{consistent == all_f2, "D == formT == formU == formW on " + count_text(consistent, all_f2) +
                                             "; printed W form differs on " + std::to_string(printed_differs)};
  });

  criterion("AC7", 120, [&] {
    std::size_t solutions = 0, dimodule = 0, sigma = 0;
    for (std::uint32_t mask = 0; mask < all_f2; ++mask) {
      const EndoPair r = f2_candidate(mask);
      if (!check_d_coordinates(r)) continue;
      ++solutions;
      const FrtPresentation p = d_bialgebra(r);
      dimodule += r_from_dimodule(p.canonical) == r;
      const DMap s = sigma_from_r(r);
      sigma += r_sigma(standard_comodule(s.quotient->parent(), 2), s) == r;
    }
    return Outcome{solutions > 0 && dimodule == solutions && sigma == solutions,
                   "dimodule round trip " + count_text(dimodule, solutions) + ", sigma round trip " +
                       count_text(sigma, solutions)};
  });

  criterion("AC8", 0, [&] {
    std::size_t agree = 0;
    for (std::uint32_t mask = 0; mask < all_f2; ++mask) {
      const EndoPair r = f2_candidate(mask);
      agree += annihilation_check(r) == check_d(r);
    }
    return Outcome{agree == all_f2, "annihilation agrees with D on " + count_text(agree, all_f2)};
  });

  criterion("AC9", 1, [&] {
    const CayleyTable s3 = symmetric_group(3);
    const auto h = std::make_shared<const FinBialgebra>(group_bialgebra(q, s3));
    const EndoPair r = r_from_dimodule(dimodule_from_grading(coset_graded_example(h, s3)));
    const bool d = check_d(r), yb = check_qybe(r);
    return Outcome{d && !yb, "S3-graded R (n=" + std::to_string(r.n()) + "): D=" + std::to_string(d) +
                                 " QYBE=" + std::to_string(yb)};
  });

  criterion("AC10", 0, [&] {
    std::mt19937_64 rng(1010);
    std::size_t good = 0;
    for (int t = 0; t < 50; ++t) {
      const auto r = random_bijective_solution(f5, rng);
      if (r && convolution_inverse_holds(*r)) ++good;
    }
    const bool diagonal = convolution_inverse_holds(diagonal_solution(Matrix::from_rows(q, {{"1", "2"}, {"3", "4"}})));
    return Outcome{good == 50 && diagonal,
                   "F5 bijective solutions " + count_text(good, 50) + ", diagonal Q example " + std::to_string(diagonal)};
  });

  criterion("AC11", 0, [&] {
    CensusConfig c;
    c.orbits = true;
    const CensusReport r = enumerate_solutions(c);
    const auto oracle = oracle_scan(2, 2);
    std::size_t total = 0;
    for (const auto& o : *r.orbits) total += o.size;
    const bool ok = r.solutions == oracle.size() && r.solutions == 100 && total == r.solutions;
    return Outcome{ok, "coordinate path " + std::to_string(r.solutions) + ", oracle " + std::to_string(oracle.size()) +
                           ", frozen 100, " + std::to_string(r.orbits->size()) + " orbits summing to " +
                           std::to_string(total)};
  });

  criterion("AC12", 0, [&] {
    std::mt19937_64 rng(1012);
    std::size_t passed = 0, total = 0;
    for (std::size_t n : {2u, 3u}) {
      const auto c = std::make_shared<const Coalgebra>(comatrix(f5, n));
      const auto whole = quotient_by(c, {});
      std::vector<Vector> off;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (j != k) off.push_back(Vector::unit(f5, n * n, j * n + k));
      const auto diag = quotient_by(c, off);
      for (int t = 0; t < 20; ++t) {
        passed += is_dmap(counit_dmap(whole, random_matrix(f5, n * n, 1, rng).column(0)));
        passed += is_dmap(counit_dmap(diag, random_matrix(f5, n, 1, rng).column(0)));
        const DMap d = diagonal_comatrix_dmap(f5, n, random_scalar(f5, rng));
        passed += d.strong() && is_dmap(d);
        total += 3;
      }
    }
    return Outcome{passed == total, "sigma_f and delta*a maps pass is_dmap " + count_text(passed, total)};
  });

  return failures == 0 ? 0 : 1;
}
