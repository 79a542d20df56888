#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "deq/classify.hpp"
#include "support.hpp"

using namespace deq;
using namespace deq::testing;

TEST_CASE("n = 1: every scalar commutes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CensusConfig c;
    c.n = 1;
    c.p = p;
    const CensusReport r = enumerate_solutions(c);
    CHECK(r.solutions == p);
    CHECK(r.bijective == p - 1);
    CHECK(r.listed.size() == p);
  }
}

TEST_CASE("F2 n = 2 census agrees with the operator oracle") {
  CensusConfig c;
  const CensusReport r = enumerate_solutions(c);
  CHECK(r.candidates == 65536);
  const auto oracle = oracle_scan(2, 2);
  CHECK(r.solutions == oracle.size());
  CHECK(r.listed == oracle);
  CHECK(r.sampled == (r.solutions + 99) / 100);
  CHECK(std::is_sorted(r.listed.begin(), r.listed.end()));

  // the scalar coordinate checker agrees on every candidate as well
  std::size_t coordinate = 0;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    Serialized s(16);
    for (std::size_t e = 0; e < 16; ++e) s[e] = mask >> e & 1u;
    coordinate += check_d_coordinates(to_endo(s, 2, 2));
  }
  CHECK(coordinate == r.solutions);

  // frozen after both paths agreed
  CHECK(r.solutions == 100);

  // counts by category match direct library checks
  std::size_t bij = 0, sym = 0, yb = 0;
  for (const auto& s : r.listed) {
    const EndoPair e = to_endo(s, 2, 2);
    bij += invert(e).has_value();
    sym += commutes_with_flip(e);
    yb += check_qybe(e);
  }
  CHECK(bij == r.bijective);
  CHECK(sym == r.symmetric);
  CHECK(yb == r.qybe);
}

TEST_CASE("filters, orbits and limits") {
  CensusConfig c;
  c.filter = CensusFilter::bijective;
  const CensusReport b = enumerate_solutions(c);
  CHECK(b.selected == b.bijective);
  CHECK(b.listed.size() == b.selected);
  // bijective solutions are closed under inversion
  for (const auto& s : b.listed) {
    const auto inv = invert(to_endo(s, 2, 2));
    REQUIRE(inv);
    CHECK(std::binary_search(b.listed.begin(), b.listed.end(), serialize(*inv)));
  }

  c.filter = CensusFilter::all;
  c.orbits = true;
  const CensusReport o = enumerate_solutions(c);
  REQUIRE(o.orbits);
  std::size_t total = 0;
  for (const auto& orbit : *o.orbits) total += orbit.size;
  CHECK(total == o.solutions);
  CHECK(o.listed.size() == o.orbits->size());
  // representatives are lexicographically least in their orbit: conjugating never goes below
  const Field f2 = Field::prime(2);
  const std::vector<Matrix> gl2 = {mat(f2, {{"1", "0"}, {"0", "1"}}), mat(f2, {{"0", "1"}, {"1", "0"}}),
                                   mat(f2, {{"1", "1"}, {"0", "1"}}), mat(f2, {{"1", "0"}, {"1", "1"}}),
                                   mat(f2, {{"1", "1"}, {"1", "0"}}), mat(f2, {{"0", "1"}, {"1", "1"}})};
  for (const auto& rep : o.listed)
    for (const auto& u : gl2) {
      const Serialized image = serialize(conjugate(to_endo(rep, 2, 2), u));
      CHECK_FALSE(image < rep);
      CHECK(check_d(to_endo(image, 2, 2)));
    }

  // identity is a singleton orbit
  const Serialized id = serialize(EndoPair::identity(f2, 2));
  const auto singleton = orbit_reduce({id}, 2, 2);
  REQUIRE(singleton.size() == 1);
  CHECK(singleton[0].size == 1);

  c.orbits = false;
  c.limit = 5;
  const CensusReport l = enumerate_solutions(c);
  CHECK(l.listed.size() == 5);
  CHECK(l.solutions == o.solutions);
}

TEST_CASE("orbit of diagonal solutions over F3") {
  // the swap u conjugates diag(a) into diag(a with indices swapped)
  const Field f3 = Field::prime(3);
  const Matrix a = mat(f3, {{"1", "2"}, {"0", "1"}});
  const Matrix swapped = mat(f3, {{"1", "0"}, {"2", "1"}});
  const Matrix u = mat(f3, {{"0", "1"}, {"1", "0"}});
  CHECK(conjugate(diagonal_solution(a), u) == diagonal_solution(swapped));
}

TEST_CASE("F3 n = 2 census with explicit budget") {
  CensusConfig c;
  c.p = 3;
  CHECK_THROWS_AS(enumerate_solutions(c), BudgetExceeded);
  try {
    enumerate_solutions(c);
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("43046721") != std::string::npos);
  }
  c.budget = 50'000'000;
  c.orbits = true;
  const CensusReport r = enumerate_solutions(c);
  std::size_t total = 0;
  for (const auto& orbit : *r.orbits) total += orbit.size;
  CHECK(total == r.solutions);
  for (const auto& s : r.listed) CHECK(check_d(to_endo(s, 2, 3)));

  // diagonal solutions with tables related by the swap share an orbit:
  // dropping one of them leaves a set that is not closed under conjugation
  c.orbits = false;
  const CensusReport all = enumerate_solutions(c);
  CHECK(orbit_reduce(all.listed, 2, 3).size() == r.orbits->size());
  const Field f3 = Field::prime(3);
  const Serialized d1 = serialize(diagonal_solution(mat(f3, {{"1", "2"}, {"0", "1"}})));
  const Serialized d2 = serialize(diagonal_solution(mat(f3, {{"1", "0"}, {"2", "1"}})));
  REQUIRE(std::binary_search(all.listed.begin(), all.listed.end(), d1));
  std::vector<Serialized> without;
  for (const auto& s : all.listed)
    if (s != d2) without.push_back(s);
  CHECK_THROWS_AS(orbit_reduce(without, 2, 3), std::invalid_argument);
}

TEST_CASE("deterministic output for any worker count") {
  CensusConfig c;
  c.orbits = true;
  c.workers = 1;
  const std::string one = format_report(enumerate_solutions(c));
  for (unsigned w : {3u, 4u}) {
    c.workers = w;
    CHECK(format_report(enumerate_solutions(c)) == one);
  }
  CHECK(one.rfind("deq census 1\nfield F2\nn 2\nfilter all\ncandidates 65536\n", 0) == 0);
}

TEST_CASE("validation and budget") {
  CensusConfig c;
  c.p = 4;
  CHECK_THROWS_AS(enumerate_solutions(c), std::invalid_argument);
  c.p = 2;
  c.n = 3;
  CHECK_THROWS_AS(enumerate_solutions(c), BudgetExceeded);
  c.n = 0;
  CHECK_THROWS_AS(enumerate_solutions(c), std::invalid_argument);
  CHECK(parse_filter("qybe") == CensusFilter::qybe);
  CHECK_THROWS_AS(parse_filter("bogus"), std::invalid_argument);

  CHECK(default_candidate_budget() == (1u << 20));
  setenv("DEQ_CANDIDATE_BUDGET", "10", 1);
  CHECK(default_candidate_budget() == 10);
  CensusConfig small;
  CHECK_THROWS_AS(enumerate_solutions(small), BudgetExceeded);
  setenv("DEQ_CANDIDATE_BUDGET", "lots", 1);
  CHECK_THROWS_AS(default_candidate_budget(), std::invalid_argument);
  unsetenv("DEQ_CANDIDATE_BUDGET");
}
