#include <stdexcept>
#include <vector>

#include "blowup/divisor_class.hpp"
#include "blowup/inequalities.hpp"
#include "blowup/weyl.hpp"
#include "doctest.h"

using blowup::Int;
namespace ineq = blowup::ineq;

namespace {

std::vector<Int> iv(const std::vector<long>& v) { return {v.begin(), v.end()}; }

ineq::MultiplicityVector mv(const std::vector<long>& v) {
  return ineq::MultiplicityVector(iv(v));
}

bool is_two_ones_family(const std::vector<Int>& n) {
  if (n.empty() || n[0] != 2) return false;
  for (std::size_t i = 1; i < n.size(); ++i)
    if (n[i] != 1) return false;
  return true;
}

bool is_triple_two_family(const std::vector<Int>& n) {
  return n.size() == 3 && n[0] == 2 && n[1] == 2 && n[2] == 2;
}

}  // namespace

TEST_SUITE("inequalities") {
  TEST_CASE("multiplicity vector validation") {
    CHECK_NOTHROW(mv({5, 3, 3, 1}));
    CHECK_THROWS_AS(mv({}), std::invalid_argument);
    CHECK_THROWS_AS(mv({1, 2}), std::invalid_argument);
  }

  TEST_CASE("key inequality classification") {
    CHECK(ineq::lemma_key(iv({1, 1, 1}), mv({2, 2, 2})) == ineq::KeyOutcome::HoldsEquality);
    CHECK(ineq::lemma_key(iv({2, 1, 1, 1}), mv({2, 1, 1, 1})) == ineq::KeyOutcome::HoldsEquality);
    CHECK(ineq::lemma_key(iv({1, 1}), mv({2, 2})) == ineq::KeyOutcome::Excluded);
    CHECK(ineq::lemma_key(iv({0, 0, 0}), mv({3, 2, 1})) == ineq::KeyOutcome::HoldsEquality);
    CHECK(ineq::lemma_key(iv({3, 1, 0}), mv({4, 2, 1})) == ineq::KeyOutcome::HoldsStrict);
    SUBCASE("preconditions") {
      CHECK_THROWS_AS(ineq::lemma_key(iv({1}), mv({2})), std::invalid_argument);      // r = 1
      CHECK_THROWS_AS(ineq::lemma_key(iv({1, 1}), mv({1, 1})), std::invalid_argument);  // n1 < 2
      CHECK_THROWS_AS(ineq::lemma_key(iv({1, 1, -1}), mv({2, 1, 1})),
                      std::invalid_argument);  // negative m
      CHECK_THROWS_AS(ineq::lemma_key(iv({1, 1, 1}), mv({2, 2, 0})),
                      std::invalid_argument);  // n_r = 0
      CHECK_THROWS_AS(ineq::lemma_key(iv({1, 1}), mv({2, 1, 1})),
                      std::invalid_argument);  // length mismatch
    }
  }

  TEST_CASE("second key inequality") {
    CHECK(ineq::lemma_key2(mv({12, 3, 3, 3, 3, 3, 3, 3, 3})));
    CHECK(ineq::lemma_key2(mv({12, 4, 4, 4, 4, 4, 4, 4, 4})));
    CHECK_THROWS_AS(ineq::lemma_key2(mv({11, 3, 3, 3, 3, 3, 3, 3, 3})), std::invalid_argument);
    CHECK_THROWS_AS(ineq::lemma_key2(mv({12, 3, 3, 3, 3, 3, 3, 2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(ineq::lemma_key2(mv({12, 3, 3, 3, 3, 3, 3, 3})), std::invalid_argument);
  }

  TEST_CASE("first key inequality") {
    CHECK(ineq::lemma_key1(mv({12, 1})));
    CHECK(ineq::lemma_key1(mv({12, 12, 12})));
    CHECK_THROWS_AS(ineq::lemma_key1(mv({11, 5})), std::invalid_argument);
    CHECK_THROWS_AS(ineq::lemma_key1(mv({12})), std::invalid_argument);
    CHECK_THROWS_AS(ineq::lemma_key1(mv({12, 0})), std::invalid_argument);
  }

  TEST_CASE("degree lower bound for irreducible curves") {
    CHECK(ineq::xu_lower_bound(Int(2), mv({1, 1, 1, 1, 1})));
    CHECK(ineq::xu_lower_bound(Int(48), mv({17, 17, 17, 17, 17, 17, 17, 17})));
    CHECK(ineq::xu_lower_bound(Int(4), mv({2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})));
    CHECK_FALSE(ineq::xu_lower_bound(Int(3), mv({2, 2, 2, 1, 1})));  // 9 < 14 - 1
    // s indexes the last positive entry, so trailing zeros do not change
    // which multiplicity gets subtracted: 25 >= 25 - 3
    CHECK(ineq::xu_lower_bound(Int(5), mv({4, 3, 0})));
    CHECK_THROWS_AS(ineq::xu_lower_bound(Int(0), mv({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(ineq::xu_lower_bound(Int(2), mv({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(mv({3, 4, 0}), std::invalid_argument);  // not non-increasing
  }

  TEST_CASE("exceptional classes satisfy the degree bound with near-equality") {
    for (std::size_t r = 2; r <= 8; ++r) {
      for (const auto& c : blowup::weyl::enumerate_exceptional_classes(r)) {
        if (c.degree <= 0) continue;
        std::vector<Int> n = blowup::normalize(c).mults;
        while (!n.empty() && n.back() <= 0) n.pop_back();
        REQUIRE(!n.empty());
        Int sum_sq = 0;
        for (const Int& x : n) sum_sq += x * x;
        CHECK(c.degree * c.degree == sum_sq - 1);  // e^2 = sum n^2 - 1
        CHECK(ineq::xu_lower_bound(c.degree, ineq::MultiplicityVector(n)));
      }
    }
  }

  TEST_CASE("small sweep finds no violations and only the known equality families") {
    const ineq::SweepReport rep = ineq::sweep_lemma_key(2, 4, 3, 4);
    CHECK(rep.cases > 0);
    CHECK(rep.violations == 0);
    bool saw_two_ones = false, saw_triple_two = false;
    for (const auto& [m, n] : rep.equality_cases) {
      bool m_zero = true;
      for (const Int& x : m) m_zero = m_zero && x == 0;
      if (m_zero) continue;
      const bool fam1 = is_two_ones_family(n);
      const bool fam2 = is_triple_two_family(n);
      CHECK((fam1 || fam2));
      saw_two_ones = saw_two_ones || fam1;
      saw_triple_two = saw_triple_two || fam2;
    }
    CHECK(saw_two_ones);
    CHECK(saw_triple_two);
  }

  TEST_CASE("sampled second-key sweep is clean and deterministic") {
    const ineq::SweepReport a = ineq::sweep_lemma_key2_sampled(10, 12, 15, 2000, 12345);
    const ineq::SweepReport b = ineq::sweep_lemma_key2_sampled(10, 12, 15, 2000, 12345);
    CHECK(a.cases == 2000);
    CHECK(a.violations == 0);
    CHECK(b.cases == a.cases);
    CHECK(a.equality_cases.empty());
    CHECK(b.equality_cases.empty());
  }

  TEST_CASE("first-key sweep over a narrow grid is clean") {
    const ineq::SweepReport rep = ineq::sweep_lemma_key1(2, 3, 12, 13);
    CHECK(rep.cases > 0);
    CHECK(rep.violations == 0);
  }
}
