#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "blowup/divisor_class.hpp"
#include "blowup/interpolation.hpp"
#include "blowup/weyl.hpp"
#include "doctest.h"

using blowup::DivisorClass;
using blowup::Int;
namespace interp = blowup::interpolation;

namespace {

DivisorClass dc(long d, const std::vector<long>& m) {
  return DivisorClass(Int(d), std::vector<Int>(m.begin(), m.end()));
}

// Reference dimension for systems at general points: peel off every
// (-1)-class the system is forced to contain (with multiplicity), then the
// remainder is nonspecial, so its h^0 is max(chi, 0).  Valid for the small
// r exercised here, where the full exceptional list is available.
std::int64_t reference_dim(DivisorClass c) {
  const auto& curves = blowup::weyl::enumerate_exceptional_classes(c.r());
  for (int step = 0; step < 400; ++step) {
    bool moved = false;
    for (const DivisorClass& e : curves) {
      Int t = -blowup::intersect(c, e);
      if (t > 0) {
        c = c - t * e;
        moved = true;
        break;
      }
    }
    if (!moved) {
      if (c.degree < 0) return -1;
      Int chi = blowup::profile(c).chi;
      Int h0 = chi > 0 ? chi : Int(0);
      return h0.get_si() - 1;
    }
    if (c.degree < 0) return -1;
  }
  REQUIRE(false);  // no fixed point reached
  return -2;
}

}  // namespace

TEST_SUITE("interpolation") {
  TEST_CASE("textbook systems") {
    SUBCASE("conic through five points") {
      const auto rep = interp::actual_dimension(dc(2, {1, 1, 1, 1, 1}));
      CHECK(rep.cols == 6);
      CHECK(rep.rows == 5);
      CHECK(rep.rank == 5);
      CHECK(rep.actual_dim == 0);
      CHECK(rep.expected_dim == 0);
      CHECK_FALSE(rep.is_special);
    }
    SUBCASE("quartics with a double point and thirteen simple points are empty") {
      const auto rep = interp::actual_dimension(dc(4, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
      CHECK(rep.cols == 15);
      CHECK(rep.rows == 16);
      CHECK(rep.rank == 15);
      CHECK(rep.actual_dim == -1);
      CHECK(rep.expected_dim == -1);
      CHECK_FALSE(rep.is_special);
    }
    SUBCASE("conics with two double points: the doubled line is special") {
      const auto rep = interp::actual_dimension(dc(2, {2, 2}));
      CHECK(rep.cols == 6);
      CHECK(rep.rows == 6);
      CHECK(rep.rank == 5);
      CHECK(rep.actual_dim == 0);
      CHECK(rep.expected_dim == -1);
      CHECK(rep.is_special);
      CHECK(interp::is_special(dc(2, {2, 2})));
    }
    SUBCASE("negative degree short-circuits") {
      const auto rep = interp::actual_dimension(dc(-3, {1, 1}));
      CHECK(rep.rows == 0);
      CHECK(rep.cols == 0);
      CHECK(rep.rank == 0);
      CHECK(rep.actual_dim == -1);
      CHECK(rep.expected_dim == -1);
    }
    SUBCASE("non-positive multiplicities impose nothing") {
      const auto rep = interp::actual_dimension(dc(1, {0, -2}));
      CHECK(rep.rows == 0);
      CHECK(rep.cols == 3);
      CHECK(rep.actual_dim == 2);
    }
  }

  TEST_CASE("reports echo their options and are deterministic") {
    interp::Options opt;
    opt.prime = 1000003;
    opt.seed = 7;
    opt.trials = 2;
    const auto a = interp::actual_dimension(dc(3, {2, 1, 1}), opt);
    const auto b = interp::actual_dimension(dc(3, {2, 1, 1}), opt);
    CHECK(a.prime == 1000003);
    CHECK(a.seed == 7);
    CHECK(a.trials == 2);
    CHECK(a.mults == std::vector<std::int64_t>{2, 1, 1});
    CHECK(a.degree == 3);
    CHECK(a.rank == b.rank);
    CHECK(a.actual_dim == b.actual_dim);
    // 10 coefficients, 3 + 2 = 5 independent conditions.
    CHECK(a.actual_dim == 4);
  }

  TEST_CASE("option and size validation") {
    CHECK_THROWS_AS(interp::actual_dimension(dc(2, {1, 1}), {4, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(interp::actual_dimension(dc(2, {1, 1}), {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(
        interp::actual_dimension(dc(2, {1, 1}), {std::uint64_t(1) << 63, 1, 1}),
        std::invalid_argument);
    CHECK_THROWS_AS(interp::actual_dimension(dc(2, {1, 1}), {101, 42, 0}), std::invalid_argument);
    CHECK_THROWS_AS(interp::actual_dimension(dc(3001, {1})), std::invalid_argument);
    // The prime must exceed the degree, or derivative rows can vanish.
    CHECK_THROWS_AS(interp::actual_dimension(dc(10, {1}), {7, 1, 1}), std::invalid_argument);
  }

  TEST_CASE("measured dimension never falls below the virtual one") {
    std::mt19937_64 gen(555);
    interp::Options opt;
    opt.trials = 2;
    for (int it = 0; it < 40; ++it) {
      const std::size_t r = 1 + gen() % 6;
      std::vector<long> m(r);
      for (auto& x : m) x = static_cast<long>(gen() % 4);
      const long d = static_cast<long>(gen() % 8);
      const auto rep = interp::actual_dimension(dc(d, m), opt);
      CAPTURE(d);
      CHECK(rep.actual_dim >= rep.expected_dim);
      CHECK(rep.rank <= rep.rows);
      CHECK(rep.rank <= rep.cols);
    }
  }

  TEST_CASE("the probe agrees with the peel-off reference on small systems") {
    interp::Options opt;
    opt.trials = 2;
    SUBCASE("exhaustive r = 2") {
      for (long d = 0; d <= 5; ++d)
        for (long n1 = 0; n1 <= 3; ++n1)
          for (long n2 = 0; n2 <= 3; ++n2) {
            const DivisorClass c = dc(d, {n1, n2});
            const auto rep = interp::actual_dimension(c, opt);
            const std::int64_t want = reference_dim(c);
            CAPTURE(d);
            CAPTURE(n1);
            CAPTURE(n2);
            CHECK(rep.actual_dim == want);
            CHECK(rep.is_special == (rep.actual_dim > rep.expected_dim));
          }
    }
    SUBCASE("sampled r = 3 and r = 4") {
      std::mt19937_64 gen(909);
      for (int it = 0; it < 60; ++it) {
        const std::size_t r = 3 + gen() % 2;
        std::vector<long> m(r);
        for (auto& x : m) x = static_cast<long>(gen() % 5);
        const long d = static_cast<long>(gen() % 8);
        const DivisorClass c = dc(d, m);
        const auto rep = interp::actual_dimension(c, opt);
        CAPTURE(blowup::to_string(c));
        CHECK(rep.actual_dim == reference_dim(c));
      }
    }
  }

  TEST_CASE("effectivity of curve classes") {
    CHECK(interp::curve_class_effective(dc(0, {-1, 0, 0})));   // a forced component alone
    CHECK(interp::curve_class_effective(dc(3, {2, 1, 1})));
    CHECK(interp::curve_class_effective(dc(6, {3, 2, 2, 2, 2, 2, 2, 2})));
    CHECK_FALSE(interp::curve_class_effective(dc(-1, {1, 1})));
    CHECK_FALSE(interp::curve_class_effective(dc(2, {1, 1, 1, 1, 1, 1})));
  }
}
