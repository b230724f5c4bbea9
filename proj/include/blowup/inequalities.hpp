#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blowup/divisor_class.hpp"

namespace blowup::ineq {

// Thin wrapper enforcing the shape the lemma predicates expect:
// a non-empty, non-increasing integer vector.
struct MultiplicityVector {
  std::vector<Int> entries;

  explicit MultiplicityVector(std::vector<Int> e);
  std::size_t r() const { return entries.size(); }
};

enum class KeyOutcome { HoldsStrict, HoldsEquality, Excluded, Violated };

// Cleared form (both sides multiplied by (r+2)(r+3)):
//   lhs = (r+3) * (sum m_i^2) * (sum n_i^2 - n_r)
//   rhs = (r+2) * (sum m_i n_i)^2
// Preconditions: len(m) == len(n) == r >= 2, every m_i >= 0, n_r > 0,
// n_1 >= 2.  The single excluded shape is r == 2 with n == (2, 2).
// m identically zero degenerates to 0 = 0 and reports HoldsEquality.
// Violated is reachable only through an implementation bug; the sweep
// harnesses count it so the brute-force runs are meaningful checks.
KeyOutcome lemma_key(const std::vector<Int>& m, const MultiplicityVector& n);

// r >= 9, n_r >= 3, n_1 >= 12:
//   r(3r+40)(sum n_i^2 - n_r) > (3r+39)(sum n_i)^2
bool lemma_key2(const MultiplicityVector& n);

// r >= 2, n_r > 0, n_1 >= 12, cleared by 4(r+2):
//   4r(r+3)(sum n_i^2 - 1) > (r+2)(2 sum n_i + 1)^2
bool lemma_key1(const MultiplicityVector& n);

// e^2 >= sum n_i^2 - n_s where s indexes the last positive entry.
// Preconditions: e >= 1 and at least one n_i > 0.
bool xu_lower_bound(const Int& e, const MultiplicityVector& n);

// Brute-force grid runs.  equality_cases lists every (m, n) pair that hit
// HoldsEquality so callers can check they fall in the known families.
struct SweepReport {
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> equality_cases;
};

// All m in [0, m_max]^r crossed with all non-increasing n in [1, n_max]^r
// having n_1 >= 2, for r_min <= r <= r_max (the r == 2, n == (2,2) shape is
// skipped as Excluded but still counted).
SweepReport sweep_lemma_key(std::size_t r_min, std::size_t r_max, long m_max, long n_max);

// Exhaustive over non-increasing n with n_1 in [n1_min, n1_max] and the
// remaining entries in [3, n_1].
SweepReport sweep_lemma_key2_exhaustive(std::size_t r, long n1_min, long n1_max);

// Random n of the same shape, `samples` draws from a fixed-seed generator.
SweepReport sweep_lemma_key2_sampled(std::size_t r, long n1_min, long n1_max,
                                     std::size_t samples, std::uint64_t seed);

// Exhaustive over non-increasing n with n_1 in [n1_min, n1_max] and the
// remaining entries in [1, n_1].
SweepReport sweep_lemma_key1(std::size_t r_min, std::size_t r_max, long n1_min, long n1_max);

}  // namespace blowup::ineq
