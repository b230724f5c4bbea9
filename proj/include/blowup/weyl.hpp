#pragma once

#include <optional>
#include <vector>

#include "blowup/divisor_class.hpp"

namespace blowup::weyl {

// Simple roots of the reflection group acting on the lattice:
//   s_0 = H - E_1 - E_2 - E_3   (Cremona node, needs r >= 3)
//   s_i = E_i - E_{i+1}         (adjacent swap, 1 <= i <= r-1)
// All have self-intersection -2.
struct Root {
  int index;  // 0 for the Cremona root, i for swap(i, i+1)
  DivisorClass cls;
};

Root cremona_root(std::size_t r);
Root swap_root(std::size_t r, std::size_t i);

// A |-> A + (A.s)s.  Involution; preserves the intersection form; fixes K.
DivisorClass reflect(const DivisorClass& a, const Root& s);

enum class Terminal { Fundamental, NonEffective };

// Replayable record of a reduction run: step 0 applies the Cremona root,
// step i >= 1 applies swap(i, i+1).
struct ReductionTrace {
  DivisorClass start;
  DivisorClass end;
  std::vector<int> steps;
  Terminal terminal = Terminal::Fundamental;
};

// Re-applies the recorded steps to `start`; must reproduce `end`.
DivisorClass replay(const ReductionTrace& t);

// Sort-then-Cremona loop.  Each Cremona application strictly decreases the
// degree, so the loop stops either inside the fundamental chamber
// (A.s_i >= 0 for every simple root) or with negative degree, which is
// flagged NonEffective.  Requires r >= 3.
ReductionTrace reduce_to_fundamental(const DivisorClass& a);

// Membership in the reflection orbit of E_r.  For r <= 2 the orbit is the
// hardcoded finite list ({E_1} resp. {E_1, E_2, H-E_1-E_2}); for r >= 3 the
// class is reduced and compared against E_r.
bool is_exceptional_class(const DivisorClass& a);

// The orbit of E_r under the reflection group.  `patterns` returns one
// normalized representative per permutation orbit; `classes` expands each
// representative over all distinct permutations of its multiplicities.
// Both are sorted by (degree, mults lexicographic).  For r >= 9 the orbit
// is infinite and max_degree is mandatory (std::invalid_argument without).
std::vector<DivisorClass> exceptional_patterns(std::size_t r,
                                               std::optional<Int> max_degree = std::nullopt);
std::vector<DivisorClass> enumerate_exceptional_classes(std::size_t r,
                                                        std::optional<Int> max_degree = std::nullopt);

// Shared memoized pattern lists (the certifiers hit these in sweeps).  The
// cap only matters for r >= 9.
const std::vector<DivisorClass>& cached_exceptional_patterns(std::size_t r, const Int& cap = 32);

enum class NefOutcome { Nef, NotNef, Unknown };
struct NefStatus {
  NefOutcome outcome = NefOutcome::Unknown;
  std::optional<DivisorClass> witness;  // a class met non-positively when NotNef
};

// r <= 8: complete decision against the finite exceptional list plus
// A.H >= 0 and A.A >= 0.  r >= 9: Nef when reduction ends at a*H with
// a >= 0; NotNef when an exceptional class of degree <= cap meets A
// negatively; Unknown otherwise (deliberately incomplete).
NefStatus certify_nef(const DivisorClass& a, const Int& cap = 32);

// Solves C = a_0 s_0 + ... + a_{r-1} s_{r-1} + E_r over the integers
// (unique when solvable; nullopt when C - E_r is outside the root span).
// Orbit members get non-negative coefficients in practice, but only the
// exactness of the expansion is guaranteed here.
std::optional<std::vector<Int>> simple_root_decomposition(const DivisorClass& c);

}  // namespace blowup::weyl
