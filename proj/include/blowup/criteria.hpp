#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/divisor_class.hpp"

namespace blowup::criteria {

enum class Property { Ample, GloballyGenerated, VeryAmple };
enum class Outcome { Certified, NotCertified, Conditional, NotApplicable };

// One checked inequality with both sides fully cleared to exact integers.
// relation is ">", ">=" or "==", or one of the non-arithmetic markers
// "assumed" (an undischarged conjecture, which never passes) and "nef"
// (a nested nef certificate; lhs holds the offending product when the
// check fails against a concrete curve).
struct HypothesisRecord {
  std::string label;
  Int lhs;
  Int rhs;
  std::string relation;
  bool pass;
};

// Certificates are sufficient-condition checks: Certified when every
// recorded hypothesis passes (and only then), NotApplicable when a stated
// precondition fails (the failing precondition is recorded), Conditional
// when the numeric hypotheses pass but rest on a named conjecture.
struct Verdict {
  Property property;
  Outcome outcome;
  std::string criterion_id;
  std::string conjecture;  // non-empty exactly when outcome == Conditional
  std::vector<HypothesisRecord> hypotheses;
  std::vector<DivisorClass> witnesses;  // obstructing or decomposition classes
};

// d*H - m*(E_1 + ... + E_r) with d, m, r >= 1.
struct UniformBundle {
  Int d;
  Int m;
  std::size_t r;

  DivisorClass to_class() const;
};

// Ampleness for arbitrary multiplicities.  Zero multiplicities are
// truncated away first (the class is pulled back from the blow-up at its
// support); the certificate then speaks about that smaller surface.
Verdict ample_general(const DivisorClass& l);

// Sharper family tail for r >= 9: the quadratic family only needs
// s >= 9, at the price of three explicit exceptional-class checks.
Verdict ample_r9(const DivisorClass& l);

// Uniform ampleness via the sharp one-inequality threshold
// (coefficient-wise: d > 2m for r in {2,3}, 2d > 5m for r = 5, else
// (r+2)d^2 > r(r+3)m^2).
Verdict ample_uniform_lambda(const UniformBundle& u);

// Uniform ampleness with the asymptotically optimal constant.  For r <= 8
// the linear hypothesis is replaced by exact positivity against the finite
// exceptional list, which lowers the linear threshold below 95/32.
Verdict ample_uniform(const UniformBundle& u);

// Conditional on the Nagata Conjecture (r >= 9): predicted ample exactly
// when d^2 > r m^2.  Never returns Certified.
Verdict ample_nagata_conditional(const UniformBundle& u);

// L = k*F + a*H with F nef, k >= 1, a >= 1 and every multiplicity of L
// positive forces ampleness.  k is searched over 1..max(1, deg L).
Verdict ample_by_nef_decomposition(const DivisorClass& l, const DivisorClass& f);

// Global generation for arbitrary multiplicities (adjoint-twist reduction
// to the ampleness hypotheses).  The stated precondition is every m_i >= 2
// with r >= 5; permissive mode relaxes to m_i >= 0 and adds an explicit
// adjoint self-intersection check to stay sound.
Verdict gg_general(const DivisorClass& l, bool permissive = false);

// Uniform global generation: 32d >= 95m and (3r+4)(d+3)^2 >= r(3r+5)(m+1)^2
// (r >= 2, m >= 6).
Verdict gg_uniform(const UniformBundle& u);

// Uniform very-ampleness: d >= 3m and (r+2)(d+3)^2 >= r(r+3)(m+1)^2
// (r >= 3, m >= 4).
Verdict va_uniform(const UniformBundle& u);

// Baseline comparison criterion (uniform; m >= 2):
//   Ample:              d >= 3m+1 and d^2 >= (r+1)m^2
//   GloballyGenerated:  d >= 3m+1 and (d+3)^2 >= (r+1)(m+1)^2
Verdict st_criterion(Property property, const UniformBundle& u);

// Numerical reasons L cannot be ample: the self-intersection when
// L.L <= 0, and every exceptional pattern the (normalized) class meets
// non-positively in the worst point-alignment.  The pattern list is
// complete for r <= 8 and degree-capped for r >= 9.
std::vector<std::pair<DivisorClass, Int>> necessary_obstructions(const DivisorClass& l,
                                                                 const Int& cap = 32);

enum class CriterionId {
  AmpleGeneral,
  AmpleR9,
  AmpleUniform,
  AmpleUniformLambda,
  AmpleNagata,
  GgGeneral,
  GgGeneralPermissive,
  GgUniform,
  VaUniform,
  StAmple,
  StGg,
};

std::string criterion_name(CriterionId id);
std::optional<CriterionId> criterion_from_name(const std::string& name);
bool criterion_is_uniform(CriterionId id);

// Smallest d >= 1 the criterion accepts (Conditional counts as acceptance
// for the conjecture-backed id).  All criteria are monotone in d, so the
// search is exponential-then-binary; nullopt when the criterion never
// applies to the given data.
std::optional<Int> min_degree(CriterionId id, const std::vector<Int>& mults);
std::optional<Int> min_degree_uniform(CriterionId id, std::size_t r, const Int& m);

}  // namespace blowup::criteria
