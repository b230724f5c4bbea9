#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace blowup {

// Exact integer type used throughout the lattice/certificate layers.
using Int = mpz_class;

// Divisor class d*H - sum n_i*E_i on the blow-up of the projective plane
// at r points, stored as (degree; mults).  The intersection form is
// diagonal of signature (1, -1^r): H^2 = 1, E_i^2 = -1, H.E_i = 0.
struct DivisorClass {
  Int degree;
  std::vector<Int> mults;

  DivisorClass() : degree(0) {}
  DivisorClass(Int d, std::vector<Int> m) : degree(std::move(d)), mults(std::move(m)) {}

  std::size_t r() const { return mults.size(); }

  bool operator==(const DivisorClass& o) const {
    return degree == o.degree && mults == o.mults;
  }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }
};

// H, E_i (1-based), and K = -3H + E_1 + ... + E_r.
DivisorClass hyperplane_class(std::size_t r);
DivisorClass exceptional_divisor(std::size_t r, std::size_t i);
DivisorClass canonical_class(std::size_t r);

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Int& k, const DivisorClass& a);

// a.b = d_a*d_b - sum n_i*n'_i.  Throws std::invalid_argument when the two
// classes live on blow-ups at different numbers of points.
Int intersect(const DivisorClass& a, const DivisorClass& b);

// True when mults are sorted non-increasing.
bool is_normalized(const DivisorClass& a);

// Sorted copy (mults non-increasing).  The permutation-carrying variant
// records perm[i] = index in the input of the entry now at position i.
DivisorClass normalize(const DivisorClass& a);
struct Normalized {
  DivisorClass cls;
  std::vector<std::size_t> perm;
};
Normalized normalize_with_permutation(const DivisorClass& a);

// Numerical invariants.  chi is Riemann-Roch: (C.C - C.K)/2 + 1.
// raw_virtual_dim is the plane count binom(d+2,2) - 1 - sum binom(m_i+1,2)
// where only positive multiplicities impose conditions and the degree term
// is zero for d < 0; expected_dim clamps it at -1.
struct NumericalProfile {
  Int self_intersection;
  Int k_degree;
  Int chi;
  Int raw_virtual_dim;
  Int expected_dim;
};
NumericalProfile profile(const DivisorClass& a);

// C.C == -1 and C.K == -1.
bool is_minus_one_class(const DivisorClass& a);

// L - K = (d+3; m_1+1, ..., m_r+1).
DivisorClass adjoint_twist(const DivisorClass& a);

// Text encoding "d; n1 n2 ... nr" (single spaces, one semicolon).
// parse_class accepts arbitrary whitespace runs and requires r >= 1.
std::string to_string(const DivisorClass& a);
DivisorClass parse_class(const std::string& text);

// Order by (degree, mults lexicographic); used for deterministic listings.
bool class_less(const DivisorClass& a, const DivisorClass& b);

}  // namespace blowup
