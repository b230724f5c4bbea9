#include "blowup/divisor_class.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blowup {

DivisorClass hyperplane_class(std::size_t r) {
  return DivisorClass(1, std::vector<Int>(r, 0));
}

DivisorClass exceptional_divisor(std::size_t r, std::size_t i) {
  if (i < 1 || i > r) throw std::invalid_argument("exceptional_divisor: index out of range");
  DivisorClass e(0, std::vector<Int>(r, 0));
  e.mults[i - 1] = -1;  // 0*H - (-1)*E_i = E_i
  return e;
}

DivisorClass canonical_class(std::size_t r) {
  return DivisorClass(-3, std::vector<Int>(r, -1));
}

static void require_same_r(const DivisorClass& a, const DivisorClass& b, const char* op) {
  if (a.r() != b.r())
    throw std::invalid_argument(std::string(op) + ": classes have different r (" +
                                std::to_string(a.r()) + " vs " + std::to_string(b.r()) + ")");
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_r(a, b, "class addition");
  DivisorClass c = a;
  c.degree += b.degree;
  for (std::size_t i = 0; i < c.mults.size(); ++i) c.mults[i] += b.mults[i];
  return c;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_r(a, b, "class subtraction");
  DivisorClass c = a;
  c.degree -= b.degree;
  for (std::size_t i = 0; i < c.mults.size(); ++i) c.mults[i] -= b.mults[i];
  return c;
}

DivisorClass operator*(const Int& k, const DivisorClass& a) {
  DivisorClass c = a;
  c.degree *= k;
  for (auto& m : c.mults) m *= k;
  return c;
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_r(a, b, "intersect");
  Int acc = a.degree * b.degree;
  for (std::size_t i = 0; i < a.mults.size(); ++i) acc -= a.mults[i] * b.mults[i];
  return acc;
}

bool is_normalized(const DivisorClass& a) {
  for (std::size_t i = 1; i < a.mults.size(); ++i)
    if (a.mults[i - 1] < a.mults[i]) return false;
  return true;
}

DivisorClass normalize(const DivisorClass& a) {
  DivisorClass c = a;
  std::stable_sort(c.mults.begin(), c.mults.end(), [](const Int& x, const Int& y) { return x > y; });
  return c;
}

Normalized normalize_with_permutation(const DivisorClass& a) {
  Normalized out;
  out.perm.resize(a.mults.size());
  std::iota(out.perm.begin(), out.perm.end(), std::size_t{0});
  std::stable_sort(out.perm.begin(), out.perm.end(),
                   [&](std::size_t i, std::size_t j) { return a.mults[i] > a.mults[j]; });
  out.cls.degree = a.degree;
  out.cls.mults.reserve(a.mults.size());
  for (std::size_t i : out.perm) out.cls.mults.push_back(a.mults[i]);
  return out;
}

NumericalProfile profile(const DivisorClass& a) {
  NumericalProfile p;
  p.self_intersection = intersect(a, a);
  p.k_degree = intersect(a, canonical_class(a.r()));
  // chi(C) = (C.C - C.K)/2 + 1; the numerator is always even.
  p.chi = (p.self_intersection - p.k_degree) / 2 + 1;
  Int monomials = 0;
  if (a.degree >= 0) monomials = (a.degree + 2) * (a.degree + 1) / 2;
  Int conditions = 0;
  for (const Int& m : a.mults)
    if (m > 0) conditions += m * (m + 1) / 2;
  p.raw_virtual_dim = monomials - 1 - conditions;
  p.expected_dim = p.raw_virtual_dim < -1 ? Int(-1) : p.raw_virtual_dim;
  return p;
}

bool is_minus_one_class(const DivisorClass& a) {
  return intersect(a, a) == -1 && intersect(a, canonical_class(a.r())) == -1;
}

DivisorClass adjoint_twist(const DivisorClass& a) {
  DivisorClass c = a;
  c.degree += 3;
  for (auto& m : c.mults) m += 1;
  return c;
}

std::string to_string(const DivisorClass& a) {
  std::string s = a.degree.get_str();
  s += ";";
  for (const Int& m : a.mults) {
    s += " ";
    s += m.get_str();
  }
  return s;
}

static Int parse_int_token(const std::string& tok) {
  // mpz_class(str) accepts leading '+'/'-' and digits; reject anything else
  // up front so errors carry the offending token.
  if (tok.empty()) throw std::invalid_argument("parse_class: empty integer token");
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) throw std::invalid_argument("parse_class: bare sign '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw std::invalid_argument("parse_class: bad integer '" + tok + "'");
  return Int(tok);
}

DivisorClass parse_class(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("parse_class: expected 'd; n1 n2 ... nr', missing ';'");
  if (text.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("parse_class: more than one ';'");
  std::string head = text.substr(0, semi);
  std::string tail = text.substr(semi + 1);

  std::istringstream hs(head);
  std::string dtok, extra;
  if (!(hs >> dtok)) throw std::invalid_argument("parse_class: missing degree");
  if (hs >> extra) throw std::invalid_argument("parse_class: junk before ';'");

  DivisorClass c;
  c.degree = parse_int_token(dtok);
  std::istringstream ts(tail);
  std::string tok;
  while (ts >> tok) c.mults.push_back(parse_int_token(tok));
  if (c.mults.empty())
    throw std::invalid_argument("parse_class: need at least one multiplicity (r >= 1)");
  return c;
}

bool class_less(const DivisorClass& a, const DivisorClass& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return std::lexicographical_compare(a.mults.begin(), a.mults.end(), b.mults.begin(),
                                      b.mults.end());
}

}  // namespace blowup
