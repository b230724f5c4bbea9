#include "blowup/inequalities.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace blowup::ineq {

MultiplicityVector::MultiplicityVector(std::vector<Int> e) : entries(std::move(e)) {
  if (entries.empty())
    throw std::invalid_argument("MultiplicityVector: need at least one entry");
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1] < entries[i])
      throw std::invalid_argument("MultiplicityVector: entries must be non-increasing");
}

KeyOutcome lemma_key(const std::vector<Int>& m, const MultiplicityVector& n) {
  std::size_t r = n.r();
  if (r < 2) throw std::invalid_argument("lemma_key: need r >= 2");
  if (m.size() != r) throw std::invalid_argument("lemma_key: len(m) != len(n)");
  for (const Int& mi : m)
    if (mi < 0) throw std::invalid_argument("lemma_key: m must be non-negative");
  if (n.entries[r - 1] <= 0) throw std::invalid_argument("lemma_key: need n_r > 0");
  if (n.entries[0] < 2) throw std::invalid_argument("lemma_key: need n_1 >= 2");

  if (r == 2 && n.entries[0] == 2 && n.entries[1] == 2) return KeyOutcome::Excluded;

  Int sum_m2 = 0, sum_n2 = 0, sum_mn = 0;
  for (std::size_t i = 0; i < r; ++i) {
    sum_m2 += m[i] * m[i];
    sum_n2 += n.entries[i] * n.entries[i];
    sum_mn += m[i] * n.entries[i];
  }
  Int lhs = Int(r + 3) * sum_m2 * (sum_n2 - n.entries[r - 1]);
  Int rhs = Int(r + 2) * sum_mn * sum_mn;
  if (lhs > rhs) return KeyOutcome::HoldsStrict;
  if (lhs == rhs) return KeyOutcome::HoldsEquality;
  return KeyOutcome::Violated;
}

bool lemma_key2(const MultiplicityVector& n) {
  std::size_t r = n.r();
  if (r < 9) throw std::invalid_argument("lemma_key2: need r >= 9");
  if (n.entries[r - 1] < 3) throw std::invalid_argument("lemma_key2: need n_r >= 3");
  if (n.entries[0] < 12) throw std::invalid_argument("lemma_key2: need n_1 >= 12");
  Int sum_n = 0, sum_n2 = 0;
  for (const Int& ni : n.entries) {
    sum_n += ni;
    sum_n2 += ni * ni;
  }
  Int lhs = Int(r) * Int(3 * r + 40) * (sum_n2 - n.entries[r - 1]);
  Int rhs = Int(3 * r + 39) * sum_n * sum_n;
  return lhs > rhs;
}

bool lemma_key1(const MultiplicityVector& n) {
  std::size_t r = n.r();
  if (r < 2) throw std::invalid_argument("lemma_key1: need r >= 2");
  if (n.entries[r - 1] <= 0) throw std::invalid_argument("lemma_key1: need n_r > 0");
  if (n.entries[0] < 12) throw std::invalid_argument("lemma_key1: need n_1 >= 12");
  Int sum_n = 0, sum_n2 = 0;
  for (const Int& ni : n.entries) {
    sum_n += ni;
    sum_n2 += ni * ni;
  }
  Int lhs = Int(4) * Int(r) * Int(r + 3) * (sum_n2 - 1);
  Int two_sum_plus1 = 2 * sum_n + 1;
  Int rhs = Int(r + 2) * two_sum_plus1 * two_sum_plus1;
  return lhs > rhs;
}

bool xu_lower_bound(const Int& e, const MultiplicityVector& n) {
  if (e < 1) throw std::invalid_argument("xu_lower_bound: need e >= 1");
  std::size_t s = 0;
  bool found = false;
  for (std::size_t i = 0; i < n.r(); ++i)
    if (n.entries[i] > 0) {
      s = i;
      found = true;
    }
  if (!found) throw std::invalid_argument("xu_lower_bound: need some n_i > 0");
  Int sum_n2 = 0;
  for (const Int& ni : n.entries) sum_n2 += ni * ni;
  return e * e >= sum_n2 - n.entries[s];
}

namespace {

// Enumerates non-increasing vectors of length r with entries in [lo, first]
// and leading entry fixed, invoking f on each.
template <typename F>
void walk_non_increasing(std::vector<long>& buf, std::size_t pos, long lo, F&& f) {
  if (pos == buf.size()) {
    f(buf);
    return;
  }
  for (long v = buf[pos - 1]; v >= lo; --v) {
    buf[pos] = v;
    walk_non_increasing(buf, pos + 1, lo, f);
  }
}

std::vector<Int> to_int_vec(const std::vector<long>& v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

SweepReport sweep_lemma_key(std::size_t r_min, std::size_t r_max, long m_max, long n_max) {
  SweepReport rep;
  for (std::size_t r = r_min; r <= r_max; ++r) {
    std::vector<long> nbuf(r);
    for (long n1 = 2; n1 <= n_max; ++n1) {
      nbuf[0] = n1;
      walk_non_increasing(nbuf, 1, 1, [&](const std::vector<long>& nv) {
        MultiplicityVector n(to_int_vec(nv));
        // Odometer over all m in [0, m_max]^r.
        std::vector<Int> m(r, 0);
        for (;;) {
          ++rep.cases;
          KeyOutcome out = lemma_key(m, n);
          if (out == KeyOutcome::Violated) ++rep.violations;
          if (out == KeyOutcome::HoldsEquality) rep.equality_cases.emplace_back(m, n.entries);
          std::size_t i = 0;
          while (i < r && m[i] == m_max) m[i++] = 0;
          if (i == r) break;
          ++m[i];
        }
      });
    }
  }
  return rep;
}

namespace {

template <typename F>
void sweep_key2_core(SweepReport& rep, const std::vector<long>& nv, F&& predicate) {
  ++rep.cases;
  if (!predicate(MultiplicityVector(to_int_vec(nv)))) ++rep.violations;
}

}  // namespace

SweepReport sweep_lemma_key2_exhaustive(std::size_t r, long n1_min, long n1_max) {
  SweepReport rep;
  std::vector<long> nbuf(r);
  for (long n1 = n1_min; n1 <= n1_max; ++n1) {
    nbuf[0] = n1;
    walk_non_increasing(nbuf, 1, 3, [&](const std::vector<long>& nv) {
      sweep_key2_core(rep, nv, lemma_key2);
    });
  }
  return rep;
}

SweepReport sweep_lemma_key2_sampled(std::size_t r, long n1_min, long n1_max,
                                     std::size_t samples, std::uint64_t seed) {
  SweepReport rep;
  std::mt19937_64 gen(seed);
  std::vector<long> nv(r);
  for (std::size_t t = 0; t < samples; ++t) {
    long n1 = n1_min + static_cast<long>(gen() % static_cast<std::uint64_t>(n1_max - n1_min + 1));
    nv[0] = n1;
    for (std::size_t i = 1; i < r; ++i)
      nv[i] = 3 + static_cast<long>(gen() % static_cast<std::uint64_t>(n1 - 2));
    std::sort(nv.begin() + 1, nv.end(), std::greater<long>());
    sweep_key2_core(rep, nv, lemma_key2);
  }
  return rep;
}

SweepReport sweep_lemma_key1(std::size_t r_min, std::size_t r_max, long n1_min, long n1_max) {
  SweepReport rep;
  for (std::size_t r = r_min; r <= r_max; ++r) {
    std::vector<long> nbuf(r);
    for (long n1 = n1_min; n1 <= n1_max; ++n1) {
      nbuf[0] = n1;
      walk_non_increasing(nbuf, 1, 1, [&](const std::vector<long>& nv) {
        ++rep.cases;
        if (!lemma_key1(MultiplicityVector(to_int_vec(nv)))) ++rep.violations;
      });
    }
  }
  return rep;
}

}  // namespace blowup::ineq
