#include "blowup/interpolation.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace blowup::interpolation {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd p < 2^63, residues scaled by 2^64.
struct Montgomery {
  u64 p;
  u64 np;  // -p^{-1} mod 2^64
  u64 r2;  // 2^128 mod p
  u64 one;

  explicit Montgomery(u64 prime) : p(prime) {
    u64 inv = p;  // Newton lifting doubles correct bits each step
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    np = ~inv + 1;
    u64 r = (~u64(0) % p) + 1;  // 2^64 mod p (p > 1, so no wrap to p itself matters below)
    if (r == p) r = 0;
    r2 = u64((u128(r) * r) % p);
    one = to_mont(1);
  }

  u64 redc(u128 t) const {
    u64 m = u64(t) * np;
    u128 mp = u128(m) * p;
    u64 carry = u64(t) != 0 ? 1 : 0;  // low words cancel exactly
    u64 res = u64(t >> 64) + u64(mp >> 64) + carry;
    if (res >= p) res -= p;
    return res;
  }

  u64 to_mont(u64 a) const { return redc(u128(a % p) * r2); }
  u64 from_mont(u64 a) const { return redc(a); }
  u64 mul(u64 a, u64 b) const { return redc(u128(a) * b); }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 a, u64 e) const {
    u64 acc = one;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

u64 uniform_mod(std::mt19937_64& gen, u64 p) {
  const u64 lim = ~u64(0) - ~u64(0) % p;
  for (;;) {
    u64 x = gen();
    if (x < lim) return x % p;
  }
}

std::int64_t to_i64(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw std::invalid_argument(std::string(what) + " out of range");
  return v.get_si();
}

// Row-echelon rank with division-free updates except one pivot inverse per
// step.
std::int64_t matrix_rank(std::vector<std::vector<u64>>& a, const Montgomery& mont) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const u64 inv = mont.inv(a[rank][col]);
    for (std::size_t rr = rank + 1; rr < rows; ++rr) {
      if (a[rr][col] == 0) continue;
      const u64 f = mont.mul(a[rr][col], inv);
      const std::vector<u64>& src = a[rank];
      std::vector<u64>& dst = a[rr];
      for (std::size_t k = col; k < cols; ++k)
        dst[k] = mont.sub(dst[k], mont.mul(f, src[k]));
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

std::int64_t rank_one_trial(std::int64_t d, const std::vector<std::int64_t>& mults,
                            const Montgomery& mont, u64 seed) {
  std::mt19937_64 gen(seed);
  std::set<std::pair<u64, u64>> used;
  std::vector<std::pair<u64, u64>> points;
  for (const std::int64_t n : mults) {
    if (n <= 0) {
      points.emplace_back(0, 0);  // placeholder, imposes nothing
      continue;
    }
    std::pair<u64, u64> pt;
    int attempts = 0;
    do {
      if (++attempts > 1000) throw std::runtime_error("could not sample distinct points");
      pt = {uniform_mod(gen, mont.p), uniform_mod(gen, mont.p)};
    } while (!used.insert(pt).second);
    points.push_back(pt);
  }

  std::int64_t max_n = 0;
  for (const std::int64_t n : mults) max_n = std::max(max_n, n);

  // Falling factorials ff[a][i] = a (a-1) ... (a-i+1), in Montgomery form.
  std::vector<std::vector<u64>> ff(static_cast<std::size_t>(d) + 1);
  for (std::int64_t aa = 0; aa <= d; ++aa) {
    auto& row = ff[static_cast<std::size_t>(aa)];
    row.resize(static_cast<std::size_t>(std::min(aa, max_n)) + 1);
    u64 acc = 1;
    row[0] = mont.one;
    for (std::int64_t i = 1; i <= std::min(aa, max_n); ++i) {
      acc = u64((u128(acc) * u64((aa - i + 1) % std::int64_t(mont.p))) % mont.p);
      row[static_cast<std::size_t>(i)] = mont.to_mont(acc);
    }
  }

  const std::size_t cols = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
  std::vector<std::vector<u64>> matrix;
  for (std::size_t pi = 0; pi < mults.size(); ++pi) {
    const std::int64_t n = mults[pi];
    if (n <= 0) continue;
    std::vector<u64> pu(static_cast<std::size_t>(d) + 1), pv(static_cast<std::size_t>(d) + 1);
    pu[0] = pv[0] = mont.one;
    const u64 um = mont.to_mont(points[pi].first);
    const u64 vm = mont.to_mont(points[pi].second);
    for (std::int64_t k = 1; k <= d; ++k) {
      pu[static_cast<std::size_t>(k)] = mont.mul(pu[static_cast<std::size_t>(k - 1)], um);
      pv[static_cast<std::size_t>(k)] = mont.mul(pv[static_cast<std::size_t>(k - 1)], vm);
    }
    // one row per derivative order (i, j), i + j <= n - 1
    for (std::int64_t i = 0; i <= n - 1; ++i) {
      for (std::int64_t j = 0; i + j <= n - 1; ++j) {
        std::vector<u64> row(cols, 0);
        std::size_t idx = 0;
        for (std::int64_t aa = 0; aa <= d; ++aa) {
          for (std::int64_t b = 0; b <= d - aa; ++b, ++idx) {
            if (aa < i || b < j) continue;
            u64 c = mont.mul(ff[static_cast<std::size_t>(aa)][static_cast<std::size_t>(i)],
                             ff[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]);
            c = mont.mul(c, pu[static_cast<std::size_t>(aa - i)]);
            c = mont.mul(c, pv[static_cast<std::size_t>(b - j)]);
            row[idx] = c;
          }
        }
        matrix.push_back(std::move(row));
      }
    }
  }
  return matrix_rank(matrix, mont);
}

}  // namespace

SystemDimensionReport actual_dimension(const DivisorClass& l, const Options& opt) {
  if (opt.prime < 3 || opt.prime % 2 == 0 || opt.prime >= (u64(1) << 63))
    throw std::invalid_argument("prime must be an odd prime below 2^63");
  if (opt.trials < 1) throw std::invalid_argument("trials must be >= 1");

  SystemDimensionReport rep;
  rep.degree = to_i64(l.degree, "degree");
  for (const Int& m : l.mults) rep.mults.push_back(to_i64(m, "multiplicity"));
  rep.prime = opt.prime;
  rep.seed = opt.seed;
  rep.trials = opt.trials;

  const NumericalProfile prof = profile(l);
  rep.expected_dim = to_i64(prof.expected_dim, "expected dimension");

  if (rep.degree < 0) {
    rep.cols = 0;
    rep.rows = 0;
    rep.rank = 0;
    rep.actual_dim = -1;
    rep.is_special = rep.actual_dim > rep.expected_dim;
    return rep;
  }
  if (rep.degree > 3000) throw std::invalid_argument("degree too large for dense elimination");
  if (static_cast<u64>(rep.degree) + 2 >= opt.prime)
    throw std::invalid_argument("prime must exceed the degree plus one");

  rep.cols = (rep.degree + 1) * (rep.degree + 2) / 2;
  rep.rows = 0;
  for (const std::int64_t n : rep.mults) {
    if (n > 3000) throw std::invalid_argument("multiplicity too large for dense elimination");
    if (n > 0) rep.rows += n * (n + 1) / 2;
    if (rep.rows > 10'000'000)
      throw std::invalid_argument("system too large for dense elimination");
  }
  if (rep.rows * rep.cols > 64'000'000)
    throw std::invalid_argument("system too large for dense elimination");

  const Montgomery mont(opt.prime);
  std::int64_t best_rank = 0;
  for (int t = 0; t < opt.trials; ++t)
    best_rank = std::max(best_rank, rank_one_trial(rep.degree, rep.mults, mont, opt.seed + u64(t)));
  rep.rank = best_rank;
  rep.actual_dim = rep.cols - 1 - rep.rank;
  rep.is_special = rep.actual_dim > rep.expected_dim;
  return rep;
}

bool is_special(const DivisorClass& l, const Options& opt) {
  return actual_dimension(l, opt).is_special;
}

bool curve_class_effective(const DivisorClass& l, const Options& opt) {
  if (l.degree < 0) return false;
  return actual_dimension(l, opt).actual_dim >= 0;
}

}  // namespace blowup::interpolation
