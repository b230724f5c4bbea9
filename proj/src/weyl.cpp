#include "blowup/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace blowup::weyl {

Root cremona_root(std::size_t r) {
  if (r < 3)
    throw std::invalid_argument("cremona_root: not applicable for r < 3");
  DivisorClass c(1, std::vector<Int>(r, 0));
  c.mults[0] = c.mults[1] = c.mults[2] = 1;
  return Root{0, std::move(c)};
}

Root swap_root(std::size_t r, std::size_t i) {
  if (i < 1 || i >= r)
    throw std::invalid_argument("swap_root: need 1 <= i <= r-1");
  DivisorClass c(0, std::vector<Int>(r, 0));
  c.mults[i - 1] = -1;
  c.mults[i] = 1;
  return Root{static_cast<int>(i), std::move(c)};
}

DivisorClass reflect(const DivisorClass& a, const Root& s) {
  Int t = intersect(a, s.cls);
  return a + (t * s.cls);
}

DivisorClass replay(const ReductionTrace& t) {
  DivisorClass a = t.start;
  std::size_t r = a.r();
  for (int step : t.steps) {
    if (step == 0)
      a = reflect(a, cremona_root(r));
    else
      a = reflect(a, swap_root(r, static_cast<std::size_t>(step)));
  }
  return a;
}

// Bubble sort into non-increasing order, appending one swap step per
// adjacent transposition (a swap equals reflection in E_i - E_{i+1}).
static void sort_recording_steps(DivisorClass& a, std::vector<int>& steps) {
  std::size_t r = a.r();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 1; i < r; ++i) {
      if (a.mults[i - 1] < a.mults[i]) {
        std::swap(a.mults[i - 1], a.mults[i]);
        steps.push_back(static_cast<int>(i));
        moved = true;
      }
    }
  }
}

ReductionTrace reduce_to_fundamental(const DivisorClass& a) {
  if (a.r() < 3)
    throw std::invalid_argument("reduce_to_fundamental: not applicable for r < 3");
  ReductionTrace t;
  t.start = a;
  DivisorClass cur = a;
  for (;;) {
    sort_recording_steps(cur, t.steps);
    if (cur.degree < 0) {
      t.terminal = Terminal::NonEffective;
      break;
    }
    Int s0 = cur.degree - cur.mults[0] - cur.mults[1] - cur.mults[2];
    if (s0 >= 0) {
      t.terminal = Terminal::Fundamental;
      break;
    }
    // Apply the Cremona reflection in place; degree strictly drops.
    cur.degree += s0;
    cur.mults[0] += s0;
    cur.mults[1] += s0;
    cur.mults[2] += s0;
    t.steps.push_back(0);
  }
  t.end = cur;
  return t;
}

static DivisorClass e_r_pattern(std::size_t r) {
  DivisorClass c(0, std::vector<Int>(r, 0));
  c.mults[r - 1] = -1;  // normalized form of E_r
  return c;
}

bool is_exceptional_class(const DivisorClass& a) {
  std::size_t r = a.r();
  if (r == 0) return false;
  if (r <= 2) {
    if (a == exceptional_divisor(r, 1)) return true;
    if (r == 2) {
      if (a == exceptional_divisor(2, 2)) return true;
      DivisorClass line(1, {1, 1});
      if (a == line) return true;
    }
    return false;
  }
  // Cheap numerical gate before running the reduction.
  if (intersect(a, a) != -1) return false;
  if (intersect(a, canonical_class(r)) != -1) return false;
  ReductionTrace t = reduce_to_fundamental(a);
  return t.terminal == Terminal::Fundamental && t.end == e_r_pattern(r);
}

struct ClassLess {
  bool operator()(const DivisorClass& a, const DivisorClass& b) const {
    return class_less(a, b);
  }
};

// Orbit walk over normalized representatives.  Neighbors apply the Cremona
// move to every index triple (equivalent to conjugating the Cremona root by
// permutations) and re-sort.  Along any reduction path degrees are
// monotone, so pruning at max_degree still reaches every capped class.
static std::vector<DivisorClass> orbit_patterns(std::size_t r, std::optional<Int> max_degree) {
  std::set<DivisorClass, ClassLess> seen;
  std::vector<DivisorClass> frontier;
  DivisorClass start = e_r_pattern(r);
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    std::vector<DivisorClass> next;
    for (const DivisorClass& cur : frontier) {
      for (std::size_t i = 0; i + 2 < r; ++i)
        for (std::size_t j = i + 1; j + 1 < r; ++j)
          for (std::size_t k = j + 1; k < r; ++k) {
            Int t = cur.degree - cur.mults[i] - cur.mults[j] - cur.mults[k];
            if (t == 0) continue;
            DivisorClass cand = cur;
            cand.degree += t;
            cand.mults[i] += t;
            cand.mults[j] += t;
            cand.mults[k] += t;
            if (cand.degree < 0) continue;
            if (max_degree && cand.degree > *max_degree) continue;
            cand = normalize(cand);
            if (seen.insert(cand).second) next.push_back(std::move(cand));
          }
    }
    frontier = std::move(next);
  }
  return std::vector<DivisorClass>(seen.begin(), seen.end());
}

std::vector<DivisorClass> exceptional_patterns(std::size_t r, std::optional<Int> max_degree) {
  if (r < 1) throw std::invalid_argument("exceptional_patterns: need r >= 1");
  if (r <= 2) {
    std::vector<DivisorClass> out;
    out.push_back(normalize(exceptional_divisor(r, 1)));
    if (r == 2) out.push_back(DivisorClass(1, {1, 1}));
    if (max_degree)
      std::erase_if(out, [&](const DivisorClass& c) { return c.degree > *max_degree; });
    std::sort(out.begin(), out.end(), class_less);
    return out;
  }
  if (r >= 9 && !max_degree)
    throw std::invalid_argument(
        "exceptional_patterns: the orbit is infinite for r >= 9, a degree cap is required");
  return orbit_patterns(r, max_degree);
}

std::vector<DivisorClass> enumerate_exceptional_classes(std::size_t r,
                                                        std::optional<Int> max_degree) {
  std::vector<DivisorClass> out;
  for (const DivisorClass& p : exceptional_patterns(r, max_degree)) {
    std::vector<Int> m = p.mults;
    std::sort(m.begin(), m.end());  // ascending start for next_permutation
    do {
      out.emplace_back(p.degree, m);
    } while (std::next_permutation(m.begin(), m.end()));
  }
  std::sort(out.begin(), out.end(), class_less);
  return out;
}

const std::vector<DivisorClass>& cached_exceptional_patterns(std::size_t r, const Int& cap) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, Int>, std::vector<DivisorClass>> memo;
  std::lock_guard<std::mutex> lock(mu);
  std::pair<std::size_t, Int> key{r, r <= 8 ? Int(-1) : cap};
  auto it = memo.find(key);
  if (it == memo.end()) {
    std::optional<Int> bound;
    if (r >= 9) bound = cap;
    it = memo.emplace(key, exceptional_patterns(r, bound)).first;
  }
  return it->second;
}

// Minimum of A.C over all permutations of a pattern C: with A normalized,
// pairing sorted-with-sorted maximizes sum(m_i n_i) (rearrangement), so the
// aligned product is the orbit minimum.
static NefStatus not_nef(const DivisorClass& witness) {
  return NefStatus{NefOutcome::NotNef, witness};
}

NefStatus certify_nef(const DivisorClass& a, const Int& cap) {
  std::size_t r = a.r();
  if (r == 0) throw std::invalid_argument("certify_nef: need r >= 1");

  if (r <= 2) {
    std::vector<DivisorClass> gens;
    gens.push_back(exceptional_divisor(r, 1));
    if (r == 1) gens.push_back(DivisorClass(1, {1}));  // H - E_1 spans the boundary
    if (r == 2) {
      gens.push_back(exceptional_divisor(2, 2));
      gens.push_back(DivisorClass(1, {1, 1}));
    }
    for (const DivisorClass& g : gens)
      if (intersect(a, g) < 0) return not_nef(g);
    if (intersect(a, hyperplane_class(r)) < 0) return not_nef(hyperplane_class(r));
    if (intersect(a, a) < 0) return not_nef(a);
    return NefStatus{NefOutcome::Nef, std::nullopt};
  }

  Normalized norm = normalize_with_permutation(a);
  auto unpermute = [&](const DivisorClass& p) {
    DivisorClass w(p.degree, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) w.mults[norm.perm[i]] = p.mults[i];
    return w;
  };

  if (r <= 8) {
    for (const DivisorClass& p : cached_exceptional_patterns(r, cap)) {
      if (intersect(norm.cls, p) < 0) return not_nef(unpermute(p));
    }
    if (intersect(a, hyperplane_class(r)) < 0) return not_nef(hyperplane_class(r));
    if (intersect(a, a) < 0) return not_nef(a);
    return NefStatus{NefOutcome::Nef, std::nullopt};
  }

  ReductionTrace t = reduce_to_fundamental(a);
  if (t.terminal == Terminal::Fundamental && t.end.degree >= 0) {
    bool all_zero = true;
    for (const Int& m : t.end.mults)
      if (m != 0) { all_zero = false; break; }
    if (all_zero) return NefStatus{NefOutcome::Nef, std::nullopt};
  }
  for (const DivisorClass& p : cached_exceptional_patterns(r, cap)) {
    if (intersect(norm.cls, p) < 0) return not_nef(unpermute(p));
  }
  return NefStatus{NefOutcome::Unknown, std::nullopt};
}

std::optional<std::vector<Int>> simple_root_decomposition(const DivisorClass& c) {
  std::size_t r = c.r();
  if (r < 3) return std::nullopt;
  // Solve C = sum a_i s_i + E_r coordinate by coordinate:
  //   degree:       a_0 = e
  //   mult j:       C_j = a_0*[j<=3] + a_{j-1}*[j>=2] - a_j*[j<=r-1] - [j==r]
  // The first r equations determine a uniquely; the last must be consistent.
  std::vector<Int> a(r, 0);
  a[0] = c.degree;
  for (std::size_t j = 1; j <= r - 1; ++j) {
    Int rhs = c.mults[j - 1];
    Int acc = 0;
    if (j <= 3) acc += a[0];
    if (j >= 2) acc += a[j - 1];
    a[j] = acc - rhs;
  }
  // Consistency at j = r.
  Int rhs = c.mults[r - 1];
  Int acc = 0;
  if (r <= 3) acc += a[0];
  if (r >= 2) acc += a[r - 1];
  acc -= 1;  // the E_r summand
  if (acc != rhs) return std::nullopt;
  return a;
}

}  // namespace blowup::weyl
