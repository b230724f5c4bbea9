#include "blowup/criteria.hpp"

#include <algorithm>
#include <stdexcept>

#include "blowup/weyl.hpp"

namespace blowup::criteria {

DivisorClass UniformBundle::to_class() const {
  if (r < 1) throw std::invalid_argument("UniformBundle: need r >= 1");
  return DivisorClass(d, std::vector<Int>(r, m));
}

namespace {

HypothesisRecord cmp_record(std::string label, Int lhs, const char* relation, Int rhs) {
  std::string rel = relation;
  bool pass;
  if (rel == ">")
    pass = lhs > rhs;
  else if (rel == ">=")
    pass = lhs >= rhs;
  else if (rel == "==")
    pass = lhs == rhs;
  else
    throw std::logic_error("cmp_record: unknown relation " + rel);
  return HypothesisRecord{std::move(label), std::move(lhs), std::move(rhs), std::move(rel), pass};
}

bool all_pass(const std::vector<HypothesisRecord>& hs) {
  for (const auto& h : hs)
    if (!h.pass) return false;
  return true;
}

Verdict not_applicable(Property p, std::string id, HypothesisRecord why) {
  Verdict v;
  v.property = p;
  v.outcome = Outcome::NotApplicable;
  v.criterion_id = std::move(id);
  v.hypotheses.push_back(std::move(why));
  return v;
}

Verdict from_records(Property p, std::string id, std::vector<HypothesisRecord> hs,
                     std::vector<DivisorClass> witnesses = {}) {
  Verdict v;
  v.property = p;
  v.criterion_id = std::move(id);
  v.hypotheses = std::move(hs);
  v.witnesses = std::move(witnesses);
  v.outcome = all_pass(v.hypotheses) ? Outcome::Certified : Outcome::NotCertified;
  return v;
}

struct FamilyLabels {
  const char* h1;
  const char* h2;
  const char* h3;
  const char* h4;  // gets ", worst s = N" appended
};

constexpr FamilyLabels kAmpleLabels{
    "(1) d > m1 + m2",
    "(2) 2d > m1 + ... + m5",
    "(3) 3d > 2m1 + m2 + ... + m7",
    "(4) (s+2) d^2 >= (s+3)(m1^2 + ... + ms^2)",
};

constexpr FamilyLabels kGgLabels{
    "(1) d+3 > (m1+1) + (m2+1)",
    "(2) 2(d+3) > (m1+1) + ... + (m5+1)",
    "(3) 3(d+3) > 2(m1+1) + (m2+1) + ... + (m7+1)",
    "(4) (s+2)(d+3)^2 >= (s+3)((m1+1)^2 + ... + (ms+1)^2)",
};

// The shared hypothesis family: three linear inequalities (entries beyond r
// read as 0) plus the quadratic family over s_min <= s <= r, reported at
// the tightest s (if the tightest passes, every s passes, since the d side
// is common).
void append_family_records(std::vector<HypothesisRecord>& out, const Int& d,
                           const std::vector<Int>& m, std::size_t s_min,
                           const FamilyLabels& lab) {
  auto mi = [&](std::size_t i) -> Int { return i <= m.size() ? m[i - 1] : Int(0); };
  out.push_back(cmp_record(lab.h1, d, ">", mi(1) + mi(2)));
  Int sum5 = 0;
  for (std::size_t i = 1; i <= 5; ++i) sum5 += mi(i);
  out.push_back(cmp_record(lab.h2, 2 * d, ">", sum5));
  Int sum7 = mi(1);
  for (std::size_t i = 1; i <= 7; ++i) sum7 += mi(i);
  out.push_back(cmp_record(lab.h3, 3 * d, ">", sum7));
  if (m.size() >= s_min && s_min >= 2) {
    // Maximize (s+3)*prefix(s)/(s+2) by cross-multiplied comparison.
    Int prefix = 0;
    std::size_t worst_s = 0;
    Int worst_prefix = 0;
    for (std::size_t s = 1; s <= m.size(); ++s) {
      prefix += m[s - 1] * m[s - 1];
      if (s < s_min) continue;
      if (worst_s == 0 ||
          Int(s + 3) * prefix * Int(worst_s + 2) > Int(worst_s + 3) * worst_prefix * Int(s + 2)) {
        worst_s = s;
        worst_prefix = prefix;
      }
    }
    out.push_back(cmp_record(std::string(lab.h4) + ", worst s = " + std::to_string(worst_s),
                             Int(worst_s + 2) * d * d, ">=", Int(worst_s + 3) * worst_prefix));
  }
}

// Shared preconditions for the uniform certifiers.
std::optional<HypothesisRecord> uniform_pre(const UniformBundle& u, std::size_t r_min,
                                            const Int& m_min) {
  if (u.r < r_min)
    return cmp_record("pre: r >= " + std::to_string(r_min), Int(u.r), ">=", Int(r_min));
  if (u.m < m_min) return cmp_record("pre: m >= " + m_min.get_str(), u.m, ">=", m_min);
  if (u.d < 1) return cmp_record("pre: d >= 1", u.d, ">=", 1);
  return std::nullopt;
}

}  // namespace

Verdict ample_general(const DivisorClass& l_in) {
  const Property P = Property::Ample;
  const std::string ID = "ample_general";
  DivisorClass l = normalize(l_in);
  if (l.degree <= 0) return not_applicable(P, ID, cmp_record("pre: d > 0", l.degree, ">", 0));
  // Zero multiplicities impose nothing: the class is pulled back from the
  // blow-up at its support, so the hypotheses run on the support only.
  std::vector<Int> m;
  for (const Int& x : l.mults)
    if (x != 0) m.push_back(x);
  if (!m.empty() && m.back() < 0)
    return not_applicable(P, ID,
                          cmp_record("pre: every m_i > 0 on the support", m.back(), ">", 0));
  std::vector<HypothesisRecord> hs;
  append_family_records(hs, l.degree, m, 2, kAmpleLabels);
  return from_records(P, ID, std::move(hs));
}

Verdict ample_r9(const DivisorClass& l_in) {
  const Property P = Property::Ample;
  const std::string ID = "ample_r9";
  DivisorClass l = normalize(l_in);
  std::size_t r = l.r();
  if (r < 9) return not_applicable(P, ID, cmp_record("pre: r >= 9", Int(r), ">=", 9));
  if (l.mults.back() <= 0)
    return not_applicable(P, ID, cmp_record("pre: every m_i > 0", l.mults.back(), ">", 0));
  std::vector<HypothesisRecord> hs;
  append_family_records(hs, l.degree, l.mults, 9, kAmpleLabels);
  // Sporadic exceptional curves not already covered by (1)-(3), in their
  // worst alignment against the sorted multiplicities.
  const struct {
    const char* tag;
    int e;
    int n[8];
  } sporadic[] = {
      {"(5a) L.C > 0 for C = 4; 2 2 2 1 1 1 1 1", 4, {2, 2, 2, 1, 1, 1, 1, 1}},
      {"(5b) L.C > 0 for C = 5; 2 2 2 2 2 2 1 1", 5, {2, 2, 2, 2, 2, 2, 1, 1}},
      {"(5c) L.C > 0 for C = 6; 3 2 2 2 2 2 2 2", 6, {3, 2, 2, 2, 2, 2, 2, 2}},
  };
  for (const auto& sp : sporadic) {
    DivisorClass c(sp.e, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < 8; ++i) c.mults[i] = sp.n[i];
    hs.push_back(cmp_record(sp.tag, intersect(l, c), ">", 0));
  }
  return from_records(P, ID, std::move(hs));
}

Verdict ample_uniform_lambda(const UniformBundle& u) {
  const Property P = Property::Ample;
  const std::string ID = "ample_uniform_lambda";
  if (auto pre = uniform_pre(u, 2, 1)) return not_applicable(P, ID, std::move(*pre));
  std::vector<HypothesisRecord> hs;
  if (u.r == 2 || u.r == 3)
    hs.push_back(cmp_record("(1) d > 2m", u.d, ">", 2 * u.m));
  else if (u.r == 5)
    hs.push_back(cmp_record("(1) 2d > 5m", 2 * u.d, ">", 5 * u.m));
  else
    hs.push_back(cmp_record("(1) (r+2) d^2 > r(r+3) m^2", Int(u.r + 2) * u.d * u.d, ">",
                            Int(u.r) * Int(u.r + 3) * u.m * u.m));
  return from_records(P, ID, std::move(hs));
}

Verdict ample_uniform(const UniformBundle& u) {
  const Property P = Property::Ample;
  const std::string ID = "ample_uniform";
  if (auto pre = uniform_pre(u, 1, 1)) return not_applicable(P, ID, std::move(*pre));
  std::vector<HypothesisRecord> hs;
  std::vector<DivisorClass> witnesses;
  if (u.r <= 8) {
    // The finite exceptional list replaces the 95/32 threshold: positivity
    // against the tightest class (largest sum(n)/e) implies it for all.
    const DivisorClass* worst = nullptr;
    Int worst_sum = 0;
    for (const DivisorClass& p : weyl::cached_exceptional_patterns(u.r)) {
      if (p.degree <= 0) continue;
      Int s = 0;
      for (const Int& ni : p.mults) s += ni;
      if (!worst || s * worst->degree > worst_sum * p.degree) {
        worst = &p;
        worst_sum = s;
      }
    }
    if (worst) {
      auto rec = cmp_record(
          "(1) d e > m (n1 + ... + nr) for every exceptional class e; n1 ... nr, tightest " +
              to_string(*worst),
          u.d * worst->degree, ">", u.m * worst_sum);
      if (!rec.pass) witnesses.push_back(*worst);
      hs.push_back(std::move(rec));
    }
  } else {
    hs.push_back(cmp_record("(1) 32 d > 95 m", 32 * u.d, ">", 95 * u.m));
  }
  hs.push_back(cmp_record("(2) (3r+39) d^2 >= r(3r+40) m^2", Int(3 * u.r + 39) * u.d * u.d, ">=",
                          Int(u.r) * Int(3 * u.r + 40) * u.m * u.m));
  return from_records(P, ID, std::move(hs), std::move(witnesses));
}

Verdict ample_nagata_conditional(const UniformBundle& u) {
  const Property P = Property::Ample;
  const std::string ID = "ample_nagata";
  if (auto pre = uniform_pre(u, 9, 1)) return not_applicable(P, ID, std::move(*pre));
  auto main = cmp_record("(1) d^2 > r m^2", u.d * u.d, ">", Int(u.r) * u.m * u.m);
  Verdict v;
  v.property = P;
  v.criterion_id = ID;
  if (main.pass) {
    v.outcome = Outcome::Conditional;
    v.conjecture = "nagata";
    v.hypotheses.push_back(std::move(main));
    // The conjecture itself is undischarged, so the certificate never
    // upgrades to Certified.
    v.hypotheses.push_back(
        HypothesisRecord{"Nagata Conjecture for r >= 9 general points", 0, 0, "assumed", false});
  } else {
    v.outcome = Outcome::NotCertified;
    v.hypotheses.push_back(std::move(main));
  }
  return v;
}

Verdict ample_by_nef_decomposition(const DivisorClass& l, const DivisorClass& f) {
  const Property P = Property::Ample;
  const std::string ID = "ample_nef_decomposition";
  if (l.r() != f.r())
    return not_applicable(
        P, ID, cmp_record("pre: L and F on the same blow-up (r equal)", Int(l.r()), "==", Int(f.r())));
  Int min_mult = l.mults.empty() ? Int(0) : l.mults[0];
  for (const Int& m : l.mults) min_mult = std::min(min_mult, m);
  if (min_mult <= 0)
    return not_applicable(P, ID,
                          cmp_record("pre: every multiplicity of L positive", min_mult, ">", 0));

  // L - k F = a H forces k on any index with nonzero F multiplicity.
  Int kmax = l.degree < 1 ? Int(1) : l.degree;
  std::optional<Int> k;
  for (std::size_t i = 0; i < f.mults.size() && !k; ++i) {
    if (f.mults[i] == 0) continue;
    Int q = l.mults[i] / f.mults[i];
    if (q * f.mults[i] == l.mults[i]) k = q;
    break;
  }
  bool found = false;
  Int a = 0;
  if (k && *k >= 1 && *k <= kmax) {
    found = true;
    for (std::size_t i = 0; i < l.mults.size(); ++i)
      if (l.mults[i] != *k * f.mults[i]) {
        found = false;
        break;
      }
    if (found) a = l.degree - *k * f.degree;
  }

  std::vector<HypothesisRecord> hs;
  std::vector<DivisorClass> witnesses;
  std::string label1 = "(1) L - k F = a H for some k in 1..max(1, deg L)";
  if (found) label1 += ", k = " + k->get_str();
  hs.push_back(cmp_record(std::move(label1), found ? 1 : 0, ">=", 1));
  if (found) {
    hs.push_back(cmp_record("(2) a >= 1", a, ">=", 1));
    weyl::NefStatus nef = weyl::certify_nef(f);
    HypothesisRecord nefrec{"(3) F is nef", 0, 0, "nef",
                            nef.outcome == weyl::NefOutcome::Nef};
    if (nef.outcome == weyl::NefOutcome::NotNef && nef.witness) {
      nefrec.lhs = intersect(f, *nef.witness);
      witnesses.push_back(*nef.witness);
    }
    hs.push_back(std::move(nefrec));
    if (all_pass(hs)) {
      witnesses.push_back(f);
      witnesses.push_back(DivisorClass(a, std::vector<Int>(l.r(), 0)));
    }
  }
  return from_records(P, ID, std::move(hs), std::move(witnesses));
}

Verdict gg_general(const DivisorClass& l_in, bool permissive) {
  const Property P = Property::GloballyGenerated;
  const std::string ID = permissive ? "gg_general_permissive" : "gg_general";
  DivisorClass l = normalize(l_in);
  std::size_t r = l.r();
  if (r < 5) return not_applicable(P, ID, cmp_record("pre: r >= 5", Int(r), ">=", 5));
  const Int& least = l.mults.back();
  if (!permissive && least < 2)
    return not_applicable(
        P, ID, cmp_record("pre: every m_i >= 2 (permissive mode admits 0/1)", least, ">=", 2));
  if (permissive && least < 0)
    return not_applicable(P, ID, cmp_record("pre: every m_i >= 0", least, ">=", 0));
  DivisorClass n = adjoint_twist(l);
  std::vector<HypothesisRecord> hs;
  append_family_records(hs, n.degree, n.mults, 2, kGgLabels);
  // With m_i >= 2 and r >= 5 the adjoint square (d+3)^2 - sum (m_i+1)^2 >= 5
  // follows from (4); once small multiplicities are admitted it must be
  // checked, since the base-point-freeness argument consumes it.
  if (permissive)
    hs.push_back(cmp_record("(5) (d+3)^2 - sum (m_i+1)^2 >= 5", intersect(n, n), ">=", 5));
  return from_records(P, ID, std::move(hs));
}

Verdict gg_uniform(const UniformBundle& u) {
  const Property P = Property::GloballyGenerated;
  const std::string ID = "gg_uniform";
  if (auto pre = uniform_pre(u, 2, 6)) return not_applicable(P, ID, std::move(*pre));
  std::vector<HypothesisRecord> hs;
  hs.push_back(cmp_record("(1) 32 d >= 95 m", 32 * u.d, ">=", 95 * u.m));
  Int d3 = u.d + 3, m1 = u.m + 1;
  hs.push_back(cmp_record("(2) (3r+4)(d+3)^2 >= r(3r+5)(m+1)^2", Int(3 * u.r + 4) * d3 * d3, ">=",
                          Int(u.r) * Int(3 * u.r + 5) * m1 * m1));
  return from_records(P, ID, std::move(hs));
}

Verdict va_uniform(const UniformBundle& u) {
  const Property P = Property::VeryAmple;
  const std::string ID = "va_uniform";
  if (auto pre = uniform_pre(u, 3, 4)) return not_applicable(P, ID, std::move(*pre));
  std::vector<HypothesisRecord> hs;
  hs.push_back(cmp_record("(1) d >= 3 m", u.d, ">=", 3 * u.m));
  Int d3 = u.d + 3, m1 = u.m + 1;
  hs.push_back(cmp_record("(2) (r+2)(d+3)^2 >= r(r+3)(m+1)^2", Int(u.r + 2) * d3 * d3, ">=",
                          Int(u.r) * Int(u.r + 3) * m1 * m1));
  return from_records(P, ID, std::move(hs));
}

Verdict st_criterion(Property property, const UniformBundle& u) {
  const std::string ID = property == Property::Ample ? "st_ample" : "st_gg";
  if (property == Property::VeryAmple)
    return not_applicable(property, "st_va",
                          cmp_record("pre: property is ample or globally generated", 0, ">", 0));
  if (auto pre = uniform_pre(u, 1, 2)) return not_applicable(property, ID, std::move(*pre));
  std::vector<HypothesisRecord> hs;
  hs.push_back(cmp_record("(1) d >= 3m + 1", u.d, ">=", 3 * u.m + 1));
  if (property == Property::Ample) {
    hs.push_back(
        cmp_record("(2) d^2 >= (r+1) m^2", u.d * u.d, ">=", Int(u.r + 1) * u.m * u.m));
  } else {
    Int d3 = u.d + 3, m1 = u.m + 1;
    hs.push_back(
        cmp_record("(2) (d+3)^2 >= (r+1)(m+1)^2", d3 * d3, ">=", Int(u.r + 1) * m1 * m1));
  }
  return from_records(property, ID, std::move(hs));
}

std::vector<std::pair<DivisorClass, Int>> necessary_obstructions(const DivisorClass& l,
                                                                 const Int& cap) {
  std::vector<std::pair<DivisorClass, Int>> out;
  Int self = intersect(l, l);
  if (self <= 0) out.emplace_back(l, self);
  DivisorClass n = normalize(l);
  // Patterns against the sorted class give the worst point-alignment, so a
  // non-positive value here means some labelling of the class meets the
  // curve non-positively.
  for (const DivisorClass& p : weyl::cached_exceptional_patterns(l.r(), cap)) {
    Int v = intersect(n, p);
    if (v <= 0) out.emplace_back(p, v);
  }
  return out;
}

std::string criterion_name(CriterionId id) {
  switch (id) {
    case CriterionId::AmpleGeneral: return "ample_general";
    case CriterionId::AmpleR9: return "ample_r9";
    case CriterionId::AmpleUniform: return "ample_uniform";
    case CriterionId::AmpleUniformLambda: return "ample_uniform_lambda";
    case CriterionId::AmpleNagata: return "ample_nagata";
    case CriterionId::GgGeneral: return "gg_general";
    case CriterionId::GgGeneralPermissive: return "gg_general_permissive";
    case CriterionId::GgUniform: return "gg_uniform";
    case CriterionId::VaUniform: return "va_uniform";
    case CriterionId::StAmple: return "st_ample";
    case CriterionId::StGg: return "st_gg";
  }
  throw std::logic_error("criterion_name: bad id");
}

std::optional<CriterionId> criterion_from_name(const std::string& name) {
  static const CriterionId all[] = {
      CriterionId::AmpleGeneral,  CriterionId::AmpleR9,       CriterionId::AmpleUniform,
      CriterionId::AmpleUniformLambda, CriterionId::AmpleNagata, CriterionId::GgGeneral,
      CriterionId::GgGeneralPermissive, CriterionId::GgUniform, CriterionId::VaUniform,
      CriterionId::StAmple,       CriterionId::StGg,
  };
  for (CriterionId id : all)
    if (criterion_name(id) == name) return id;
  return std::nullopt;
}

bool criterion_is_uniform(CriterionId id) {
  switch (id) {
    case CriterionId::AmpleUniform:
    case CriterionId::AmpleUniformLambda:
    case CriterionId::AmpleNagata:
    case CriterionId::GgUniform:
    case CriterionId::VaUniform:
    case CriterionId::StAmple:
    case CriterionId::StGg:
      return true;
    default:
      return false;
  }
}

namespace {

bool accepted(CriterionId id, const Verdict& v) {
  if (id == CriterionId::AmpleNagata) return v.outcome == Outcome::Conditional;
  return v.outcome == Outcome::Certified;
}

// Monotone front: probe 1, 2, 4, ... then bisect the first accepting block.
template <typename Eval>
std::optional<Int> search_min_degree(const Int& limit, Eval&& eval) {
  Int hi = 1;
  while (hi <= limit && !eval(hi)) hi *= 2;
  if (hi > limit) return std::nullopt;
  if (hi == 1) return hi;
  Int lo = hi / 2 + 1;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (eval(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

}  // namespace

std::optional<Int> min_degree(CriterionId id, const std::vector<Int>& mults) {
  if (criterion_is_uniform(id))
    throw std::invalid_argument("min_degree: " + criterion_name(id) + " takes uniform data");
  Int span = 0;
  for (const Int& m : mults) span += abs(m);
  Int limit = 4 * span + 1024;
  return search_min_degree(limit, [&](const Int& d) {
    DivisorClass l(d, mults);
    switch (id) {
      case CriterionId::AmpleGeneral: return accepted(id, ample_general(l));
      case CriterionId::AmpleR9: return accepted(id, ample_r9(l));
      case CriterionId::GgGeneral: return accepted(id, gg_general(l, false));
      case CriterionId::GgGeneralPermissive: return accepted(id, gg_general(l, true));
      default: throw std::logic_error("min_degree: unhandled criterion");
    }
  });
}

std::optional<Int> min_degree_uniform(CriterionId id, std::size_t r, const Int& m) {
  if (!criterion_is_uniform(id))
    throw std::invalid_argument("min_degree: " + criterion_name(id) + " takes multiplicities");
  Int limit = (Int(r) + 4) * (abs(m) + 4) + 1024;
  return search_min_degree(limit, [&](const Int& d) {
    UniformBundle u{d, m, r};
    switch (id) {
      case CriterionId::AmpleUniform: return accepted(id, ample_uniform(u));
      case CriterionId::AmpleUniformLambda: return accepted(id, ample_uniform_lambda(u));
      case CriterionId::AmpleNagata: return accepted(id, ample_nagata_conditional(u));
      case CriterionId::GgUniform: return accepted(id, gg_uniform(u));
      case CriterionId::VaUniform: return accepted(id, va_uniform(u));
      case CriterionId::StAmple: return accepted(id, st_criterion(Property::Ample, u));
      case CriterionId::StGg: return accepted(id, st_criterion(Property::GloballyGenerated, u));
      default: throw std::logic_error("min_degree: unhandled criterion");
    }
  });
}

}  // namespace blowup::criteria
