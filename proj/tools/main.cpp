#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blowup/criteria.hpp"
#include "blowup/divisor_class.hpp"
#include "blowup/interpolation.hpp"
#include "blowup/json_out.hpp"
#include "blowup/weyl.hpp"
#include "repro.hpp"

namespace {

using blowup::DivisorClass;
using blowup::Int;
using json = nlohmann::ordered_json;
namespace criteria = blowup::criteria;
namespace weyl = blowup::weyl;
namespace interp = blowup::interpolation;
namespace bj = blowup::json;

constexpr int kExitCertified = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitConditional = 2;
constexpr int kExitInvalid = 3;

int exit_code_for(criteria::Outcome o) {
  switch (o) {
    case criteria::Outcome::Certified: return kExitCertified;
    case criteria::Outcome::Conditional: return kExitConditional;
    case criteria::Outcome::NotCertified:
    case criteria::Outcome::NotApplicable: return kExitNotCertified;
  }
  return kExitInvalid;
}

struct UniformArgs {
  std::optional<Int> d;
  std::optional<Int> m;
  std::optional<std::size_t> r;
};

// Accepts "d=170", "r=8", "m=60" tokens in any order.
UniformArgs parse_uniform_tokens(const std::vector<std::string>& tokens, bool need_d) {
  UniformArgs out;
  for (const std::string& t : tokens) {
    auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == t.size())
      throw std::invalid_argument("--uniform expects key=value tokens, got '" + t + "'");
    const std::string key = t.substr(0, eq);
    const std::string val = t.substr(eq + 1);
    if (key == "d")
      out.d = Int(val);
    else if (key == "m")
      out.m = Int(val);
    else if (key == "r") {
      long r = std::stol(val);
      if (r < 1) throw std::invalid_argument("--uniform r must be >= 1");
      out.r = static_cast<std::size_t>(r);
    } else {
      throw std::invalid_argument("--uniform keys are d, r, m; got '" + key + "'");
    }
  }
  if (!out.r || !out.m || (need_d && !out.d))
    throw std::invalid_argument(need_d ? "--uniform needs d=, r=, m="
                                       : "--uniform needs r= and m=");
  return out;
}

criteria::Property parse_property(const std::string& s) {
  if (s == "ample") return criteria::Property::Ample;
  if (s == "gg" || s == "globally-generated") return criteria::Property::GloballyGenerated;
  if (s == "va" || s == "very-ample") return criteria::Property::VeryAmple;
  throw std::invalid_argument("property must be ample, gg or va");
}

void print_verdict_human(const criteria::Verdict& v) {
  std::cout << "property:  " << bj::property_name(v.property) << "\n";
  std::cout << "outcome:   " << bj::outcome_name(v.outcome) << " (criterion " << v.criterion_id
            << ")\n";
  if (!v.conjecture.empty()) std::cout << "conjecture: " << v.conjecture << "\n";
  for (const auto& h : v.hypotheses) {
    const char* mark = h.pass ? "  [ ok ] " : "  [FAIL] ";
    if (h.relation == "assumed" || h.relation == "nef")
      std::cout << mark << h.label << "\n";
    else
      std::cout << mark << h.label << ": " << h.lhs.get_str() << " " << h.relation << " "
                << h.rhs.get_str() << "\n";
  }
  for (const auto& w : v.witnesses) std::cout << "  witness: " << blowup::to_string(w) << "\n";
}

// A verdict that explains more ranks higher: any NotCertified beats
// NotApplicable, then more passing hypotheses win.
std::size_t verdict_score(const criteria::Verdict& v) {
  std::size_t score = v.outcome == criteria::Outcome::NotCertified ? 1000 : 0;
  for (const auto& h : v.hypotheses)
    if (h.pass) ++score;
  return score;
}

struct CheckPlan {
  std::vector<criteria::Verdict> attempts;
  criteria::Verdict final;
};

CheckPlan dispatch_check(criteria::Property prop, const std::optional<DivisorClass>& cls,
                         const std::optional<criteria::UniformBundle>& uni,
                         const std::optional<criteria::CriterionId>& only, bool permissive,
                         bool conditional) {
  std::vector<criteria::Verdict> attempts;
  auto run_one = [&](criteria::CriterionId id) -> criteria::Verdict {
    if (criteria::criterion_is_uniform(id)) {
      std::optional<criteria::UniformBundle> u = uni;
      if (!u) {
        // a constant multiplicity vector carries the same data
        bool constant = !cls->mults.empty();
        for (const Int& m : cls->mults) constant = constant && m == cls->mults.front();
        if (!constant)
          throw std::invalid_argument(criteria::criterion_name(id) +
                                      " needs uniform input (--uniform d= r= m=)");
        u = criteria::UniformBundle{cls->degree, cls->mults.front(), cls->r()};
      }
      switch (id) {
        case criteria::CriterionId::AmpleUniform: return criteria::ample_uniform(*u);
        case criteria::CriterionId::AmpleUniformLambda: return criteria::ample_uniform_lambda(*u);
        case criteria::CriterionId::AmpleNagata: return criteria::ample_nagata_conditional(*u);
        case criteria::CriterionId::GgUniform: return criteria::gg_uniform(*u);
        case criteria::CriterionId::VaUniform: return criteria::va_uniform(*u);
        case criteria::CriterionId::StAmple:
          return criteria::st_criterion(criteria::Property::Ample, *u);
        case criteria::CriterionId::StGg:
          return criteria::st_criterion(criteria::Property::GloballyGenerated, *u);
        default: break;
      }
      throw std::logic_error("unhandled uniform criterion");
    }
    DivisorClass l = cls ? *cls : uni->to_class();
    switch (id) {
      case criteria::CriterionId::AmpleGeneral: return criteria::ample_general(l);
      case criteria::CriterionId::AmpleR9: return criteria::ample_r9(l);
      case criteria::CriterionId::GgGeneral: return criteria::gg_general(l, false);
      case criteria::CriterionId::GgGeneralPermissive: return criteria::gg_general(l, true);
      default: break;
    }
    throw std::logic_error("unhandled criterion");
  };

  if (only) {
    attempts.push_back(run_one(*only));
    return CheckPlan{attempts, attempts.back()};
  }

  std::vector<criteria::CriterionId> chain;
  switch (prop) {
    case criteria::Property::Ample:
      if (uni) {
        chain = {criteria::CriterionId::AmpleUniform, criteria::CriterionId::AmpleUniformLambda,
                 criteria::CriterionId::AmpleGeneral};
      } else {
        chain = {criteria::CriterionId::AmpleGeneral, criteria::CriterionId::AmpleR9};
      }
      break;
    case criteria::Property::GloballyGenerated:
      if (uni) chain.push_back(criteria::CriterionId::GgUniform);
      chain.push_back(permissive ? criteria::CriterionId::GgGeneralPermissive
                                 : criteria::CriterionId::GgGeneral);
      break;
    case criteria::Property::VeryAmple:
      chain = {criteria::CriterionId::VaUniform};
      break;
  }

  for (criteria::CriterionId id : chain) {
    attempts.push_back(run_one(id));
    if (attempts.back().outcome == criteria::Outcome::Certified)
      return CheckPlan{attempts, attempts.back()};
  }
  // Nothing certified; the conjecture-backed fallback may still speak.
  if (conditional && prop == criteria::Property::Ample && uni && uni->r >= 9) {
    attempts.push_back(run_one(criteria::CriterionId::AmpleNagata));
    if (attempts.back().outcome == criteria::Outcome::Conditional)
      return CheckPlan{attempts, attempts.back()};
  }
  const criteria::Verdict* best = &attempts.front();
  for (const auto& a : attempts)
    if (verdict_score(a) > verdict_score(*best)) best = &a;
  return CheckPlan{attempts, *best};
}

void emit(const json& doc, bool as_json) {
  if (as_json) std::cout << doc.dump(2) << "\n";
}

int cmd_check(const std::string& property, const std::string& class_text,
              const std::vector<std::string>& uniform_tokens, const std::string& only_name,
              bool permissive, bool conditional, const Int& cap, bool as_json) {
  criteria::Property prop = parse_property(property);
  std::optional<DivisorClass> cls;
  std::optional<criteria::UniformBundle> uni;
  if (!class_text.empty() && !uniform_tokens.empty())
    throw std::invalid_argument("give either a class string or --uniform, not both");
  if (class_text.empty() && uniform_tokens.empty())
    throw std::invalid_argument("give a class string \"d; n1 ... nr\" or --uniform d= r= m=");
  if (!class_text.empty()) cls = blowup::parse_class(class_text);
  if (!uniform_tokens.empty()) {
    UniformArgs ua = parse_uniform_tokens(uniform_tokens, true);
    uni = criteria::UniformBundle{*ua.d, *ua.m, *ua.r};
  }

  std::optional<criteria::CriterionId> only;
  if (!only_name.empty()) {
    only = criteria::criterion_from_name(only_name);
    if (!only) throw std::invalid_argument("unknown criterion id '" + only_name + "'");
  }

  CheckPlan plan = dispatch_check(prop, cls, uni, only, permissive, conditional);

  std::vector<std::pair<DivisorClass, Int>> obstructions;
  if (prop == criteria::Property::Ample &&
      plan.final.outcome == criteria::Outcome::NotCertified) {
    DivisorClass l = cls ? *cls : uni->to_class();
    obstructions = criteria::necessary_obstructions(l, cap);
  }

  if (as_json) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "check";
    doc["property"] = bj::property_name(prop);
    if (cls) doc["input"] = json{{"class", bj::to_json(*cls)}};
    if (uni)
      doc["input"] = json{{"uniform", json{{"d", uni->d.get_str()},
                                           {"r", uni->r},
                                           {"m", uni->m.get_str()}}}};
    doc["verdict"] = bj::to_json(plan.final);
    json att = json::array();
    for (const auto& a : plan.attempts) att.push_back(bj::to_json(a));
    doc["attempts"] = std::move(att);
    if (!obstructions.empty()) doc["obstructions"] = bj::obstructions_json(obstructions);
    doc["exit_code"] = exit_code_for(plan.final.outcome);
    emit(doc, true);
  } else {
    print_verdict_human(plan.final);
    if (!obstructions.empty()) {
      std::cout << "obstructions:\n";
      for (const auto& [c, v] : obstructions)
        std::cout << "  " << blowup::to_string(c) << "  (value " << v.get_str() << ")\n";
    }
  }
  return exit_code_for(plan.final.outcome);
}

int cmd_reduce(const std::string& class_text, bool as_json) {
  DivisorClass l = blowup::parse_class(class_text);
  weyl::ReductionTrace trace = weyl::reduce_to_fundamental(l);
  if (as_json) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "reduce";
    doc["trace"] = bj::to_json(trace);
    emit(doc, true);
  } else {
    std::size_t cremonas = 0;
    for (int s : trace.steps)
      if (s == 0) ++cremonas;
    std::cout << "start:    " << blowup::to_string(trace.start) << "\n";
    std::cout << "end:      " << blowup::to_string(trace.end) << "\n";
    std::cout << "steps:    " << trace.steps.size() << " (" << cremonas << " cremona, "
              << trace.steps.size() - cremonas << " swaps)\n";
    std::cout << "terminal: "
              << (trace.terminal == weyl::Terminal::Fundamental ? "fundamental" : "non-effective")
              << "\n";
  }
  return 0;
}

int cmd_exceptional(const std::string& class_text, const std::string& enumerate_arg,
                    const Int& cap, bool as_json) {
  if (!enumerate_arg.empty()) {
    std::string spec = enumerate_arg;
    if (spec.rfind("r=", 0) == 0) spec = spec.substr(2);
    long r = std::stol(spec);
    if (r < 1) throw std::invalid_argument("--enumerate needs r >= 1");
    std::vector<DivisorClass> all =
        weyl::enumerate_exceptional_classes(static_cast<std::size_t>(r), cap);
    if (as_json) {
      json doc;
      doc["schema"] = 1;
      doc["command"] = "exceptional";
      doc["r"] = r;
      if (r >= 9) doc["max_degree"] = cap.get_str();
      doc["count"] = all.size();
      json arr = json::array();
      for (const auto& c : all) arr.push_back(blowup::to_string(c));
      doc["classes"] = std::move(arr);
      emit(doc, true);
    } else {
      for (const auto& c : all) std::cout << blowup::to_string(c) << "\n";
      std::cout << "count: " << all.size() << "\n";
    }
    return 0;
  }
  if (class_text.empty())
    throw std::invalid_argument("give a class string or --enumerate r=N");
  DivisorClass l = blowup::parse_class(class_text);
  bool is_exc = weyl::is_exceptional_class(l);
  blowup::NumericalProfile prof = blowup::profile(l);
  if (as_json) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "exceptional";
    doc["class"] = bj::to_json(l);
    doc["is_exceptional"] = is_exc;
    doc["profile"] = bj::to_json(prof);
    emit(doc, true);
  } else {
    std::cout << blowup::to_string(l) << (is_exc ? " is" : " is not")
              << " an exceptional curve class (self-intersection "
              << prof.self_intersection.get_str() << ", K-degree " << prof.k_degree.get_str()
              << ")\n";
  }
  return 0;
}

int cmd_mindeg(const std::string& property, const std::string& mults_text,
               const std::vector<std::string>& uniform_tokens, const std::string& only_name,
               bool permissive, bool conditional, bool as_json) {
  criteria::Property prop = parse_property(property);
  if (mults_text.empty() == uniform_tokens.empty())
    throw std::invalid_argument("give exactly one of --mults or --uniform r= m=");

  std::vector<criteria::CriterionId> ids;
  if (!only_name.empty()) {
    auto id = criteria::criterion_from_name(only_name);
    if (!id) throw std::invalid_argument("unknown criterion id '" + only_name + "'");
    ids = {*id};
  } else if (!mults_text.empty()) {
    switch (prop) {
      case criteria::Property::Ample:
        ids = {criteria::CriterionId::AmpleGeneral, criteria::CriterionId::AmpleR9};
        break;
      case criteria::Property::GloballyGenerated:
        ids = {permissive ? criteria::CriterionId::GgGeneralPermissive
                          : criteria::CriterionId::GgGeneral};
        break;
      case criteria::Property::VeryAmple:
        throw std::invalid_argument("no general very-ample certifier; use --uniform");
    }
  } else {
    switch (prop) {
      case criteria::Property::Ample:
        ids = {criteria::CriterionId::AmpleUniform, criteria::CriterionId::AmpleUniformLambda};
        if (conditional) ids.push_back(criteria::CriterionId::AmpleNagata);
        break;
      case criteria::Property::GloballyGenerated:
        ids = {criteria::CriterionId::GgUniform};
        break;
      case criteria::Property::VeryAmple:
        ids = {criteria::CriterionId::VaUniform};
        break;
    }
  }

  std::vector<Int> mults;
  UniformArgs ua;
  if (!mults_text.empty()) {
    // reuse the class parser on a degree-0 header
    DivisorClass parsed = blowup::parse_class("0; " + mults_text);
    mults = parsed.mults;
  } else {
    ua = parse_uniform_tokens(uniform_tokens, false);
  }

  std::optional<Int> overall;
  json per = json::array();
  for (criteria::CriterionId id : ids) {
    std::optional<Int> md;
    bool uniform_id = criteria::criterion_is_uniform(id);
    if (uniform_id && mults_text.empty()) {
      md = criteria::min_degree_uniform(id, *ua.r, *ua.m);
    } else if (!uniform_id && !mults_text.empty()) {
      md = criteria::min_degree(id, mults);
    } else if (uniform_id && !mults_text.empty()) {
      bool constant = !mults.empty();
      for (const Int& m : mults) constant = constant && m == mults.front();
      if (!constant) continue;  // not expressible for this certifier
      md = criteria::min_degree_uniform(id, mults.size(), mults.front());
    } else {
      md = criteria::min_degree(id, std::vector<Int>(*ua.r, *ua.m));
    }
    json entry;
    entry["criterion"] = criteria::criterion_name(id);
    entry["min_degree"] = md ? json(md->get_str()) : json(nullptr);
    per.push_back(std::move(entry));
    if (md && (!overall || *md < *overall)) overall = md;
  }

  if (as_json) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "mindeg";
    doc["property"] = bj::property_name(prop);
    if (!mults_text.empty()) {
      json arr = json::array();
      for (const Int& m : mults) arr.push_back(m.get_str());
      doc["mults"] = std::move(arr);
    } else {
      doc["uniform"] = json{{"r", *ua.r}, {"m", ua.m->get_str()}};
    }
    doc["criteria"] = std::move(per);
    doc["min_degree"] = overall ? json(overall->get_str()) : json(nullptr);
    emit(doc, true);
  } else {
    for (const auto& e : per)
      std::cout << e["criterion"].get<std::string>() << ": "
                << (e["min_degree"].is_null() ? std::string("never applies")
                                              : e["min_degree"].get<std::string>())
                << "\n";
    std::cout << "min degree: " << (overall ? overall->get_str() : std::string("none")) << "\n";
  }
  return 0;
}

int cmd_dim(const std::string& class_text, std::uint64_t prime, std::uint64_t seed, int trials) {
  DivisorClass l = blowup::parse_class(class_text);
  interp::Options opt;
  opt.prime = prime;
  opt.seed = seed;
  opt.trials = trials;
  interp::SystemDimensionReport rep = interp::actual_dimension(l, opt);
  json doc;
  doc["schema"] = 1;
  doc["command"] = "dim";
  doc["report"] = bj::to_json(rep);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BLOWUP_POSITIVITY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("BLOWUP_POSITIVITY_SEED must be an unsigned integer");
    }
  }
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positivity certificates for line bundles on blow-ups of the plane"};
  app.require_subcommand(1);

  // check
  std::string chk_property, chk_class, chk_only;
  std::vector<std::string> chk_uniform;
  bool chk_permissive = false, chk_conditional = false, chk_json = false;
  std::string chk_cap = "32";
  CLI::App* chk = app.add_subcommand("check", "Certify a positivity property");
  chk->add_option("property", chk_property, "ample | gg | va")->required();
  chk->add_option("class", chk_class, "class string \"d; n1 n2 ... nr\"");
  chk->add_option("--uniform", chk_uniform, "uniform bundle as d=D r=R m=M")->expected(3);
  chk->add_option("--only", chk_only, "run exactly one criterion id");
  chk->add_flag("--permissive", chk_permissive, "admit multiplicities 0 and 1 in gg checks");
  chk->add_flag("--conditional", chk_conditional, "allow conjecture-backed fallback");
  chk->add_option("--cap", chk_cap, "max degree for exceptional enumeration at r >= 9");
  chk->add_flag("--json", chk_json, "emit JSON");

  // repro
  std::string rep_only, rep_dir;
  bool rep_update = false, rep_list = false;
  CLI::App* rep = app.add_subcommand("repro", "Re-derive worked examples and diff against goldens");
  rep->add_option("--only", rep_only, "run a single case id");
  rep->add_option("--golden-dir", rep_dir, "directory holding golden JSON files");
  rep->add_flag("--update", rep_update, "rewrite golden files from current output");
  rep->add_flag("--list", rep_list, "list case ids and exit");

  // reduce
  std::string red_class;
  bool red_json = false;
  CLI::App* red = app.add_subcommand("reduce", "Reduce a class to the fundamental domain");
  red->add_option("class", red_class, "class string")->required();
  red->add_flag("--json", red_json, "emit JSON");

  // exceptional
  std::string exc_class, exc_enum;
  std::string exc_cap = "32";
  bool exc_json = false;
  CLI::App* exc = app.add_subcommand("exceptional", "Test or enumerate exceptional classes");
  exc->add_option("class", exc_class, "class string to test");
  exc->add_option("--enumerate", exc_enum, "enumerate for r points (r=N or N)");
  exc->add_option("--cap", exc_cap, "max degree for enumeration at r >= 9");
  exc->add_flag("--json", exc_json, "emit JSON");

  // mindeg
  std::string min_property, min_mults, min_only;
  std::vector<std::string> min_uniform;
  bool min_permissive = false, min_conditional = false, min_json = false;
  CLI::App* mnd = app.add_subcommand("mindeg", "Smallest certified degree for fixed multiplicities");
  mnd->add_option("property", min_property, "ample | gg | va")->required();
  mnd->add_option("--mults", min_mults, "multiplicities \"n1 n2 ... nr\"");
  mnd->add_option("--uniform", min_uniform, "uniform data as r=R m=M")->expected(2);
  mnd->add_option("--only", min_only, "use exactly one criterion id");
  mnd->add_flag("--permissive", min_permissive, "permissive gg mode");
  mnd->add_flag("--conditional", min_conditional, "include conjecture-backed criteria");
  mnd->add_flag("--json", min_json, "emit JSON");

  // dim
  std::string dim_class;
  std::uint64_t dim_prime = 2147483647;
  std::uint64_t dim_seed = 0;
  bool dim_seed_set = false;
  int dim_trials = 3;
  CLI::App* dim = app.add_subcommand("dim", "Finite-field dimension of the plane system");
  dim->add_option("class", dim_class, "class string")->required();
  dim->add_option("--prime", dim_prime, "odd prime modulus below 2^63");
  dim->add_option("--seed", dim_seed, "base RNG seed")->each([&](const std::string&) {
    dim_seed_set = true;
  });
  dim->add_option("--trials", dim_trials, "independent point samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (chk->parsed())
      return cmd_check(chk_property, chk_class, chk_uniform, chk_only, chk_permissive,
                       chk_conditional, Int(chk_cap), chk_json);
    if (rep->parsed()) {
      if (rep_list) {
        for (const auto& id : repro_case_ids()) std::cout << id << "\n";
        return 0;
      }
      return run_repro(rep_only, rep_dir, rep_update, false);
    }
    if (red->parsed()) return cmd_reduce(red_class, red_json);
    if (exc->parsed()) return cmd_exceptional(exc_class, exc_enum, Int(exc_cap), exc_json);
    if (mnd->parsed())
      return cmd_mindeg(min_property, min_mults, min_uniform, min_only, min_permissive,
                        min_conditional, min_json);
    if (dim->parsed())
      return cmd_dim(dim_class, dim_prime, dim_seed_set ? dim_seed : default_seed(), dim_trials);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
