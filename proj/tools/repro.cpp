#include "repro.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/criteria.hpp"
#include "blowup/divisor_class.hpp"
#include "blowup/json_out.hpp"
#include "blowup/weyl.hpp"

#ifndef BLOWUP_DEFAULT_GOLDEN_DIR
#define BLOWUP_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace {

using blowup::DivisorClass;
using blowup::Int;
using json = nlohmann::ordered_json;
namespace criteria = blowup::criteria;
namespace weyl = blowup::weyl;
namespace bj = blowup::json;

DivisorClass make_class(long d, const std::vector<long>& m) {
  std::vector<Int> mm(m.begin(), m.end());
  return DivisorClass(Int(d), std::move(mm));
}

DivisorClass uniform_class(long d, std::size_t r, long m) {
  return DivisorClass(Int(d), std::vector<Int>(r, Int(m)));
}

json header(const char* id) { return json{{"schema", 1}, {"id", id}}; }

std::string str(const Int& v) { return v.get_str(); }

std::string mindeg_str(criteria::CriterionId id, const std::vector<Int>& mults) {
  auto md = criteria::min_degree(id, mults);
  return md ? md->get_str() : "none";
}

std::string mindeg_uniform_str(criteria::CriterionId id, std::size_t r, long m) {
  auto md = criteria::min_degree_uniform(id, r, Int(m));
  return md ? md->get_str() : "none";
}

// Smallest degree certified for the multiplicity pattern 3, 2^7, 1^4,
// with the certificate at that degree and the rejection just below.
json case_example_2_5() {
  const std::vector<long> m{3, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1};
  json doc = header("example-2.5");
  doc["mults"] = m;
  doc["min_degree_ample_general"] =
      mindeg_str(criteria::CriterionId::AmpleGeneral, std::vector<Int>(m.begin(), m.end()));
  doc["certificate_at_7"] = bj::to_json(criteria::ample_general(make_class(7, m)));
  doc["rejection_at_6"] = bj::to_json(criteria::ample_general(make_class(6, m)));
  return doc;
}

// Same study for 3, 2^9, 1^2, where the quadratic family is the binding
// constraint and the smallest certified degree is 8.
json case_example_2_6() {
  const std::vector<long> m{3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1};
  json doc = header("example-2.6");
  doc["mults"] = m;
  doc["min_degree_ample_general"] =
      mindeg_str(criteria::CriterionId::AmpleGeneral, std::vector<Int>(m.begin(), m.end()));
  doc["certificate_at_8"] = bj::to_json(criteria::ample_general(make_class(8, m)));
  doc["rejection_at_7"] = bj::to_json(criteria::ample_general(make_class(7, m)));
  return doc;
}

// Tightness at five points: degree 25 with tenfold points meets the conic
// through the five points in zero, degree 26 is certified.
json case_example_2_10() {
  DivisorClass l25 = uniform_class(25, 5, 10);
  DivisorClass l26 = uniform_class(26, 5, 10);
  json doc = header("example-2.10");
  doc["certificate_26"] = bj::to_json(criteria::ample_general(l26));
  doc["rejection_25"] = bj::to_json(criteria::ample_general(l25));
  doc["self_intersection_25"] = str(intersect(l25, l25));
  doc["obstructions_25"] = bj::obstructions_json(criteria::necessary_obstructions(l25));
  return doc;
}

// Uniform bundles at eight points with m = 60: thresholds of the two
// uniform certifiers, and the pairings that pin the true threshold at 171.
json case_example_2_13() {
  const std::size_t r = 8;
  const long m = 60;
  auto u = [&](long d) { return criteria::UniformBundle{Int(d), Int(m), r}; };
  json doc = header("example-2.13");
  doc["lambda_min_degree"] = mindeg_uniform_str(criteria::CriterionId::AmpleUniformLambda, r, m);
  doc["lambda_178"] = bj::to_json(criteria::ample_uniform_lambda(u(178)));
  doc["lambda_177"] = bj::to_json(criteria::ample_uniform_lambda(u(177)));
  doc["uniform_min_degree"] = mindeg_uniform_str(criteria::CriterionId::AmpleUniform, r, m);
  doc["uniform_172"] = bj::to_json(criteria::ample_uniform(u(172)));
  doc["uniform_171"] = bj::to_json(criteria::ample_uniform(u(171)));
  DivisorClass l170 = uniform_class(170, 8, 60);
  DivisorClass sextic = make_class(6, {3, 2, 2, 2, 2, 2, 2, 2});
  DivisorClass f48 = uniform_class(48, 8, 17);
  doc["pairing_170_sextic"] = str(intersect(l170, sextic));
  doc["pairing_170_48_17"] = str(intersect(l170, f48));
  doc["obstructions_170"] = bj::obstructions_json(criteria::necessary_obstructions(l170));
  return doc;
}

// The nef-decomposition certificate 171 = 10 * 17 + 1 at eight points,
// the failure at 170 (a = 0), and the reduction of F to the hyperplane.
json case_example_2_14() {
  DivisorClass f = uniform_class(17, 8, 6);
  json doc = header("example-2.14");
  doc["certificate_171"] =
      bj::to_json(criteria::ample_by_nef_decomposition(uniform_class(171, 8, 60), f));
  doc["rejection_170"] =
      bj::to_json(criteria::ample_by_nef_decomposition(uniform_class(170, 8, 60), f));
  doc["nef_f"] = bj::to_json(weyl::certify_nef(f));
  doc["reduction_f"] = bj::to_json(weyl::reduce_to_fundamental(f));
  return doc;
}

// The uniform-ampleness table: three (d, r, m) rows certified exactly at
// d and rejected at d-1, against the baseline thresholds.
json case_example_2_18() {
  struct Row {
    long d;
    std::size_t r;
    long m;
  };
  const Row rows[] = {{32, 10, 10}, {96, 10, 30}, {55, 30, 10}};
  json doc = header("example-2.18");
  json table = json::array();
  for (const Row& row : rows) {
    json e;
    e["d"] = row.d;
    e["r"] = row.r;
    e["m"] = row.m;
    e["certificate"] =
        bj::to_json(criteria::ample_uniform(criteria::UniformBundle{Int(row.d), Int(row.m), row.r}));
    e["rejection_below"] = bj::to_json(
        criteria::ample_uniform(criteria::UniformBundle{Int(row.d - 1), Int(row.m), row.r}));
    e["min_degree_ample_uniform"] =
        mindeg_uniform_str(criteria::CriterionId::AmpleUniform, row.r, row.m);
    e["min_degree_st_ample"] = mindeg_uniform_str(criteria::CriterionId::StAmple, row.r, row.m);
    table.push_back(std::move(e));
  }
  doc["table"] = std::move(table);
  json nagata = json::array();
  const Row npts[] = {{32, 10, 10}, {95, 10, 30}, {55, 30, 10}};
  for (const Row& row : npts)
    nagata.push_back(bj::to_json(
        criteria::ample_nagata_conditional(criteria::UniformBundle{Int(row.d), Int(row.m), row.r})));
  doc["nagata_conditional"] = std::move(nagata);
  return doc;
}

json uniform_threshold_table(const char* id, criteria::CriterionId cid,
                             criteria::Verdict (*runner)(const criteria::UniformBundle&)) {
  struct Row {
    long d;
    std::size_t r;
    long m;
  };
  const Row rows[] = {{0, 10, 10}, {0, 10, 30}, {0, 30, 10}};
  json doc = header(id);
  json table = json::array();
  for (const Row& row : rows) {
    std::string md = mindeg_uniform_str(cid, row.r, row.m);
    long d = std::stol(md);
    json e;
    e["r"] = row.r;
    e["m"] = row.m;
    e["min_degree"] = md;
    e["certificate"] = bj::to_json(runner(criteria::UniformBundle{Int(d), Int(row.m), row.r}));
    e["rejection_below"] =
        bj::to_json(runner(criteria::UniformBundle{Int(d - 1), Int(row.m), row.r}));
    table.push_back(std::move(e));
  }
  doc["table"] = std::move(table);
  return doc;
}

json case_example_3_6() {
  return uniform_threshold_table("example-3.6", criteria::CriterionId::GgUniform,
                                 &criteria::gg_uniform);
}

json case_example_3_8() {
  return uniform_threshold_table("example-3.8", criteria::CriterionId::VaUniform,
                                 &criteria::va_uniform);
}

// Global generation for the two non-uniform families and the 25; 10^5
// class, all through the adjoint-twist certifier.
json case_section_3_gg() {
  const std::vector<long> m1{3, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1};
  const std::vector<long> m2{3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1};
  json doc = header("section-3-gg");
  doc["permissive_8_family_1"] = bj::to_json(criteria::gg_general(make_class(8, m1), true));
  doc["permissive_8_family_2"] = bj::to_json(criteria::gg_general(make_class(8, m2), true));
  doc["permissive_25_uniform_5"] = bj::to_json(criteria::gg_general(uniform_class(25, 5, 10), true));
  doc["strict_25_uniform_5"] = bj::to_json(criteria::gg_general(uniform_class(25, 5, 10), false));
  doc["min_degree_family_1"] = mindeg_str(criteria::CriterionId::GgGeneralPermissive,
                                          std::vector<Int>(m1.begin(), m1.end()));
  doc["min_degree_family_2"] = mindeg_str(criteria::CriterionId::GgGeneralPermissive,
                                          std::vector<Int>(m2.begin(), m2.end()));
  return doc;
}

struct Case {
  const char* id;
  json (*fn)();
};

const Case kCases[] = {
    {"example-2.5", case_example_2_5},   {"example-2.6", case_example_2_6},
    {"example-2.10", case_example_2_10}, {"example-2.13", case_example_2_13},
    {"example-2.14", case_example_2_14}, {"example-2.18", case_example_2_18},
    {"example-3.6", case_example_3_6},   {"example-3.8", case_example_3_8},
    {"section-3-gg", case_section_3_gg},
};

void print_first_diff(const std::string& expected, const std::string& actual) {
  std::istringstream e(expected), a(actual);
  std::string el, al;
  std::size_t line = 0;
  while (true) {
    ++line;
    bool eg = static_cast<bool>(std::getline(e, el));
    bool ag = static_cast<bool>(std::getline(a, al));
    if (!eg && !ag) return;
    if (el != al || eg != ag) {
      std::cout << "    first difference at line " << line << "\n";
      std::cout << "      golden: " << (eg ? el : std::string("<eof>")) << "\n";
      std::cout << "      actual: " << (ag ? al : std::string("<eof>")) << "\n";
      return;
    }
  }
}

}  // namespace

std::vector<std::string> repro_case_ids() {
  std::vector<std::string> ids;
  for (const Case& c : kCases) ids.emplace_back(c.id);
  return ids;
}

int run_repro(const std::string& only, const std::string& golden_dir, bool update, bool quiet) {
  const std::string dir = golden_dir.empty() ? BLOWUP_DEFAULT_GOLDEN_DIR : golden_dir;
  bool any_fail = false;
  bool any_missing = false;
  int ran = 0;
  for (const Case& c : kCases) {
    if (!only.empty() && only != c.id) continue;
    ++ran;
    const std::string text = c.fn().dump(2) + "\n";
    const std::string path = dir + "/" + c.id + ".json";
    if (update) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 3;
      }
      out << text;
      if (!quiet) std::cout << "updated " << c.id << "\n";
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      if (!quiet) std::cout << "MISSING " << c.id << " (" << path << ")\n";
      any_missing = true;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string golden = buf.str();
    if (golden == text) {
      if (!quiet) std::cout << "ok      " << c.id << "\n";
    } else {
      any_fail = true;
      if (!quiet) {
        std::cout << "FAIL    " << c.id << "\n";
        print_first_diff(golden, text);
      }
    }
  }
  if (ran == 0) {
    std::cerr << "error: unknown case id '" << only << "'\n";
    return 3;
  }
  if (!quiet && !update)
    std::cout << (any_missing ? "result: missing goldens"
                              : (any_fail ? "result: mismatches found" : "result: all cases match"))
              << "\n";
  if (any_missing) return 3;
  return any_fail ? 1 : 0;
}
