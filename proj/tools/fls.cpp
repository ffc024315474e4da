// fls: command-line front end for the fuzzy linear space workbench.
//
// Exit codes: 0 success / every checked clause holds, 1 a violation or
// counterexample was found, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fls/fls.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (s.back() == ',') out.emplace_back();
  return out;
}

fls::PointSet parse_point_list(const fls::FuzzyLinearSpace& space, const std::string& csv) {
  fls::PointSet set;
  for (const auto& name : split_csv(csv)) {
    auto id = space.find_point(name);
    if (!id) throw fls::ParseError("unknown point '" + name + "'");
    set.insert(id->index);
  }
  return set;
}

std::vector<std::string> names_of(const fls::FuzzyLinearSpace& space, fls::PointSet set) {
  std::vector<std::string> out;
  for (auto i : set.indices()) out.push_back(space.point_names()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

int run_check(const std::string& file, const std::string& axioms_id, bool json) {
  const auto doc = fls::load_space_document(file);
  const auto report = fls::validate(doc.space, fls::parse_axiom_set(axioms_id));
  if (json) {
    nlohmann::ordered_json j;
    j["ok"] = report.ok();
    auto results = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
      nlohmann::ordered_json e{{"axiom", fls::axiom_name(r.axiom)}, {"passed", r.passed}};
      if (!r.passed) {
        e["detail"] = r.detail;
        std::vector<std::string> lines, points;
        for (auto l : r.witness_lines) lines.push_back(doc.space.lines()[l].name);
        for (auto p : r.witness_points) points.push_back(doc.space.point_names()[p]);
        e["witnessLines"] = lines;
        e["witnessPoints"] = points;
      }
      results.push_back(std::move(e));
    }
    j["axioms"] = std::move(results);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : report.results) {
      std::cout << fls::axiom_name(r.axiom) << "  " << (r.passed ? "pass" : "FAIL");
      if (!r.passed) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
  }
  return report.ok() ? kOk : kViolation;
}

int run_closure(const std::string& file, const std::string& set_csv, const std::string& mode_name, bool json) {
  const auto space = fls::load_space_document(file).space;
  const auto mode = mode_name == "forall" ? fls::ClosureMode::kForallSubsets : fls::ClosureMode::kExistsSubset;
  const auto x = parse_point_list(space, set_csv);
  const auto result = fls::closure(space, x, mode);
  if (json) {
    nlohmann::ordered_json j{{"mode", mode_name}, {"set", names_of(space, x)}, {"closure", names_of(space, result)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << join(names_of(space, result), ",") << "\n";
  }
  return kOk;
}

int run_classify(const std::string& file, bool json) {
  const auto space = fls::load_space_document(file).space;
  const auto s = fls::summarize(space);
  if (json) {
    nlohmann::ordered_json j;
    j["perPointDegree"] = nlohmann::ordered_json::object();
    for (const auto& [name, deg] : s.per_point_degree) j["perPointDegree"][name] = deg;
    j["perLineDegree"] = nlohmann::ordered_json::object();
    for (const auto& [name, deg] : s.per_line_degree) j["perLineDegree"][name] = deg;
    j["maxPointK"] = s.max_point_k;
    j["maxLineK"] = s.max_line_k;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "point       lines with nonzero value\n";
  for (const auto& [name, deg] : s.per_point_degree) std::cout << std::left << std::setw(12) << name << deg << "\n";
  std::cout << "line        points with nonzero value\n";
  for (const auto& [name, deg] : s.per_line_degree) std::cout << std::left << std::setw(12) << name << deg << "\n";
  std::cout << "max point k: " << s.max_point_k << "\nmax line k:  " << s.max_line_k << "\n";
  return kOk;
}

int run_verify(const std::string& file, bool classical, const std::string& axioms_id, bool json) {
  const auto space = fls::load_space_document(file).space;
  const auto verdict = classical ? fls::check_classical_dbe(space)
                                 : fls::check_generalized_dbe(space, fls::parse_axiom_set(axioms_id));
  std::cout << fls::render_verdict(verdict, json ? fls::ReportFormat::kJson : fls::ReportFormat::kText);
  return verdict.holds() ? kOk : kViolation;
}

struct EnumerateArgs {
  std::size_t points = 0;
  unsigned n = 0;
  bool nontrivial = false;
  std::size_t cap = fls::kDefaultLabelingCap;
  std::uint64_t seed = 0;
  std::string clause;
  std::string axioms = "a1a2a3";
  std::string out;
  std::size_t workers = 1;
};

int run_enumerate(const EnumerateArgs& a) {
  fls::CensusOptions opt;
  opt.nontrivial_only = a.nontrivial;
  opt.cap = a.cap;
  opt.seed = a.seed;
  opt.axioms = fls::parse_axiom_set(a.axioms);
  opt.workers = a.workers;
  const auto clause = a.clause.empty() ? std::optional<fls::Clause>{} : fls::parse_clause(a.clause);

  const auto census = fls::build_census(a.points, fls::ChainLattice{a.n}, opt);
  const auto text = fls::census_json(census).dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw fls::ParseError(a.out + ": cannot write file");
    f << text;
  }

  std::ostream& log = a.out.empty() ? std::cerr : std::cout;
  log << "v = " << a.points << ", n = " << a.n << ": " << census.entries.size() << " classes from "
      << census.labeled_skeletons << " labeled skeletons (cross-check " << (census.cross_check ? "ok" : "FAILED")
      << ")\n";
  if (!clause) return census.cross_check ? kOk : kViolation;

  std::size_t failing = 0;
  for (std::size_t i = 0; i < census.entries.size(); ++i) {
    const auto& e = census.entries[i];
    if (!e.verdict) continue;
    const bool fails = *clause == fls::Clause::kAll
                           ? e.labelings.holding < e.labelings.checked
                           : e.labelings.clause_failures[static_cast<std::size_t>(*clause)] > 0;
    if (!fails) continue;
    ++failing;
    std::vector<std::string> lines;
    for (auto s : e.canonical_space.supports()) {
      std::vector<std::string> pts;
      for (auto p : s.indices()) pts.push_back(std::to_string(p + 1));
      lines.push_back("{" + join(pts, ",") + "}");
    }
    log << "counterexample to " << fls::clause_name(*clause) << ": " << join(lines, " ");
    if (e.verdict->intersection_witness) {
      log << "  (disjoint lines " << e.verdict->intersection_witness->first_name << ", "
          << e.verdict->intersection_witness->second_name << ")";
    }
    log << "\n";
  }
  log << failing << " counterexample class(es) for " << fls::clause_name(*clause) << "\n";
  return failing == 0 && census.cross_check ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy linear space workbench"};
  app.require_subcommand(1);

  bool json = false;
  std::string file;
  std::string axioms = "a1a2a3";

  auto* check = app.add_subcommand("check", "Validate a space document against an axiom set");
  check->add_option("file", file, "Space document (JSON)")->required();
  check->add_option("--axioms", axioms, "a1a2a3 or a1a2a3a4")->check(CLI::IsMember({"a1a2a3", "a1a2a3a4"}));
  check->add_flag("--json", json, "JSON output");

  std::string set_csv;
  std::string mode = "exists";
  auto* closure = app.add_subcommand("closure", "Closure of a point set");
  closure->add_option("file", file, "Space document (JSON)")->required();
  closure->add_option("--set", set_csv, "Comma-separated point names")->required();
  closure->add_option("--mode", mode, "exists or forall")->check(CLI::IsMember({"exists", "forall"}));
  closure->add_flag("--json", json, "JSON output");

  auto* classify = app.add_subcommand("classify", "Point and line fuzzy degrees");
  classify->add_option("file", file, "Space document (JSON)")->required();
  classify->add_flag("--json", json, "JSON output");

  std::size_t k = 0;
  unsigned n = 0;
  std::string supports_csv;
  auto* count = app.add_subcommand("count", "Labeling counts");
  count->require_subcommand(1);
  auto* count_lines = count->add_subcommand("lines", "Nonzero labelings of a k-point line: (n+1)^k");
  count_lines->add_option("--k", k, "Support size")->required();
  count_lines->add_option("--n", n, "Intermediate lattice elements")->required();
  auto* count_points = count->add_subcommand("points", "Configurations of several supports: prod (n+1)^v_j");
  count_points->add_option("--supports", supports_csv, "Comma-separated support sizes")->required();
  count_points->add_option("--n", n, "Intermediate lattice elements")->required();

  std::string m_text;
  std::size_t v = 0;
  auto* infer = app.add_subcommand("infer-lines", "Solve (n+1)^(b*v) = m for the line count b");
  infer->add_option("--m", m_text, "Space cardinality (decimal)")->required();
  infer->add_option("--v", v, "Uniform support size")->required();
  infer->add_option("--n", n, "Intermediate lattice elements (>= 1)")->required();

  auto* verify = app.add_subcommand("verify", "Check a de Bruijn-Erdos theorem clause by clause");
  verify->require_subcommand(1);
  auto* dbe = verify->add_subcommand("dbe", "Classical theorem (crisp space)");
  dbe->add_option("file", file, "Space document (JSON)")->required();
  dbe->add_flag("--json", json, "JSON output");
  auto* gdbe = verify->add_subcommand("gdbe", "Generalized theorem (fuzzy space)");
  gdbe->add_option("file", file, "Space document (JSON)")->required();
  gdbe->add_option("--axioms", axioms, "a1a2a3 or a1a2a3a4")->check(CLI::IsMember({"a1a2a3", "a1a2a3a4"}));
  gdbe->add_flag("--json", json, "JSON output");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Census of linear-space skeletons with theorem verdicts");
  enumerate->add_option("--points", en.points, "Number of points (3..7)")->required();
  enumerate->add_option("--n", en.n, "Intermediate lattice elements")->required();
  enumerate->add_flag("--nontrivial", en.nontrivial, "Exclude the single-line space");
  enumerate->add_option("--cap", en.cap, "Labelings per skeleton before sampling");
  enumerate->add_option("--seed", en.seed, "Sampling seed");
  enumerate->add_option("--clause", en.clause, "Report counterexamples to c1, c2, c3, c4, or all")
      ->check(CLI::IsMember({"c1", "c2", "c3", "c4", "all"}));
  enumerate->add_option("--axioms", en.axioms, "a1a2a3 or a1a2a3a4")->check(CLI::IsMember({"a1a2a3", "a1a2a3a4"}));
  enumerate->add_option("--out", en.out, "Write the census JSON here instead of stdout");
  enumerate->add_option("--workers", en.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    std::cerr << app.help();
    return kInputError;
  }

  try {
    if (*check) return run_check(file, axioms, json);
    if (*closure) return run_closure(file, set_csv, mode, json);
    if (*classify) return run_classify(file, json);
    if (*count_lines) {
      std::cout << fls::to_decimal(fls::count_k_fuzzy_line_labelings(k, fls::ChainLattice{n})) << "\n";
      return kOk;
    }
    if (*count_points) {
      std::vector<std::size_t> sizes;
      for (const auto& s : split_csv(supports_csv)) sizes.push_back(fls::parse_count(s).convert_to<std::size_t>());
      std::cout << fls::to_decimal(fls::count_k_fuzzy_point_configs(sizes, fls::ChainLattice{n})) << "\n";
      return kOk;
    }
    if (*infer) {
      try {
        std::cout << fls::infer_line_count(fls::parse_count(m_text), v, fls::ChainLattice{n}) << "\n";
        return kOk;
      } catch (const fls::NoExactSolution& e) {
        std::cerr << "no exact solution: " << e.what() << "\n";
        return kViolation;
      }
    }
    if (*dbe) return run_verify(file, true, axioms, json);
    if (*gdbe) return run_verify(file, false, axioms, json);
    if (*enumerate) return run_enumerate(en);
  } catch (const fls::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const fls::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::cerr << app.help();
  return kInputError;
}
