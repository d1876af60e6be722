// Command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rankdec/analysis.hpp"
#include "rankdec/errors.hpp"
#include "rankdec/reproduce.hpp"
#include "rankdec/serialize.hpp"
#include "rankdec/verify.hpp"

using namespace rankdec;

namespace {

enum Exit { ok = 0, usage = 1, cap_exceeded = 2, falsified = 3 };

struct RunConfig {
  std::uint64_t enumeration_cap = EnumOptions::default_enumeration_cap();
  std::uint64_t projective_cap = std::uint64_t{1} << 16;
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "pretty";

  EnumOptions enumeration() const {
    EnumOptions o;
    o.cap = enumeration_cap;
    o.projective_cap = projective_cap;
    o.threads = threads;
    return o;
  }
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_build(const RunConfig& cfg, const std::string& spec_path, const std::string& out_path) {
  const Json spec = read_json_file(spec_path);
  const RankCode C = code_from_json(spec, cfg.seed);
  const auto& d = C.require_decomposition();
  Json s;
  s["type"] = d.type;
  s["n"] = C.n();
  s["k"] = C.k();
  s["nondegenerate"] = is_nondegenerate(C);
  try {
    s["mrd"] = is_mrd(C, cfg.enumeration());
  } catch (const CapExceeded&) {
    s["mrd"] = nullptr;
  }
  Json blocks = Json::array();
  for (const auto& u : d.blocks) blocks.push_back(to_json(u));
  s["blocks"] = blocks;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError(out_path + ": cannot write file");
    out << to_json(C).dump(2) << "\n";
    s["written"] = out_path;
  }
  if (cfg.format == "json") {
    print_json(s);
  } else if (cfg.format == "csv") {
    std::cout << "type,n,k,nondegenerate,mrd\n\"" << join(d.type) << "\"," << C.n() << "," << C.k() << ","
              << s["nondegenerate"].dump() << "," << s["mrd"].dump() << "\n";
  } else {
    std::cout << "type          (" << join(d.type) << ")\n"
              << "length n      " << C.n() << "\n"
              << "dimension k   " << C.k() << "\n"
              << "nondegenerate " << s["nondegenerate"].dump() << "\n"
              << "MRD           " << (s["mrd"].is_null() ? "unknown (cap exceeded)" : s["mrd"].dump()) << "\n";
    for (std::size_t i = 0; i < d.blocks.size(); ++i) std::cout << "block " << i + 1 << "       " << blocks[i].dump() << "\n";
    if (!out_path.empty()) std::cout << "written to    " << out_path << "\n";
  }
  return ok;
}

void print_report_pretty(const MinWeightReport& r) {
  std::cout << "type                (" << join(r.type) << ")\n"
            << "ell                 " << r.ell << "\n";
  for (const auto& [ih, j] : r.j_matrix) std::cout << "j[" << ih.first << "," << ih.second << "]" << std::string(14, ' ') << j << "\n";
  std::cout << "A_" << r.type.back() << " (formula)" << std::string(r.type.back() < 10 ? 7 : 6, ' ') << r.formula_count << "\n";
  if (r.enumerated_count) std::cout << "A_" << r.type.back() << " (enumerated)    " << *r.enumerated_count << "\n";
  std::cout << "lower bound         " << r.lower_bound << "\n"
            << "upper bound         " << r.upper_bound << "\n";
  if (r.prime_upper_bound) std::cout << "prime bound         " << *r.prime_upper_bound << "\n";
}

int cmd_wdist(const RunConfig& cfg, const std::string& code_path, const std::string& method) {
  const RankCode C = code_from_json(read_json_file(code_path), cfg.seed);
  std::optional<WeightDistribution> dist;
  std::optional<MinWeightReport> rep;
  if (method == "enum" || method == "both") dist = weight_distribution(C, cfg.enumeration());
  if (method == "formula" || method == "both") rep = min_weight_count_formula(C, cfg.enumeration());
  bool agree = true;
  if (dist && rep) {
    const std::size_t nk = rep->type.back();
    rep->enumerated_count = nk < dist->counts.size() ? dist->counts[nk] : 0;
    agree = *rep->enumerated_count == rep->formula_count;
  }
  if (cfg.format == "json") {
    Json j;
    if (dist) j["distribution"] = to_json(*dist);
    if (rep) j["report"] = to_json(*rep);
    if (dist && rep) j["agree"] = agree;
    print_json(j);
  } else if (cfg.format == "csv") {
    if (dist) std::cout << to_csv(*dist);
    if (rep) {
      std::cout << "quantity,value\nell," << rep->ell << "\nformula_count," << rep->formula_count;
      if (rep->enumerated_count) std::cout << "\nenumerated_count," << *rep->enumerated_count;
      std::cout << "\nlower_bound," << rep->lower_bound << "\nupper_bound," << rep->upper_bound << "\n";
    }
  } else {
    if (dist) {
      std::cout << "weight distribution (" << join(dist->counts) << ")\n"
                << "minimum distance    " << dist->min_distance() << "\n";
    }
    if (rep) print_report_pretty(*rep);
    if (dist && rep) std::cout << (agree ? "agree" : "DISAGREE") << "\n";
  }
  if (!agree) {
    std::cerr << "falsification alarm: closed-form count differs from enumeration\n";
    return falsified;
  }
  return ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::size_t trials) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.trials = trials;
  opt.enumeration = cfg.enumeration();
  const auto reports = run_suites(suite, opt);
  bool passed = true;
  if (cfg.format == "json") {
    Json all = Json::array();
    for (const auto& r : reports) {
      Json s;
      s["suite"] = r.suite;
      s["passed"] = r.passed();
      Json checks = Json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"instances", c.instances}, {"failures", c.failures}, {"detail", c.detail}});
      s["checks"] = checks;
      all.push_back(s);
    }
    print_json(all);
  } else if (cfg.format == "csv") {
    std::cout << "suite,check,instances,failures\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks) std::cout << r.suite << ",\"" << c.name << "\"," << c.instances << "," << c.failures << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << "[" << r.suite << "]\n";
      for (const auto& c : r.checks) {
        std::cout << "  " << (c.passed() ? "PASS " : "FAIL ") << c.name << "  (" << c.instances << " instances";
        if (c.failures) std::cout << ", " << c.failures << " failed; first: " << c.detail;
        std::cout << ")\n";
      }
    }
  }
  for (const auto& r : reports) passed = passed && r.passed();
  return passed ? ok : falsified;
}

int cmd_reproduce(const RunConfig& cfg, const std::string& example) {
  const ReproduceReport r = reproduce(example, cfg.enumeration());
  if (cfg.format == "json") {
    Json j;
    j["example"] = r.example;
    j["field"] = r.field;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json x;
      x["label"] = row.label;
      x["symbol"] = row.symbol;
      x["lambda"] = row.lambda ? Json(row.lambda->code) : Json(nullptr);
      x["minimal_polynomial"] = row.lambda ? Json(polynomial_string(row.minimal_polynomial)) : Json(nullptr);
      x["expected"] = row.expected;
      x["computed"] = row.computed;
      x["matched"] = row.matched;
      rows.push_back(x);
    }
    j["rows"] = rows;
    Json notes = Json::array();
    for (const auto& [text, good] : r.notes) notes.push_back({{"note", text}, {"holds", good}});
    j["notes"] = notes;
    j["passed"] = r.passed();
    print_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "label,lambda,minimal_polynomial,expected,computed,matched\n";
    for (const auto& row : r.rows)
      std::cout << "\"" << row.label << "\"," << (row.lambda ? std::to_string(row.lambda->code) : "") << ",\""
                << (row.lambda ? polynomial_string(row.minimal_polynomial) : "") << "\",\"" << join(row.expected)
                << "\",\"" << join(row.computed) << "\"," << (row.matched ? "true" : "false") << "\n";
  } else {
    std::cout << r.example << " over " << r.field << "\n";
    for (const auto& row : r.rows) {
      std::cout << "  " << row.label << "\n";
      if (row.lambda)
        std::cout << "    " << row.symbol << " = " << row.lambda->code << ", minimal polynomial " << polynomial_string(row.minimal_polynomial)
                  << "\n";
      else
        std::cout << "    no witness found\n";
      std::cout << "    published (" << join(row.expected) << ")\n"
                << "    computed  (" << join(row.computed) << ")  " << (row.matched ? "match" : "MISMATCH") << "\n";
    }
    for (const auto& [text, good] : r.notes) std::cout << "  " << (good ? "ok   " : "FAIL ") << text << "\n";
    std::cout << (r.passed() ? "reproduced" : "NOT reproduced") << "\n";
  }
  if (!r.passed()) {
    std::cerr << "falsification alarm: example " << example << " was not reproduced\n";
    return falsified;
  }
  return ok;
}

int cmd_bounds(const RunConfig& cfg, std::uint64_t q, unsigned m, std::size_t nk, std::size_t ell) {
  const Bounds b = bounds_nonprime(q, m, nk, ell);
  const auto pb = bound_prime(q, m, ell);
  if (cfg.format == "json") {
    print_json({{"q", q}, {"m", m}, {"n_k", nk}, {"ell", ell}, {"lower", b.lower}, {"upper", b.upper},
                {"prime_upper", pb ? Json(*pb) : Json(nullptr)}});
  } else if (cfg.format == "csv") {
    std::cout << "lower,upper,prime_upper\n" << b.lower << "," << b.upper << "," << (pb ? std::to_string(*pb) : "") << "\n";
  } else {
    std::cout << "lower bound " << b.lower << "\nupper bound " << b.upper << "\n";
    if (pb) std::cout << "prime bound " << *pb << "\n";
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely decomposable rank-metric codes: build, enumerate, verify."};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--cap", cfg.enumeration_cap, "maximum messages for a full enumeration (default 2^24 or $RANKDEC_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--pcap", cfg.projective_cap, "maximum projective points for searches (default 2^16)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for random instances and λ choices");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::string spec_path, out_path, code_path, method = "enum", suite, example;
  std::size_t trials = 50;
  std::uint64_t q = 2;
  unsigned m = 0;
  std::size_t nk = 0, ell = 0;

  auto* build = app.add_subcommand("build", "build a code from a spec file and summarize it");
  build->add_option("spec", spec_path, "code spec (JSON)")->required();
  build->add_option("-o,--output", out_path, "write the canonical code file here");
  auto* wdist = app.add_subcommand("wdist", "weight distribution and minimum-weight count");
  wdist->add_option("code", code_path, "code file or code spec (JSON)")->required();
  wdist->add_option("--method", method, "enum, formula or both")->check(CLI::IsMember({"enum", "formula", "both"}));
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "duality, products, characterization, bounds or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", trials, "random instances per randomized check")->check(CLI::PositiveNumber);
  auto* repro = app.add_subcommand("reproduce", "reproduce a worked example");
  repro->add_option("example", example, "m6, m7, extremal or lowerbound")->required()->check(CLI::IsMember(example_names()));
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds on the minimum-weight count");
  bounds->add_option("--q", q, "field size q")->required();
  bounds->add_option("--m", m, "extension degree m")->required();
  bounds->add_option("--nk", nk, "smallest block length n_k")->required();
  bounds->add_option("--ell", ell, "number of further blocks of length n_k")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*build) return cmd_build(cfg, spec_path, out_path);
    if (*wdist) return cmd_wdist(cfg, code_path, method);
    if (*verify) return cmd_verify(cfg, suite, trials);
    if (*repro) return cmd_reproduce(cfg, example);
    if (*bounds) return cmd_bounds(cfg, q, m, nk, ell);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const FalsificationAlarm& e) {
    std::cerr << "falsification alarm: " << e.what() << "\n";
    return falsified;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
