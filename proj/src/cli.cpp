#include "recnum/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "recnum/analytics.hpp"
#include "recnum/classifier.hpp"
#include "recnum/enumerate.hpp"
#include "recnum/errors.hpp"
#include "recnum/oracle.hpp"

namespace recnum {
namespace {

using nlohmann::json;

enum class Format { kPlain, kJson, kCsv, kBfile };

struct RunConfig {
  Format format = Format::kPlain;
  std::string out_path;
  std::string bfile_path;
  Mode mode = Mode::kTheoremLiteral;
  uint64_t budget = kDefaultSweepBudget;
  unsigned workers = 1;
};

uint64_t env_default_budget() {
  const char* s = std::getenv("RECNUM_SIEVE_BUDGET");
  if (s == nullptr || *s == '\0') return kDefaultSweepBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0) return kDefaultSweepBudget;
  return v;
}

std::string join(const std::vector<uint64_t>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

json fit_to_json(const AffineSolutionSet& fit) {
  json j;
  switch (fit.kind) {
    case SolutionKind::kPlane:
      j["kind"] = "plane";
      break;
    case SolutionKind::kEmpty:
      j["kind"] = "empty";
      break;
    case SolutionKind::kPoint:
      j["kind"] = "point";
      j["a"] = fit.a;
      j["b"] = fit.b;
      break;
    case SolutionKind::kLine:
      j["kind"] = "line";
      j["base"] = {fit.a, fit.b};
      j["dir"] = {fit.da, fit.db};
      break;
  }
  return j;
}

std::string fit_to_plain(const AffineSolutionSet& fit) {
  switch (fit.kind) {
    case SolutionKind::kPlane:
      return "any";
    case SolutionKind::kEmpty:
      return "none";
    case SolutionKind::kPoint:
      return "a=" + std::to_string(fit.a) + " b=" + std::to_string(fit.b);
    case SolutionKind::kLine:
      return "line (" + std::to_string(fit.a) + "," + std::to_string(fit.b) +
             ")+t(" + std::to_string(fit.da) + "," + std::to_string(fit.db) +
             ")";
  }
  return "";
}

void cmd_check(uint64_t n, const RunConfig& cfg, std::ostream& os) {
  OracleVerdict v = is_recurrent(n);
  if (cfg.format == Format::kJson) {
    json j;
    j["n"] = v.n;
    j["recurrent"] = v.recurrent;
    j["s"] = v.s;
    j["small_divisors"] = v.small_divisors;
    j["fit"] = fit_to_json(v.fit);
    os << j.dump() << '\n';
    return;
  }
  if (v.recurrent) {
    std::string fit = fit_to_plain(v.fit);
    os << "recurrent";
    if (v.fit.kind != SolutionKind::kPlane) os << ' ' << fit;
    os << " s=" << v.s << " S=" << join(v.small_divisors) << '\n';
  } else {
    os << "not-recurrent s=" << v.s << " S=" << join(v.small_divisors)
       << '\n';
  }
}

void cmd_classify(uint64_t n, const RunConfig& cfg, std::ostream& os) {
  Classification cls = classify(n, cfg.mode);
  if (cfg.format == Format::kJson) {
    json j;
    j["n"] = cls.n;
    j["mode"] = cfg.mode == Mode::kTheoremLiteral ? "theorem-literal"
                                                  : "oracle-complete";
    j["categories"] = json::array();
    for (const Category& c : cls.categories) {
      json cj;
      cj["tag"] = to_string(c.tag);
      if (c.p != 0) cj["p"] = c.p;
      if (c.q != 0) cj["q"] = c.q;
      if (c.r != 0) cj["r"] = c.r;
      if (c.k != 0) cj["k"] = c.k;
      j["categories"].push_back(cj);
    }
    if (cls.predicted) j["predicted_small_divisors"] = *cls.predicted;
    os << j.dump() << '\n';
    return;
  }
  os << "n=" << cls.n << " categories=[";
  for (size_t i = 0; i < cls.categories.size(); ++i) {
    if (i > 0) os << ',';
    os << to_string(cls.categories[i].tag);
  }
  os << "]";
  if (cls.predicted) os << " predicted=" << join(*cls.predicted);
  os << '\n';
}

void cmd_enumerate(uint64_t limit, const RunConfig& cfg, std::ostream& os) {
  SweepOptions opt;
  opt.budget = cfg.budget;
  opt.workers = cfg.workers;
  std::vector<uint64_t> values = generate_families(limit, cfg.mode, opt);
  if (!cfg.bfile_path.empty()) {
    write_bfile(std::filesystem::path(cfg.bfile_path), values);
  }
  switch (cfg.format) {
    case Format::kBfile:
      write_bfile(os, values);
      break;
    case Format::kJson: {
      json j;
      j["limit"] = limit;
      j["mode"] = cfg.mode == Mode::kTheoremLiteral ? "theorem-literal"
                                                    : "oracle-complete";
      j["count"] = values.size();
      j["values"] = values;
      os << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      os << "index,value\n";
      for (size_t i = 0; i < values.size(); ++i) {
        os << i + 1 << ',' << values[i] << '\n';
      }
      break;
    case Format::kPlain:
      for (uint64_t v : values) os << v << '\n';
      break;
  }
}

void cmd_reconcile(uint64_t limit, const RunConfig& cfg, std::ostream& os) {
  SweepOptions opt;
  opt.budget = cfg.budget;
  opt.workers = cfg.workers;
  std::vector<ReconciliationRecord> records = reconcile(limit, opt);
  for (const ReconciliationRecord& rec : records) {
    json j;
    j["n"] = rec.n;
    j["oracle"] = rec.oracle_recurrent;
    j["categories"] = json::array();
    for (CategoryTag t : rec.categories) {
      j["categories"].push_back(to_string(t));
    }
    j["kind"] = rec.oracle_recurrent ? "oracle-only" : "classifier-only";
    os << j.dump() << '\n';
  }
}

void cmd_density(const std::vector<uint64_t>& checkpoints,
                 std::optional<std::pair<double, double>> ab,
                 const RunConfig& cfg, std::ostream& os) {
  SweepOptions opt;
  opt.budget = cfg.budget;
  opt.workers = cfg.workers;
  uint64_t hi = checkpoints.empty() ? 0 : checkpoints.back();
  SweepResult sw = sweep(1, hi, opt);
  DensityReport rep = density_report(checkpoints, sw.recurrent, ab, cfg.budget);
  if (cfg.format == Format::kJson) {
    os << rep.to_json() << '\n';
  } else {
    rep.write_csv(os);
  }
}

void cmd_bounds_lemma(int u_max, int x_max, const RunConfig& cfg,
                      std::ostream& os) {
  std::vector<std::pair<int, int>> hits = verify_bounds_lemma(u_max, x_max);
  TailCheck tail = bounds_lemma_tail(4, std::max(4, std::min(u_max, 100)),
                                     std::min(x_max, 100));
  if (cfg.format == Format::kJson) {
    json j;
    j["u_max"] = u_max;
    j["x_max"] = x_max;
    j["satisfying"] = json::array();
    for (auto [u, x] : hits) j["satisfying"].push_back({u, x});
    j["tail"]["decreasing_in_x"] = tail.decreasing_in_x;
    j["tail"]["p_at_2_negative"] = tail.p_at_2_negative;
    j["note"] =
        "finite box plus decreasing-property check; the full claim ranges "
        "over all x >= 2";
    os << j.dump() << '\n';
    return;
  }
  for (auto [u, x] : hits) {
    os << u << ' ' << x << " gap=" << bound_gap(u, x).str() << '\n';
  }
  os << "tail decreasing_in_x=" << (tail.decreasing_in_x ? "yes" : "no")
     << " P(2)<0=" << (tail.p_at_2_negative ? "yes" : "no") << '\n';
  os << "# finite box plus decreasing-property check; the full claim "
        "ranges over all x >= 2\n";
}

void cmd_conjecture_pairs(uint64_t limit, const RunConfig& cfg,
                          std::ostream& os) {
  auto pairs = conjecture_pairs(limit);
  if (cfg.format == Format::kJson) {
    json j = json::array();
    for (auto [p, q] : pairs) j.push_back({p, q});
    os << j.dump() << '\n';
    return;
  }
  if (cfg.format == Format::kCsv) {
    os << "p,q\n";
    for (auto [p, q] : pairs) os << p << ',' << q << '\n';
    return;
  }
  for (auto [p, q] : pairs) os << p << ' ' << q << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"recurrent-number toolkit"};
  app.require_subcommand(1);
  // Global options (--format, --out, ...) may appear after the subcommand
  // name; unmatched subcommand arguments fall through to this app.
  app.fallthrough();

  RunConfig cfg;
  cfg.budget = env_default_budget();
  std::string format = "plain";
  std::string mode = "theorem-literal";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));
  app.add_option("--out", cfg.out_path, "write results to this file");
  app.add_option("--budget", cfg.budget, "sieve budget (upper bound cap)");
  app.add_option("--workers", cfg.workers, "worker threads for sweeps");

  uint64_t n = 0, limit = 0;
  int u_max = 0, x_max = 0;
  std::vector<uint64_t> checkpoints;
  std::optional<double> opt_a, opt_b;

  CLI::App* c_check = app.add_subcommand("check", "oracle verdict for one n");
  c_check->add_option("n", n, "the integer to test")->required();

  CLI::App* c_classify =
      app.add_subcommand("classify", "category match for one n");
  c_classify->add_option("n", n, "the integer to classify")->required();
  c_classify->add_option("--mode", mode, "category set")
      ->check(CLI::IsMember({"theorem-literal", "oracle-complete"}));

  CLI::App* c_enum =
      app.add_subcommand("enumerate", "family members up to a limit");
  c_enum->add_option("--limit", limit, "upper bound")->required();
  c_enum->add_option("--mode", mode, "category set")
      ->check(CLI::IsMember({"theorem-literal", "oracle-complete"}));
  c_enum->add_option("--bfile", cfg.bfile_path,
                     "also write the list as a b-file to this path");

  CLI::App* c_rec =
      app.add_subcommand("reconcile", "oracle vs theorem-literal classifier");
  c_rec->add_option("--limit", limit, "upper bound")->required();

  CLI::App* c_density = app.add_subcommand("density", "density report");
  c_density->add_option("--checkpoints", checkpoints, "ascending x values")
      ->required()
      ->delimiter(',');
  c_density->add_option("--A", opt_a, "bound constant A");
  c_density->add_option("--B", opt_b, "bound constant B");

  CLI::App* c_lemma =
      app.add_subcommand("bounds-lemma", "exact finite-box inequality scan");
  c_lemma->add_option("--umax", u_max, "largest u")->required();
  c_lemma->add_option("--xmax", x_max, "largest x")->required();

  CLI::App* c_pairs =
      app.add_subcommand("conjecture-pairs", "admissible prime pairs (p,q)");
  c_pairs->add_option("--limit", limit, "largest q")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("recnum");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  cfg.format = format == "json"    ? Format::kJson
               : format == "csv"   ? Format::kCsv
               : format == "bfile" ? Format::kBfile
                                   : Format::kPlain;
  cfg.mode = mode == "oracle-complete" ? Mode::kOracleComplete
                                       : Mode::kTheoremLiteral;

  std::ofstream file_out;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file_out.open(cfg.out_path);
    if (!file_out) {
      err << "cannot open --out path " << cfg.out_path << '\n';
      return 1;
    }
    os = &file_out;
  }

  try {
    if (c_check->parsed()) {
      cmd_check(n, cfg, *os);
    } else if (c_classify->parsed()) {
      cmd_classify(n, cfg, *os);
    } else if (c_enum->parsed()) {
      cmd_enumerate(limit, cfg, *os);
    } else if (c_rec->parsed()) {
      cmd_reconcile(limit, cfg, *os);
    } else if (c_density->parsed()) {
      std::optional<std::pair<double, double>> ab;
      if (opt_a.has_value() != opt_b.has_value()) {
        err << "usage error: --A and --B must be given together\n";
        return 2;
      }
      if (opt_a) ab = {*opt_a, *opt_b};
      cmd_density(checkpoints, ab, cfg, *os);
    } else if (c_lemma->parsed()) {
      cmd_bounds_lemma(u_max, x_max, cfg, *os);
    } else if (c_pairs->parsed()) {
      cmd_conjecture_pairs(limit, cfg, *os);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  }
  if (os == &file_out) {
    file_out.flush();
    if (!file_out) {
      err << "write to --out path " << cfg.out_path << " failed\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace recnum
