// ultragrowth: growth-condition checks for weight sequences, weight functions
// and weight matrices.
#include "ultragrowth/assocfn.hpp"
#include "ultragrowth/conjugate.hpp"
#include "ultragrowth/io.hpp"
#include "ultragrowth/lambdanorms.hpp"
#include "ultragrowth/matrices.hpp"
#include "ultragrowth/oscillator.hpp"
#include "ultragrowth/relations.hpp"
#include "ultragrowth/report.hpp"
#include "ultragrowth/seqcore.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace ultragrowth;

namespace {

constexpr int kUsage = 64;

const char* kWeightHelp =
    "Weight specs: t^a (max(t^a - 1, 0)), raw:t^a (plain t^a), log1p (log(1 + t)), "
    "logtrunc (max(log t, 0)), gevrey:<s> (omega of p!^s), assoc:<file> (omega of a "
    "sequence file).";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(Status s) {
  switch (s) {
    case Status::holds: return 0;
    case Status::fails: return 1;
    case Status::inconclusive: return 2;
  }
  return 2;
}

// Collects verdicts, prints JSON to stdout and one summary line per verdict to stderr.
struct Output {
  Json doc = Json::object();
  Status status = Status::holds;
  std::vector<std::string> summary;

  void verdict(const std::string& label, const Verdict& v) {
    status = worst(status, v.status);
    std::string line = label + ": " + std::string(to_string(v.status));
    if (!v.detail.empty()) line += " (" + v.detail + ")";
    summary.push_back(line);
  }

  int finish() const {
    std::cout << doc.dump(2) << '\n';
    for (const auto& s : summary) std::cerr << s << '\n';
    return exit_code(status);
  }
};

template <class F>
auto parse_enum(F&& f, const std::string& what, const std::string& value) {
  try {
    return f(value);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown " + what + ": " + value);
  }
}

std::vector<double> uniform(double hi, double step) {
  if (!(step > 0) || !(hi >= 0)) throw UsageError("bad s-grid");
  std::vector<double> s;
  for (long i = 0; i * step <= hi * (1 + 1e-12); ++i) s.push_back(i * step);
  return s;
}

// "const:<sequence spec>", a matrix JSON file, or a weight spec generating a matrix
WeightMatrix matrix_arg(const std::string& arg, const RunConfig& cfg) {
  if (arg.starts_with("const:"))
    return WeightMatrix::constant(materialize_sequence_spec(arg.substr(6), cfg.truncation),
                                  cfg.lambdas);
  if (arg.ends_with(".json")) return load_matrix(arg);
  return matrix_of_weight(parse_weight_spec(arg, cfg.truncation), cfg.lambdas_with_doubles(),
                          cfg.truncation, cfg.grid);
}

int cmd_check_seq(const std::string& spec, const std::vector<std::string>& conds,
                  const RunConfig& cfg) {
  const LogSequence m = materialize_sequence_spec(spec, cfg.truncation);
  Output out;
  out.doc["sequence"] = m.name();
  out.doc["truncation"] = m.truncation();
  Json res = Json::object();
  for (const auto& c : conds) {
    const auto cond = parse_enum(sequence_condition_from_string, "condition", c);
    const Verdict v = check_sequence_condition(m, cond, cfg.tol);
    res[c] = to_json(v);
    out.verdict(c, v);
  }
  out.doc["conditions"] = std::move(res);
  return out.finish();
}

int cmd_check_weight(const std::string& spec, const std::vector<std::string>& conds,
                     const RunConfig& cfg) {
  const WeightFn w = parse_weight_spec(spec, cfg.truncation);
  Output out;
  out.doc["weight"] = w.spec();
  Json res = Json::object();
  for (const auto& c : conds) {
    const auto cond = parse_enum(weight_condition_from_string, "condition", c);
    const Verdict v = check_weight_condition(w, cond, cfg);
    res[c] = to_json(v);
    out.verdict(c, v);
  }
  out.doc["conditions"] = std::move(res);
  return out.finish();
}

int cmd_relate(const std::string& a, const std::string& b, const std::string& rel_s,
               bool matrix, bool weights, const std::string& mode_s, const RunConfig& cfg) {
  Output out;
  out.doc["a"] = a;
  out.doc["b"] = b;
  if (matrix) {
    const auto mode = parse_enum(matrix_mode_from_string, "matrix mode", mode_s);
    const Verdict v = relate_matrices(matrix_arg(a, cfg), matrix_arg(b, cfg), mode, cfg.tol);
    out.doc["mode"] = to_string(mode);
    out.doc["verdict"] = to_json(v);
    out.verdict(std::string(to_string(mode)), v);
    return out.finish();
  }
  const auto rel = parse_enum(relation_from_string, "relation", rel_s);
  RelationReport r;
  if (weights)
    r = wf_relate(parse_weight_spec(a, cfg.truncation), parse_weight_spec(b, cfg.truncation), rel,
                  cfg);
  else
    r = seq_relate(materialize_sequence_spec(a, cfg.truncation),
                   materialize_sequence_spec(b, cfg.truncation), rel, cfg.tol);
  out.doc["report"] = to_json(r);
  out.verdict(std::string(to_string(rel)), r.verdict);
  return out.finish();
}

int cmd_conjugate(const std::string& spec, bool emit, bool emit_curve, double s_max, double s_step,
                  const RunConfig& cfg) {
  const WeightFn w = parse_weight_spec(spec, cfg.truncation);
  if (emit_curve) {
    write_curve_tsv(std::cout, w, weight_grid(w, cfg.grid, cfg.grid.t_min, cfg.grid.t_max));
    return 0;
  }
  const ConjugateTable t = conjugate_table(w, uniform(s_max, s_step), cfg.grid);
  const Verdict v = check_conjugate_table(t, cfg.tol);
  if (emit) {
    write_conjugate_tsv(std::cout, t);
    std::cerr << "conjugate table: " << to_string(v.status) << '\n';
    return exit_code(v.status);
  }
  Output out;
  out.doc["conjugate"] = to_json(t);
  out.doc["invariants"] = to_json(v);
  out.verdict("conjugate table", v);
  return out.finish();
}

int cmd_matrix(const std::string& spec, const std::vector<std::string>& checks,
               const std::string& emit_path, const RunConfig& cfg) {
  const WeightMatrix M = matrix_arg(spec, cfg);
  Output out;
  out.doc["matrix"] = M.name();
  out.doc["lambdas"] = M.lambdas();
  out.doc["truncation"] = M.truncation();
  Json res = Json::object();
  for (const auto& c : checks) {
    Verdict v;
    if (c == "generated")
      v = check_generated_matrix(M, cfg.tol);
    else if (c == "nqa-roumieu" || c == "nqa-beurling")
      v = matrix_nqa(M, c == "nqa-roumieu" ? MatrixMode::roumieu : MatrixMode::beurling, cfg.tol);
    else if (c.starts_with("scaling:"))
      v = scaling_property(M, std::stod(c.substr(8)), cfg.tol);
    else
      v = check_matrix_condition(M, parse_enum(matrix_condition_from_string, "matrix check", c),
                                 cfg.tol);
    res[c] = to_json(v);
    out.verdict(c, v);
  }
  out.doc["checks"] = std::move(res);
  if (!emit_path.empty()) {
    std::ofstream f(emit_path);
    if (!f) throw FormatError(emit_path + ": cannot write");
    f << to_json(M).dump(1) << '\n';
  }
  return out.finish();
}

int cmd_oscillate(const std::string& target_spec, int Q, int J, const std::string& tsv_path,
                  const RunConfig& cfg) {
  auto target = parse_sequence_spec(target_spec, cfg.truncation);
  Output out;
  const Verdict val = validate_target(*target, 4096, cfg.tol);
  out.doc["validation"] = to_json(val);
  out.verdict("target", val);
  if (val.fails()) return out.finish();
  const OscillatorResult r = build(plan(*target, Q, J, cfg.tol), target);
  out.doc["result"] = to_json(r);
  Json checks = Json::object();
  for (const auto& [k, v] : verify(r, cfg.truncation, cfg.tol)) {
    checks[k] = to_json(v);
    out.verdict(k, v);
  }
  out.doc["checks"] = std::move(checks);
  if (!tsv_path.empty()) {
    std::ofstream f(tsv_path);
    if (!f) throw FormatError(tsv_path + ": cannot write");
    const LogSequence head = r.M->head(cfg.truncation);
    const auto mu = quotients(head).logmu;
    f << "# p\tlog_mu\tlog_nu\n";
    for (int p = 1; p <= head.truncation(); ++p)
      f << p << '\t' << short_number(mu[p]) << '\t'
        << short_number(target->log_mu(BigIndex(p))) << '\n';
  }
  return out.finish();
}

int cmd_norms(const std::string& coeff, const std::string& weight, const std::string& mode_s,
              int j, bool matrix, const RunConfig& cfg) {
  const CoefficientFamily c = load_coefficients(coeff);
  const NormMode mode{parse_enum(norm_kind_from_string, "norm mode", mode_s), j};
  const NormResult r = matrix ? matrix_norm(c, matrix_arg(weight, cfg), mode)
                              : lambda_norm(c, parse_weight_spec(weight, cfg.truncation), mode, cfg);
  Output out;
  out.doc["coefficients"] = to_json(c)["kind"];
  out.doc["weight"] = weight;
  out.doc["mode"] = to_string(mode.kind);
  out.doc["j"] = j;
  out.doc["norm"] = to_json(r);
  Verdict v;
  if (r.log_value == INFINITY)
    v = Verdict::make_fails({double(r.argmax)}, 0, double(c.support()), "norm is infinite");
  else if (r.tail_rising || r.saturated)
    v = Verdict::make_inconclusive(0, double(c.support()),
                                   r.tail_rising ? "term still rising at the support bound"
                                                 : "entry saturated on the probe");
  else
    v = Verdict::make_holds({{"log_norm", r.log_value}}, 0, double(c.support()));
  out.verdict("norm finite", v);
  return out.finish();
}

int cmd_classify(const std::string& spec, const std::string& case_s, const RunConfig& cfg) {
  const WeightFn w = parse_weight_spec(spec, cfg.truncation);
  const auto c = parse_enum(class_case_from_string, "case", case_s);
  const TrivialityReport r = classify_triviality(w, c, cfg);
  std::cout << to_json(r).dump(2) << '\n';
  std::cerr << w.spec() << " (" << case_s << "): " << to_string(r.result) << '\n';
  return r.result == Triviality::unknown ? 2 : 0;
}

int cmd_report(const std::string& suite, const RunConfig& cfg) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite: " + suite);
  const SuiteReport r = run_suite(suite, cfg);
  std::cout << to_json(r).dump(2) << '\n';
  for (const auto& c : r.claims)
    std::cerr << c.id << ' ' << c.key << ": " << to_string(c.verdict.status)
              << (c.verdict.detail.empty() ? "" : " (" + c.verdict.detail + ")") << '\n';
  return exit_code(r.overall());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth conditions and relations for weight sequences, weight functions and "
               "weight matrices."};
  app.footer(kWeightHelp);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> truncation;
  std::optional<double> t_max;
  app.add_option("--truncation", truncation, "Sequence truncation P");
  app.add_option("--t-max", t_max, "Upper end of the t-grid");

  std::string a, b, rel = "preceq", mode = "roumieu", cse, suite, emit_path, tsv_path, target;
  std::vector<std::string> conds;
  bool matrix = false, weights = false, emit = false, emit_curve = false;
  double s_max = 10.0, s_step = 0.125;
  int Q = 3, stages = 8, j = 1;

  auto* check_seq = app.add_subcommand("check-seq", "Check conditions on a weight sequence");
  check_seq->add_option("sequence", a, "Sequence file or gevrey:<s>")->required();
  check_seq->add_option("--cond", conds,
                        "M1, normalized, M2prime, M2, algebra, M0, root_divergence, nonquasianalytic")
      ->required();

  auto* check_weight = app.add_subcommand("check-weight", "Check conditions on a weight function");
  check_weight->add_option("weight", a, "Weight spec")->required();
  check_weight->add_option("--cond", conds, "alpha, beta, gamma, delta, omega6, om7, omega_nqa")
      ->required();

  auto* relate = app.add_subcommand("relate", "Compare two sequences, weights or matrices");
  relate->add_option("a", a)->required();
  relate->add_option("b", b)->required();
  relate->add_option("--rel", rel, "preceq, triangleleft, equiv, sim, incomparable-probe");
  relate->add_flag("--matrix", matrix,
                   "Arguments are matrices: a matrix file, a weight spec, or const:<sequence>");
  relate->add_flag("--weights", weights, "Arguments are weight specs");
  relate->add_option("--mode", mode, "Matrix mode: roumieu, beurling, strong");

  auto* conjugate = app.add_subcommand("conjugate", "Young conjugate table of a weight");
  conjugate->add_option("weight", a, "Weight spec")->required();
  conjugate->add_flag("--emit", emit, "Write the table as TSV (s, value) instead of JSON");
  conjugate->add_flag("--emit-curve", emit_curve, "Write TSV (t, w(t)) on the t-grid");
  conjugate->add_option("--s-max", s_max, "Largest s");
  conjugate->add_option("--s-step", s_step, "Spacing of the s-grid");

  auto* matrix_cmd = app.add_subcommand("matrix", "Build a weight matrix and check conditions");
  matrix_cmd->add_option("weight", a, "Weight spec, matrix file, or const:<sequence>")->required();
  matrix_cmd->add_option("--check", conds,
                         "generated, scaling:<h>, nqa-roumieu, nqa-beurling, or a matrix "
                         "condition (c12L2R, c37LR, M2primeR, M2R, c12L2B, c37LB, M2primeB, "
                         "M2B, beurling_square, monotone, constant, standard_log_convex)")
      ->required();
  matrix_cmd->add_option("--emit", emit_path, "Write the matrix JSON to this file");

  auto* oscillate = app.add_subcommand("oscillate", "Build a sequence oscillating around a target");
  oscillate->add_option("--target", target, "Target sequence file or gevrey:<s>")->required();
  oscillate->add_option("--Q", Q, "Block base, at least 3");
  oscillate->add_option("--stages", stages, "Number of anchors J");
  oscillate->add_option("--tsv", tsv_path, "Write (p, log mu_p, log nu_p) over the head");

  auto* norms = app.add_subcommand("norms", "Sequence-space norm of a coefficient family");
  norms->add_option("coefficients", a, "Coefficient JSON file")->required();
  norms->add_option("weight", b, "Weight spec (or matrix with --matrix)")->required();
  norms->add_option("--mode", mode, "roumieu or beurling");
  norms->add_option("--j", j, "Norm index j (or l)")->check(CLI::PositiveNumber);
  norms->add_flag("--matrix", matrix, "Use the entry of a weight matrix");

  auto* classify = app.add_subcommand("classify", "Decide whether the weight gives a trivial space");
  classify->add_option("weight", a, "Weight spec")->required();
  classify->add_option("--case", cse, "beurling or roumieu")->required();

  auto* report = app.add_subcommand("report", "Run a verification suite");
  report->add_option("--suite", suite, "paper-claims or invariants")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    RunConfig cfg = load_run_config();
    if (truncation) cfg.truncation = *truncation;
    if (t_max) cfg.grid.t_max = *t_max;
    cfg.validate();

    if (*check_seq) return cmd_check_seq(a, conds, cfg);
    if (*check_weight) return cmd_check_weight(a, conds, cfg);
    if (*relate) return cmd_relate(a, b, rel, matrix, weights, mode, cfg);
    if (*conjugate) return cmd_conjugate(a, emit, emit_curve, s_max, s_step, cfg);
    if (*matrix_cmd) return cmd_matrix(a, conds, emit_path, cfg);
    if (*oscillate) return cmd_oscillate(target, Q, stages, tsv_path, cfg);
    if (*norms) return cmd_norms(a, b, mode, j, matrix, cfg);
    if (*classify) return cmd_classify(a, cse, cfg);
    if (*report) return cmd_report(suite, cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
