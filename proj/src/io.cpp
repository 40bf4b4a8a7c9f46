#include "ultragrowth/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_number(std::string_view s, const std::string& where) {
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw FormatError(where + ": not a number: '" + std::string(s) + "'");
  return x;
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing key '" + key + "'");
  return *it;
}

std::string string_at(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) throw FormatError(where + "/" + key + ": expected a string");
  return v.get<std::string>();
}

Provenance provenance_from(const std::string& kind, const std::string& where) {
  for (auto p : {Provenance::explicit_values, Provenance::gevrey,
                 Provenance::generated_from_weight, Provenance::oscillator})
    if (to_string(p) == kind) return p;
  throw FormatError(where + "/kind: unknown sequence kind '" + kind + "'");
}

template <class F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

std::string lambda_key(double l) { return short_number(l); }

}  // namespace

Json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_number(j.get<std::string>(), where);
  throw FormatError(where + ": expected a number");
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(origin + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

Json to_json(const LogSequence& m) {
  Json j;
  j["name"] = m.name();
  j["kind"] = to_string(m.provenance());
  if (m.provenance() == Provenance::gevrey) j["s"] = m.gevrey_order();
  Json vals = Json::array();
  for (double x : m.logm()) vals.push_back(number_json(x));
  j["log_values"] = std::move(vals);
  return j;
}

LogSequence sequence_from_json(const Json& j, const std::string& origin, int default_truncation) {
  const std::string name = j.contains("name") ? string_at(j, "name", origin) : origin;
  const Provenance kind = provenance_from(string_at(j, "kind", origin), origin);
  if (kind == Provenance::gevrey && !j.contains("log_values")) {
    const double s = number_from_json(require(j, "s", origin), origin + "/s");
    int P = default_truncation;
    if (j.contains("truncation")) {
      const Json& t = j["truncation"];
      if (!t.is_number_integer()) throw FormatError(origin + "/truncation: expected an integer");
      P = t.get<int>();
    }
    return wrap(origin, [&] { return make_gevrey(s, P); });
  }
  const Json& vals = require(j, "log_values", origin);
  if (!vals.is_array()) throw FormatError(origin + "/log_values: expected an array");
  std::vector<double> v;
  v.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    v.push_back(number_from_json(vals[i], origin + "/log_values/" + std::to_string(i)));
  const double s = j.contains("s") ? number_from_json(j["s"], origin + "/s") : 0.0;
  return wrap(origin, [&] { return LogSequence(std::move(v), name, kind, s); });
}

LogSequence load_sequence(const std::string& path, int default_truncation) {
  return sequence_from_json(load_json(path), path, default_truncation);
}

Json to_json(const WeightMatrix& m) {
  Json entries = Json::object();
  for (const auto& [l, seq] : m.entries()) entries[lambda_key(l)] = to_json(seq);
  return Json{{"name", m.name()}, {"entries", std::move(entries)}};
}

WeightMatrix matrix_from_json(const Json& j, const std::string& origin) {
  const std::string name = j.contains("name") ? string_at(j, "name", origin) : origin;
  const Json& entries = require(j, "entries", origin);
  if (!entries.is_object()) throw FormatError(origin + "/entries: expected an object");
  std::map<double, LogSequence> m;
  for (const auto& [key, val] : entries.items()) {
    const std::string where = origin + "/entries/" + key;
    const double l = parse_number(key, where);
    m.emplace(l, sequence_from_json(val, where, 0));
  }
  return wrap(origin, [&] { return WeightMatrix(std::move(m), name); });
}

WeightMatrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path), path); }

Json to_json(const CoefficientFamily& c) {
  Json j{{"kind", to_string(c.kind())}};
  switch (c.kind()) {
    case CoeffKind::explicit_values:
      j["values"] = c.values();
      break;
    case CoeffKind::weight_witness:
      j["weight"] = c.weight()->spec();
      j["support"] = c.support();
      break;
    case CoeffKind::kronecker:
      j["i"] = c.index();
      break;
  }
  return j;
}

CoefficientFamily coefficients_from_json(const Json& j, const std::string& origin) {
  const std::string kind = string_at(j, "kind", origin);
  const CoeffKind k = wrap(origin + "/kind", [&] { return coeff_kind_from_string(kind); });
  switch (k) {
    case CoeffKind::explicit_values: {
      const Json& vals = require(j, "values", origin);
      if (!vals.is_array()) throw FormatError(origin + "/values: expected an array");
      std::vector<double> v;
      for (std::size_t i = 0; i < vals.size(); ++i)
        v.push_back(number_from_json(vals[i], origin + "/values/" + std::to_string(i)));
      return wrap(origin, [&] { return CoefficientFamily::explicit_values(std::move(v)); });
    }
    case CoeffKind::weight_witness: {
      const WeightFn w = wrap(origin + "/weight", [&] {
        return parse_weight_spec(string_at(j, "weight", origin));
      });
      long long K = CoefficientFamily::kDefaultSupport;
      if (j.contains("support")) {
        if (!j["support"].is_number_integer())
          throw FormatError(origin + "/support: expected an integer");
        K = j["support"].get<long long>();
      }
      return wrap(origin, [&] { return CoefficientFamily::weight_witness(w, K); });
    }
    case CoeffKind::kronecker: {
      const Json& i = require(j, "i", origin);
      if (!i.is_number_integer()) throw FormatError(origin + "/i: expected an integer");
      return wrap(origin, [&] { return CoefficientFamily::kronecker(i.get<long long>()); });
    }
  }
  throw FormatError(origin + ": unreachable coefficient kind");
}

CoefficientFamily load_coefficients(const std::string& path) {
  return coefficients_from_json(load_json(path), path);
}

WeightFn parse_weight_spec(std::string_view spec, int truncation) {
  const std::string where = "weight spec '" + std::string(spec) + "'";
  if (spec == "log1p") return WeightFn::shifted_log();
  if (spec == "logtrunc") return WeightFn::trunc_log();
  bool raw = false;
  std::string_view s = spec;
  if (s.starts_with("raw:")) {
    raw = true;
    s.remove_prefix(4);
  }
  if (s.starts_with("t^")) {
    const double a = parse_number(s.substr(2), where);
    return wrap(where, [&] { return WeightFn::power(a, !raw); });
  }
  if (raw) throw FormatError(where + ": raw: applies to t^a only");
  if (s.starts_with("gevrey:")) {
    const double g = parse_number(s.substr(7), where);
    if (!(g > 0) || !std::isfinite(g)) throw FormatError(where + ": order must be positive");
    return WeightFn::associated(std::make_shared<GevreySource>(g), "gevrey:" + short_number(g));
  }
  if (s.starts_with("assoc:")) {
    const std::string path(s.substr(6));
    auto seq = std::make_shared<const LogSequence>(load_sequence(path, truncation));
    return WeightFn::associated(std::make_shared<LogSequenceSource>(seq), "assoc:" + path);
  }
  throw FormatError(where + ": expected t^a, raw:t^a, log1p, logtrunc, gevrey:<s> or assoc:<file>");
}

std::shared_ptr<const SequenceSource> parse_sequence_spec(std::string_view spec, int truncation) {
  if (spec.starts_with("gevrey:")) {
    const std::string where = "sequence spec '" + std::string(spec) + "'";
    const double g = parse_number(spec.substr(7), where);
    if (!(g > 0) || !std::isfinite(g)) throw FormatError(where + ": order must be positive");
    return std::make_shared<GevreySource>(g);
  }
  return std::make_shared<LogSequenceSource>(load_sequence(std::string(spec), truncation));
}

LogSequence materialize_sequence_spec(std::string_view spec, int truncation) {
  if (spec.starts_with("gevrey:")) {
    const double g = parse_number(spec.substr(7), "sequence spec '" + std::string(spec) + "'");
    return wrap(std::string(spec), [&] { return make_gevrey(g, truncation); });
  }
  return load_sequence(std::string(spec), truncation);
}

void write_curve_tsv(std::ostream& out, const WeightFn& w, const std::vector<double>& ts) {
  out << "# t\tw(t)\n";
  for (double t : ts) out << short_number(t) << '\t' << short_number(w(t)) << '\n';
}

WeightFn read_curve_tsv(std::istream& in, const std::string& origin, bool normalized) {
  std::vector<double> t, v;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (tab == std::string::npos) throw FormatError(where + ": expected two tab-separated columns");
    t.push_back(parse_number(std::string_view(line).substr(0, tab), where));
    v.push_back(parse_number(std::string_view(line).substr(tab + 1), where));
  }
  return wrap(origin, [&] { return WeightFn::sampled(std::move(t), std::move(v), normalized); });
}

void write_conjugate_tsv(std::ostream& out, const ConjugateTable& table) {
  out << "# s\tvalue\n";
  for (std::size_t i = 0; i < table.s_grid.size(); ++i)
    out << short_number(table.s_grid[i]) << '\t' << short_number(table.values[i]) << '\n';
}

Json to_json(const Verdict& v) {
  Json w = Json::object();
  for (const auto& [k, x] : v.witness) w[k] = number_json(x);
  Json ce = Json::array();
  for (double x : v.counterexample) ce.push_back(number_json(x));
  Json j{{"status", to_string(v.status)},
         {"witness", std::move(w)},
         {"window", Json::array({number_json(v.window_lo), number_json(v.window_hi)})}};
  if (!v.counterexample.empty()) j["counterexample"] = std::move(ce);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Json to_json(const RelationReport& r) {
  Json x = Json::array(), y = Json::array();
  for (double a : r.abscissae) x.push_back(number_json(a));
  for (double a : r.ratio_trace) y.push_back(number_json(a));
  return Json{{"relation", to_string(r.relation)},
              {"verdict", to_json(r.verdict)},
              {"liminf_est", number_json(r.liminf_est)},
              {"limsup_est", number_json(r.limsup_est)},
              {"abscissae", std::move(x)},
              {"ratio_trace", std::move(y)}};
}

Json to_json(const ConjugateTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.s_grid.size(); ++i)
    rows.push_back(Json::array({number_json(t.s_grid[i]), number_json(t.values[i])}));
  return Json{{"weight", t.source.spec()},
              {"finite_threshold", number_json(t.finite_threshold)},
              {"table", std::move(rows)}};
}

Json to_json(const NormResult& r) {
  Json j{{"log_value", number_json(r.log_value)},
         {"value", number_json(r.value())},
         {"argmax", r.argmax},
         {"tail_rising", r.tail_rising},
         {"saturated", r.saturated}};
  if (r.hypothesis) j["o_t2_hypothesis"] = to_string(*r.hypothesis);
  return j;
}

Json to_json(const DominationReport& r) {
  return Json{{"verdict", to_json(r.verdict)}, {"l", r.l},
              {"log_C", number_json(r.log_C)}, {"C1", number_json(r.C1)},
              {"C2", number_json(r.C2)},       {"a", number_json(r.a)},
              {"b", number_json(r.b)}};
}

Json to_json(const TrivialityReport& r) {
  return Json{{"verdict", to_string(r.result)}, {"evidence", to_json(r.evidence)}};
}

Json to_json(const OscillatorPlan& p) {
  Json anchors = Json::array();
  for (const auto& k : p.anchors) anchors.push_back(k.str());
  Json alpha = Json::array();
  for (double a : p.log_alpha) alpha.push_back(number_json(a));
  return Json{{"Q", p.Q},
              {"J", p.J},
              {"eps_hat", number_json(p.eps_hat)},
              {"log1p_eps", number_json(p.log1p_eps)},
              {"B", number_json(p.B)},
              {"A_hat", number_json(p.A_hat)},
              {"A_cap", number_json(p.A_cap)},
              {"n", p.n},
              {"m", p.m},
              {"anchors", std::move(anchors)},
              {"log_alpha", std::move(alpha)}};
}

Json to_json(const OscillatorResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) {
    const double d = s.log_mu - s.log_nu;
    trace.push_back(Json{{"j", s.j},
                         {"k", s.k.str()},
                         {"log_mu", number_json(s.log_mu)},
                         {"log_nu", number_json(s.log_nu)},
                         {"log_ratio", number_json(d)},
                         {"ratio", number_json(std::exp(d))},
                         {"case", s.stage_case},
                         {"n", s.n}});
  }
  return Json{{"sequence", r.M->name()},
              {"target", r.target->name()},
              {"plan", to_json(r.plan)},
              {"anchors", std::move(trace)}};
}

}  // namespace ultragrowth
