#include "ultragrowth/config.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ultragrowth {

double GridSpec::log_step() const {
  return std::log(10.0) / static_cast<double>(points_per_decade);
}

std::vector<double> GridSpec::log_grid() const { return log_grid(t_min, t_max); }

std::vector<double> GridSpec::log_grid(double lo, double hi) const {
  lo = std::max(lo, t_min);
  hi = std::min(hi, t_max);
  std::vector<double> out;
  if (!(lo <= hi)) return out;
  const double step = log_step();
  const double u0 = std::log(lo);
  const double u1 = std::log(hi);
  const auto n = static_cast<std::size_t>(std::floor((u1 - u0) / step + 1e-9));
  out.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(std::exp(u0 + step * i));
  if (out.back() < hi * (1 - 1e-12)) out.push_back(hi);
  return out;
}

void RunConfig::validate() const {
  if (truncation < 8) throw std::invalid_argument("truncation must be >= 8");
  if (!(grid.t_min > 0) || !(grid.t_max > grid.t_min) || grid.points_per_decade < 1)
    throw std::invalid_argument("invalid t-grid");
  if (lambdas.empty()) throw std::invalid_argument("lambda grid is empty");
  for (double l : lambdas)
    if (!(l > 0)) throw std::invalid_argument("lambdas must be positive");
  if (!(tol.log_tol > 0) || !(tol.roundtrip_tol > 0) || !(tol.stability > 0) ||
      !(tol.nqa_delta > 0))
    throw std::invalid_argument("tolerances must be positive");
}

std::vector<double> RunConfig::lambdas_with_doubles() const {
  std::vector<double> out = lambdas;
  for (double l : lambdas) out.push_back(2 * l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RunConfig parse_run_config(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "truncation") {
      c.truncation = value.get<int>();
    } else if (key == "t_min") {
      c.grid.t_min = value.get<double>();
    } else if (key == "t_max") {
      c.grid.t_max = value.get<double>();
    } else if (key == "points_per_decade") {
      c.grid.points_per_decade = value.get<int>();
    } else if (key == "lambdas") {
      c.lambdas = value.get<std::vector<double>>();
    } else if (key == "log_tol") {
      c.tol.log_tol = value.get<double>();
    } else if (key == "roundtrip_tol") {
      c.tol.roundtrip_tol = value.get<double>();
    } else if (key == "stability") {
      c.tol.stability = value.get<double>();
    } else if (key == "nqa_delta") {
      c.tol.nqa_delta = value.get<double>();
    } else if (key == "format") {
      const auto f = value.get<std::string>();
      if (f == "json") c.format = OutputFormat::json;
      else if (f == "tsv") c.format = OutputFormat::tsv;
      else throw std::invalid_argument("format must be json or tsv");
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  c.validate();
  return c;
}

RunConfig load_run_config() {
  const char* path = std::getenv("ULTRAGROWTH_CONFIG");
  if (path == nullptr || *path == '\0') return RunConfig{};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("cannot open config ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

}  // namespace ultragrowth
