#include "ultragrowth/verdict.hpp"

#include <stdexcept>

namespace ultragrowth {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Status status_from_string(std::string_view s) {
  if (s == "holds") return Status::holds;
  if (s == "fails") return Status::fails;
  if (s == "inconclusive") return Status::inconclusive;
  throw std::invalid_argument("unknown status: " + std::string(s));
}

Verdict Verdict::make_holds(std::map<std::string, double> witness, double lo,
                            double hi, std::string detail) {
  Verdict v;
  v.status = Status::holds;
  v.witness = std::move(witness);
  v.window_lo = lo;
  v.window_hi = hi;
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::make_fails(std::vector<double> counterexample, double lo,
                            double hi, std::string detail) {
  Verdict v;
  v.status = Status::fails;
  v.counterexample = std::move(counterexample);
  v.window_lo = lo;
  v.window_hi = hi;
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::make_inconclusive(double lo, double hi, std::string detail) {
  Verdict v;
  v.status = Status::inconclusive;
  v.window_lo = lo;
  v.window_hi = hi;
  v.detail = std::move(detail);
  return v;
}

Status worst(Status a, Status b) {
  if (a == Status::fails || b == Status::fails) return Status::fails;
  if (a == Status::inconclusive || b == Status::inconclusive)
    return Status::inconclusive;
  return Status::holds;
}

Verdict conjunction(const std::vector<std::pair<std::string, Verdict>>& parts) {
  Verdict out;
  out.status = Status::holds;
  if (parts.empty()) return out;
  out.window_lo = parts.front().second.window_lo;
  out.window_hi = parts.front().second.window_hi;
  const Verdict* cause = nullptr;
  for (const auto& [name, v] : parts) {
    for (const auto& [k, w] : v.witness) out.witness[name + "." + k] = w;
    const Status next = worst(out.status, v.status);
    if (next != out.status || (cause == nullptr && v.status != Status::holds)) {
      out.status = next;
      cause = &v;
      out.counterexample = v.counterexample;
      out.detail = name + ": " + v.detail;
    }
  }
  return out;
}

}  // namespace ultragrowth
