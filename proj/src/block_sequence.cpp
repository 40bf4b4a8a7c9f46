#include "ultragrowth/block_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ultragrowth {
namespace {

// sum_{i=1}^{L} (mu + i b) in the order that keeps L*L from overflowing
double block_sum(double mu, double b, double L) {
  return L * mu + (b * L) * (L + 1.0) / 2.0;
}

}  // namespace

BlockSequence::BlockSequence(std::vector<double> prefix, std::vector<Block> blocks,
                             std::string name)
    : prefix_(std::move(prefix)), blocks_(std::move(blocks)), name_(std::move(name)) {
  if (blocks_.empty()) throw std::invalid_argument("BlockSequence: no blocks");
  if (prefix_.empty() ||
      BigIndex(static_cast<long long>(prefix_.size()) - 1) != blocks_.front().start)
    throw std::invalid_argument("BlockSequence: prefix must end at the first block start");
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Block& b = blocks_[k];
    if (b.end < b.start) throw std::invalid_argument("BlockSequence: empty block");
    if (!std::isfinite(b.log_beta))
      throw std::invalid_argument("BlockSequence: non-finite log_beta");
    if (k > 0 && b.start != blocks_[k - 1].end + 1)
      throw std::invalid_argument("BlockSequence: blocks not contiguous");
  }
  const std::size_t s = prefix_.size() - 1;
  double mu = s == 0 ? 0.0 : prefix_[s] - prefix_[s - 1];
  double lm = prefix_[s];
  for (const Block& b : blocks_) {
    start_mu_.push_back(mu);
    start_m_.push_back(lm);
    const double L = to_double(b.end - b.start + 1);
    lm += block_sum(mu, b.log_beta, L);
    mu += L * b.log_beta;
  }
  last_ = blocks_.back().end + 1;
}

std::size_t BlockSequence::block_of(const BigIndex& p) const {
  // first block with end + 1 >= p
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), p,
                             [](const Block& b, const BigIndex& x) { return b.end + 1 < x; });
  return static_cast<std::size_t>(it - blocks_.begin());
}

std::pair<double, double> BlockSequence::eval(const BigIndex& p) const {
  if (p < 0) throw std::out_of_range("BlockSequence: negative index");
  if (p > last_)
    throw std::out_of_range("BlockSequence " + name_ + ": index " + p.str() +
                            " beyond coverage " + last_.str());
  if (p < BigIndex(static_cast<long long>(prefix_.size()))) {
    const auto i = static_cast<std::size_t>(p.convert_to<long long>());
    return {i == 0 ? 0.0 : prefix_[i] - prefix_[i - 1], prefix_[i]};
  }
  const std::size_t k = block_of(p);
  const Block& b = blocks_[k];
  const double L = to_double(p - b.start);
  return {start_mu_[k] + L * b.log_beta, start_m_[k] + block_sum(start_mu_[k], b.log_beta, L)};
}

double BlockSequence::log_mu(const BigIndex& p) const { return eval(p).first; }

double BlockSequence::log_m(const BigIndex& p) const { return eval(p).second; }

BigIndex BlockSequence::count_mu_le(double log_t) const {
  // prefix quotients, assumed nondecreasing
  const std::size_t s = prefix_.size() - 1;
  std::size_t c = 0;
  for (std::size_t i = 1; i <= s; ++i) {
    if (prefix_[i] - prefix_[i - 1] > log_t) return BigIndex(static_cast<long long>(c));
    ++c;
  }
  // blocks: mu at index p in block k is start_mu_[k] + (p - start) * beta
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Block& b = blocks_[k];
    const double end_mu = start_mu_[k] + to_double(b.end + 1 - b.start) * b.log_beta;
    if (end_mu <= log_t && k + 1 < blocks_.size()) continue;
    BigIndex len = b.end + 1 - b.start;
    BigIndex L;
    if (b.log_beta <= 0) {
      L = end_mu <= log_t ? len : BigIndex(0);
    } else {
      const double x = (log_t - start_mu_[k]) / b.log_beta;
      L = x <= 0 ? BigIndex(0) : (x >= to_double(len) ? len : floor_to_index(x));
      const auto ok = [&](const BigIndex& l) { return log_mu(b.start + l) <= log_t; };
      // gallop to a bracket lo <= answer < hi, then bisect
      BigIndex lo = L, hi = L + 1, step = 1;
      if (!ok(L)) {
        hi = L;
        do {
          lo = hi > step ? hi - step : BigIndex(0);
          if (ok(lo) || lo == 0) break;
          hi = lo;
          step *= 2;
        } while (true);
        if (!ok(lo)) hi = lo;
      } else {
        while (hi <= len && ok(hi)) {
          lo = hi;
          hi = std::min(BigIndex(hi + step), BigIndex(len + 1));
          step *= 2;
        }
      }
      while (hi - lo > 1) {
        const BigIndex mid = lo + (hi - lo) / 2;
        (ok(mid) ? lo : hi) = mid;
      }
      L = lo;
    }
    return b.start + L;
  }
  return last_;
}

LogSequence BlockSequence::head(int truncation) const {
  BigIndex n = std::min(BigIndex(truncation), last_);
  const auto P = static_cast<std::size_t>(n.convert_to<long long>());
  std::vector<double> v(P + 1);
  for (std::size_t p = 0; p <= P; ++p) v[p] = log_m(BigIndex(static_cast<long long>(p)));
  return LogSequence(std::move(v), name_, Provenance::oscillator);
}

}  // namespace ultragrowth
