#pragma once

#include "ultragrowth/big_index.hpp"
#include "ultragrowth/log_sequence.hpp"
#include "ultragrowth/sequence_source.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ultragrowth {

/// log mu_{i+1} = log mu_i + log_beta for start <= i <= end.
struct Block {
  BigIndex start;
  BigIndex end;
  double log_beta = 0.0;
};

struct Anchor {
  BigIndex index;
  double log_mu = 0.0;
  double log_m = 0.0;
};

/// Sequence given by explicit values M_0..M_s followed by geometric quotient
/// blocks. Evaluation at any covered index costs O(log #blocks) through the
/// arithmetic-series closed form, so indices far beyond any materializable
/// range are fine.
class BlockSequence final : public SequenceSource {
 public:
  /// `prefix` holds log M_0..log M_s where s = blocks.front().start. Blocks
  /// must be contiguous and nonempty.
  BlockSequence(std::vector<double> prefix, std::vector<Block> blocks, std::string name);

  std::string name() const override { return name_; }
  std::optional<BigIndex> last_index() const override { return last_; }
  double log_mu(const BigIndex& p) const override;
  double log_m(const BigIndex& p) const override;
  BigIndex count_mu_le(double log_t) const override;

  /// (log mu_p, log M_p); throws std::out_of_range beyond coverage.
  std::pair<double, double> eval(const BigIndex& p) const;

  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Anchor>& anchors() const { return anchors_; }
  void set_anchors(std::vector<Anchor> anchors) { anchors_ = std::move(anchors); }

  /// Materialized head 0..min(P, last_index()) as a LogSequence; entries are
  /// the values eval() returns.
  LogSequence head(int truncation) const;

 private:
  std::size_t block_of(const BigIndex& p) const;

  std::vector<double> prefix_;
  std::vector<Block> blocks_;
  // log mu and log M at each block start
  std::vector<double> start_mu_;
  std::vector<double> start_m_;
  BigIndex last_;
  std::vector<Anchor> anchors_;
  std::string name_;
};

}  // namespace ultragrowth
