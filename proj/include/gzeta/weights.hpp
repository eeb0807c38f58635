#pragma once

#include <cstdint>
#include <vector>

namespace gzeta {

/// Degrees (a_1, ..., a_r) of the generators of a positively graded ring.
class WeightSeq {
 public:
  /// Throws std::invalid_argument when empty or when some weight is < 1.
  explicit WeightSeq(std::vector<long> weights);

  const std::vector<long>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  long operator[](std::size_t i) const { return weights_[i]; }
  /// lcm(a_1, ..., a_r)
  long period() const { return period_; }
  long sum() const;
  bool is_standard() const;

  /// Same weights followed by `count` extra copies of 1.
  WeightSeq with_unit_weights(std::size_t count) const;

  friend bool operator==(const WeightSeq&, const WeightSeq&) = default;

 private:
  std::vector<long> weights_;
  long period_ = 1;
};

}  // namespace gzeta
