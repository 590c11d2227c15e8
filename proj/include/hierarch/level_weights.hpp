#pragma once

#include <vector>

#include "hierarch/rational.hpp"

namespace hierarch {

// Unnormalized positive weights over levels 0..L.  Only ratios ever matter
// downstream (truncations, conditional priors), so no global normalization
// is stored; this keeps Poisson weights rational for rational tau.
struct LevelWeights {
  std::vector<Rational> weights;

  // Validates: at least two levels, every weight strictly positive.
  explicit LevelWeights(std::vector<Rational> w);

  int max_level() const { return static_cast<int>(weights.size()) - 1; }

  bool operator==(const LevelWeights&) const = default;
};

// w(t) = tau^t / t!, t = 0..max_level.  The common factor e^{-tau} is
// dropped; every use is scale invariant after normalization.
LevelWeights poisson_weights(const Rational& tau, int max_level);

// Truncation f^k: f^k(t) = w(t) / sum_{l<k} w(l) for t = 0..k-1.
// Sums to one exactly.  Rejects k = 0 and k > max_level.
std::vector<Rational> truncated_weights(const LevelWeights& f, int k);

}  // namespace hierarch
