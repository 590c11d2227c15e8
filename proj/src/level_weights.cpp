#include "hierarch/level_weights.hpp"

#include <stdexcept>

namespace hierarch {

LevelWeights::LevelWeights(std::vector<Rational> w) : weights(std::move(w)) {
  if (weights.size() < 2) {
    throw std::invalid_argument("level weights need at least levels 0 and 1");
  }
  for (const Rational& x : weights) {
    if (x <= 0) throw std::invalid_argument("level weights must be strictly positive");
  }
}

LevelWeights poisson_weights(const Rational& tau, int max_level) {
  if (tau <= 0) throw std::invalid_argument("poisson parameter must be positive");
  if (max_level < 1) throw std::invalid_argument("max_level must be at least 1");
  std::vector<Rational> w;
  w.reserve(max_level + 1);
  Rational term = 1;
  w.push_back(term);
  for (int t = 1; t <= max_level; ++t) {
    term = term * tau / t;
    w.push_back(term);
  }
  return LevelWeights(std::move(w));
}

std::vector<Rational> truncated_weights(const LevelWeights& f, int k) {
  if (k < 1) throw std::invalid_argument("truncation index must be at least 1");
  if (k > f.max_level()) throw std::invalid_argument("truncation index exceeds max level");
  Rational total = 0;
  for (int t = 0; t < k; ++t) total += f.weights[t];
  std::vector<Rational> out;
  out.reserve(k);
  for (int t = 0; t < k; ++t) out.push_back(f.weights[t] / total);
  return out;
}

}  // namespace hierarch
