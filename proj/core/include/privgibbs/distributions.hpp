// Copyright 2026 The privgibbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVGIBBS_DISTRIBUTIONS_HPP_
#define PRIVGIBBS_DISTRIBUTIONS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "privgibbs/rng.hpp"

namespace privgibbs {

// Probability vector: nonnegative entries summing to one (within 1e-12).
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<double> probs);

  double operator[](std::size_t i) const { return probs_[i]; }
  std::size_t size() const { return probs_.size(); }
  const std::vector<double>& values() const { return probs_; }

  auto begin() const { return probs_.begin(); }
  auto end() const { return probs_.end(); }

 private:
  std::vector<double> probs_;
};

// Laplace(loc, scale), sampled by inverting the CDF at a uniform variate.
double sample_laplace(double loc, double scale, Rng& rng);

// log density of Laplace(loc, scale) at z: -log(2*scale) - |z - loc|/scale.
double laplace_log_density(double z, double loc, double scale);

double sample_normal(double mean, double stddev, Rng& rng);

// Gamma(shape, 1) via the Marsaglia-Tsang squeeze; shape boost below 1.
double sample_gamma(double shape, Rng& rng);

// Dirichlet(alpha) as normalized independent Gamma variates.
SimplexVector sample_dirichlet(std::span<const double> alpha, Rng& rng);

// Category index in [0, probs.size()) by CDF inversion.
int sample_categorical(const SimplexVector& probs, Rng& rng);

// Category index from unnormalized log-weights (may contain -inf).
int sample_categorical_logits(std::span<const double> log_weights, Rng& rng);

// Counts of n independent categorical draws.
std::vector<std::int64_t> sample_multinomial(std::int64_t n,
                                             const SimplexVector& probs,
                                             Rng& rng);

// Draw from N(mean, cov) using the lower Cholesky factor of cov.
// Throws NumericalError if cov is not positive definite.
Eigen::VectorXd sample_mvnormal(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& cov, Rng& rng);

}  // namespace privgibbs

#endif  // PRIVGIBBS_DISTRIBUTIONS_HPP_
