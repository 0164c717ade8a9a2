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

#include "privgibbs/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "privgibbs/errors.hpp"

namespace privgibbs {

SimplexVector::SimplexVector(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("SimplexVector: empty probability vector");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("SimplexVector: negative or NaN entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("SimplexVector: entries do not sum to 1");
  }
}

double sample_laplace(double loc, double scale, Rng& rng) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("sample_laplace: scale must be positive");
  }
  const double u = rng.uniform_open() - 0.5;  // (-1/2, 1/2)
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return loc - scale * sign * std::log1p(-2.0 * std::abs(u));
}

double laplace_log_density(double z, double loc, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("laplace_log_density: scale must be positive");
  }
  return -std::log(2.0 * scale) - std::abs(z - loc) / scale;
}

double sample_normal(double mean, double stddev, Rng& rng) {
  // Box-Muller, cosine branch only; two uniforms per variate.
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
}

double sample_gamma(double shape, Rng& rng) {
  if (!(shape > 0.0)) {
    throw std::invalid_argument("sample_gamma: shape must be positive");
  }
  if (shape < 1.0) {
    // Gamma(a) = Gamma(a+1) * U^(1/a)
    const double boost = std::pow(rng.uniform_open(), 1.0 / shape);
    return sample_gamma(shape + 1.0, rng) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(0.0, 1.0, rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return d * v;
    }
  }
}

SimplexVector sample_dirichlet(std::span<const double> alpha, Rng& rng) {
  if (alpha.empty()) {
    throw std::invalid_argument("sample_dirichlet: empty concentration");
  }
  std::vector<double> draws(alpha.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > 0.0)) {
      throw std::invalid_argument(
          "sample_dirichlet: concentrations must be positive");
    }
    draws[i] = sample_gamma(alpha[i], rng);
    sum += draws[i];
  }
  for (double& d : draws) d /= sum;
  return SimplexVector(std::move(draws));
}

int sample_categorical(const SimplexVector& probs, Rng& rng) {
  const double u = rng.uniform();
  double cum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    cum += probs[i];
    if (u < cum) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;  // guards rounding at u ~ 1
}

int sample_categorical_logits(std::span<const double> log_weights, Rng& rng) {
  if (log_weights.empty()) {
    throw std::invalid_argument("sample_categorical_logits: empty weights");
  }
  double max_lw = -std::numeric_limits<double>::infinity();
  for (double lw : log_weights) max_lw = std::max(max_lw, lw);
  if (!std::isfinite(max_lw)) {
    throw std::invalid_argument(
        "sample_categorical_logits: all weights are zero");
  }
  double total = 0.0;
  for (double lw : log_weights) total += std::exp(lw - max_lw);
  const double u = rng.uniform() * total;
  double cum = 0.0;
  for (std::size_t i = 0; i < log_weights.size(); ++i) {
    cum += std::exp(log_weights[i] - max_lw);
    if (u < cum) return static_cast<int>(i);
  }
  return static_cast<int>(log_weights.size()) - 1;
}

std::vector<std::int64_t> sample_multinomial(std::int64_t n,
                                             const SimplexVector& probs,
                                             Rng& rng) {
  if (n < 0) {
    throw std::invalid_argument("sample_multinomial: negative count");
  }
  std::vector<std::int64_t> counts(probs.size(), 0);
  for (std::int64_t draw = 0; draw < n; ++draw) {
    ++counts[static_cast<std::size_t>(sample_categorical(probs, rng))];
  }
  return counts;
}

Eigen::VectorXd sample_mvnormal(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& cov, Rng& rng) {
  if (cov.rows() != cov.cols() || cov.rows() != mean.size()) {
    throw std::invalid_argument("sample_mvnormal: dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw NumericalError(
        "sample_mvnormal: covariance is not positive definite");
  }
  Eigen::VectorXd z(mean.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    z[i] = sample_normal(0.0, 1.0, rng);
  }
  return mean + llt.matrixL() * z;
}

}  // namespace privgibbs
