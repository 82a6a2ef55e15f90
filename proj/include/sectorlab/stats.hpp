#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "sectorlab/error.hpp"

namespace sectorlab {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw InputError("mean of empty range");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Unbiased sample variance (denominator n-1).
inline double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw InputError("variance needs at least two samples");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

inline double stdev(std::span<const double> xs) {
  return std::sqrt(sample_variance(xs));
}

/// Pearson correlation; nullopt when either input has zero variance.
inline std::optional<double> pearson(std::span<const double> a,
                                     std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("pearson: length mismatch");
  if (a.size() < 2) throw InputError("pearson needs at least two samples");
  const double ma = mean(a), mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  return sab / std::sqrt(saa * sbb);
}

/// 1-based ranks with ties replaced by their average rank.
inline std::vector<double> average_ranks(std::span<const double> xs) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

/// Empirical quantile by linear interpolation of order statistics
/// (h = (n-1)p convention). Input must be sorted ascending and nonempty.
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InputError("quantile of empty range");
  p = std::clamp(p, 0.0, 1.0);
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto j = static_cast<std::size_t>(h);
  if (j + 1 >= sorted.size()) return sorted.back();
  const double g = h - static_cast<double>(j);
  return sorted[j] + g * (sorted[j + 1] - sorted[j]);
}

inline double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

/// Sample covariance of the columns of `obs` (rows are observations),
/// denominator rows-1.
inline Eigen::MatrixXd covariance_matrix(
    const Eigen::Ref<const Eigen::MatrixXd>& obs) {
  const auto rows = obs.rows();
  if (rows < 2) throw InputError("covariance needs at least two observations");
  Eigen::MatrixXd centered = obs.rowwise() - obs.colwise().mean();
  return (centered.transpose() * centered) / static_cast<double>(rows - 1);
}

/// Pearson correlation matrix of the columns of `obs`. A column whose values
/// are all equal has no defined correlation; its off-diagonal entries are set
/// to 0, its diagonal to 1, and its index is appended to `zero_variance_cols`
/// when provided.
inline Eigen::MatrixXd correlation_matrix(
    const Eigen::Ref<const Eigen::MatrixXd>& obs,
    std::vector<int>* zero_variance_cols = nullptr) {
  const auto rows = obs.rows();
  const auto cols = obs.cols();
  if (rows < 2) throw InputError("correlation needs at least two observations");

  std::vector<bool> constant(static_cast<std::size_t>(cols), false);
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (obs.col(j).maxCoeff() == obs.col(j).minCoeff()) {
      constant[static_cast<std::size_t>(j)] = true;
      if (zero_variance_cols) zero_variance_cols->push_back(static_cast<int>(j));
    }
  }

  Eigen::MatrixXd centered = obs.rowwise() - obs.colwise().mean();
  Eigen::VectorXd norms(cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    norms(j) = constant[static_cast<std::size_t>(j)] ? 0.0 : centered.col(j).norm();

  // Upper triangle mirrored below so the result is symmetric bit for bit.
  Eigen::MatrixXd gram = centered.transpose() * centered;
  Eigen::MatrixXd corr = Eigen::MatrixXd::Identity(cols, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index k = j + 1; k < cols; ++k) {
      const double r = (norms(j) > 0.0 && norms(k) > 0.0)
                           ? gram(j, k) / (norms(j) * norms(k))
                           : 0.0;
      corr(j, k) = r;
      corr(k, j) = r;
    }
  }
  return corr;
}

}  // namespace sectorlab
