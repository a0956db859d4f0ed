#ifndef FRACFLUX_WEIGHTS_H
#define FRACFLUX_WEIGHTS_H

#include <cstddef>
#include <span>
#include <vector>

namespace fracflux {

/// Shifted Grunwald coefficients g_j and the cumulative gradient weights
///
///   W_j = dx^(1-alpha) * (g_0 + ... + g_j),   j = 0..n
///
/// used by every non-local face flux. Immutable once built; share freely.
///
/// For 0 < alpha <= 1 the g_j (j >= 1) are non-positive and the W_j are
/// non-negative and non-increasing. At alpha = 1 the table degenerates to
/// g = (1, -1, 0, ...), W = (1, 0, 0, ...), i.e. the Fourier stencil.
class GrunwaldTable {
 public:
  /// Throws std::domain_error unless 0 < alpha <= 1, dx > 0, n >= 1.
  static GrunwaldTable build(double alpha, double dx, std::size_t n);

  double alpha() const noexcept { return alpha_; }
  double dx() const noexcept { return dx_; }
  /// Number of intervals; g and w each hold n + 1 entries.
  std::size_t n() const noexcept { return g_.size() - 1; }

  std::span<const double> g() const noexcept { return g_; }
  std::span<const double> w() const noexcept { return w_; }

  /// g_0 + ... + g_j. Throws std::out_of_range for j > n.
  double partial_g_sum(std::size_t j) const;

 private:
  GrunwaldTable(double alpha, double dx, std::vector<double> g,
                std::vector<double> partial, std::vector<double> w)
      : alpha_(alpha), dx_(dx), g_(std::move(g)),
        partial_(std::move(partial)), w_(std::move(w)) {}

  double alpha_;
  double dx_;
  std::vector<double> g_;
  std::vector<double> partial_;
  std::vector<double> w_;
};

}  // namespace fracflux

#endif  // FRACFLUX_WEIGHTS_H
