#include "fracflux/weights.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracflux {

GrunwaldTable GrunwaldTable::build(double alpha, double dx, std::size_t n) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("fractional order must lie in (0, 1], got " +
                            std::to_string(alpha));
  }
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw std::domain_error("grid spacing must be positive and finite");
  }
  if (n == 0) {
    throw std::domain_error("weight table needs at least one interval");
  }

  // Recurrence and running sum are carried in long double; the partial sums
  // decay toward zero through cancellation when alpha is close to 1.
  const long double a = alpha;
  const long double scale = std::pow(static_cast<long double>(dx), 1.0L - a);

  std::vector<double> g(n + 1), partial(n + 1), w(n + 1);
  long double gj = 1.0L;
  long double sum = 1.0L;
  g[0] = 1.0;
  partial[0] = 1.0;
  w[0] = static_cast<double>(scale);
  for (std::size_t j = 1; j <= n; ++j) {
    const long double jl = static_cast<long double>(j);
    gj *= (jl - 1.0L - a) / jl;
    sum += gj;
    g[j] = static_cast<double>(gj);
    partial[j] = static_cast<double>(sum);
    w[j] = static_cast<double>(scale * sum);
  }
  return GrunwaldTable(alpha, dx, std::move(g), std::move(partial),
                       std::move(w));
}

double GrunwaldTable::partial_g_sum(std::size_t j) const {
  if (j >= partial_.size()) {
    throw std::out_of_range("partial_g_sum index " + std::to_string(j) +
                            " exceeds table length " +
                            std::to_string(partial_.size()));
  }
  return partial_[j];
}

}  // namespace fracflux
